#include "treesets/tree.hpp"

#include <algorithm>
#include <queue>

#include "treesets/error.hpp"

namespace treesets {

Tree Tree::build(std::vector<std::string> vertices, const std::vector<EdgeInput>& edges) {
  Tree t;
  if (vertices.empty()) throw Error(ErrorCode::invalid_tree, "a tree needs at least one vertex");
  t.names_ = std::move(vertices);
  for (VertexIndex v = 0; v < t.names_.size(); ++v) {
    if (t.names_[v].empty()) throw Error(ErrorCode::invalid_tree, "empty vertex name");
    if (!t.vertex_lookup_.emplace(t.names_[v], v).second) {
      throw Error(ErrorCode::invalid_tree, "duplicate vertex '" + t.names_[v] + "'");
    }
  }
  t.adjacency_.resize(t.names_.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& in = edges[i];
    auto u = t.find_vertex(in.u);
    auto v = t.find_vertex(in.v);
    if (!u || !v) {
      throw Error(ErrorCode::invalid_tree, "edge references unknown vertex '" +
                                               (u ? in.v : in.u) + "'");
    }
    if (*u == *v) throw Error(ErrorCode::invalid_tree, "loop at '" + in.u + "'");
    if (t.edge_between(*u, *v)) {
      throw Error(ErrorCode::invalid_tree, "parallel edges between '" + in.u + "' and '" + in.v + "'");
    }
    std::string id = in.id.empty() ? "e" + std::to_string(i) : in.id;
    if (!t.edge_lookup_.emplace(id, i).second) {
      throw Error(ErrorCode::invalid_tree, "duplicate edge id '" + id + "'");
    }
    t.edges_.push_back(TreeEdge{*u, *v, std::move(id)});
    t.adjacency_[*u].push_back({*v, i});
    t.adjacency_[*v].push_back({*u, i});
  }
  if (t.edges_.size() + 1 != t.names_.size()) {
    throw Error(ErrorCode::invalid_tree, std::to_string(t.names_.size()) + " vertices but " +
                                             std::to_string(t.edges_.size()) + " edges");
  }
  const auto dist = t.distances_from(0);
  for (VertexIndex v = 0; v < dist.size(); ++v) {
    if (dist[v] == static_cast<std::size_t>(-1)) {
      throw Error(ErrorCode::invalid_tree, "vertex '" + t.names_[v] + "' is unreachable");
    }
  }

  t.far_side_.resize(t.edges_.size());
  for (EdgeIndex e = 0; e < t.edges_.size(); ++e) {
    std::vector<bool> side(t.names_.size(), false);
    std::vector<VertexIndex> stack{t.edges_[e].v};
    side[t.edges_[e].v] = true;
    while (!stack.empty()) {
      const VertexIndex x = stack.back();
      stack.pop_back();
      for (const auto& inc : t.adjacency_[x]) {
        if (inc.edge == e || side[inc.neighbor]) continue;
        side[inc.neighbor] = true;
        stack.push_back(inc.neighbor);
      }
    }
    t.far_side_[e] = std::move(side);
  }
  return t;
}

std::optional<VertexIndex> Tree::find_vertex(std::string_view name) const {
  auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Tree::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Tree::edge_between(VertexIndex a, VertexIndex b) const {
  for (const auto& inc : adjacency_.at(a)) {
    if (inc.neighbor == b) return inc.edge;
  }
  return std::nullopt;
}

std::vector<std::size_t> Tree::distances_from(VertexIndex source) const {
  std::vector<std::size_t> dist(names_.size(), static_cast<std::size_t>(-1));
  std::queue<VertexIndex> queue;
  dist.at(source) = 0;
  queue.push(source);
  while (!queue.empty()) {
    const VertexIndex x = queue.front();
    queue.pop();
    for (const auto& inc : adjacency_[x]) {
      if (dist[inc.neighbor] != static_cast<std::size_t>(-1)) continue;
      dist[inc.neighbor] = dist[x] + 1;
      queue.push(inc.neighbor);
    }
  }
  return dist;
}

std::vector<EdgeInput> Tree::edge_inputs() const {
  std::vector<EdgeInput> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(EdgeInput{names_[e.u], names_[e.v], e.id});
  return out;
}

}  // namespace treesets
