#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace treesets {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct TreeEdge {
  VertexIndex u = 0;
  VertexIndex v = 0;
  std::string id;
};

struct EdgeInput {
  std::string u;
  std::string v;
  std::string id;  // empty: defaults to "e<position>"
};

/// A finite graph-theoretic tree with named vertices and named edges.
/// Construction checks simplicity, connectivity and acyclicity.
class Tree {
 public:
  Tree() = default;

  /// Throws InvalidTree.
  static Tree build(std::vector<std::string> vertices, const std::vector<EdgeInput>& edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& vertex_name(VertexIndex v) const { return names_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const TreeEdge& edge(EdgeIndex e) const { return edges_.at(e); }
  const std::vector<TreeEdge>& edges() const noexcept { return edges_; }

  std::optional<VertexIndex> find_vertex(std::string_view name) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  std::optional<EdgeIndex> edge_between(VertexIndex a, VertexIndex b) const;

  struct Incidence {
    VertexIndex neighbor;
    EdgeIndex edge;
  };
  const std::vector<Incidence>& incident(VertexIndex v) const { return adjacency_.at(v); }
  std::size_t degree(VertexIndex v) const { return adjacency_.at(v).size(); }

  std::vector<std::size_t> distances_from(VertexIndex source) const;

  /// True for vertices in the component of `T - e` that contains edge(e).v.
  const std::vector<bool>& far_side(EdgeIndex e) const { return far_side_.at(e); }

  std::vector<EdgeInput> edge_inputs() const;

 private:
  std::vector<std::string> names_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<std::vector<bool>> far_side_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

}  // namespace treesets
