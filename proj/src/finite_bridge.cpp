#include "treesets/finite_bridge.hpp"

#include <algorithm>
#include <map>

#include "treesets/error.hpp"

namespace treesets {

namespace {

std::string default_name(const Tree& tree, EdgeIndex e, bool forward) {
  const auto& edge = tree.edge(e);
  const auto& a = tree.vertex_name(forward ? edge.u : edge.v);
  const auto& b = tree.vertex_name(forward ? edge.v : edge.u);
  return "(" + a + "," + b + ")";
}

std::string orientation_label(const SeparationSystem& sys, const Orientation& o) {
  std::vector<std::string> names;
  names.reserve(o.chosen.size());
  for (ElementIndex x : o.chosen) names.push_back(sys.name(x));
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + "}";
}

}  // namespace

SeparationSystem edge_tree_set(const Tree& tree) { return edge_tree_set(tree, default_name); }

SeparationSystem edge_tree_set(const Tree& tree, const OrientedEdgeNamer& namer) {
  const std::size_t m = tree.edge_count();
  std::vector<NamePair> pairs;
  pairs.reserve(m);
  for (EdgeIndex e = 0; e < m; ++e) pairs.emplace_back(namer(tree, e, true), namer(tree, e, false));

  std::vector<std::vector<std::size_t>> dist(tree.vertex_count());
  for (VertexIndex v = 0; v < tree.vertex_count(); ++v) dist[v] = tree.distances_from(v);

  // (x,y) < (v,w): the edge-to-edge path starts at y and ends at v.
  std::vector<NamePair> relations;
  for (EdgeIndex e = 0; e < m; ++e) {
    for (EdgeIndex f = 0; f < m; ++f) {
      if (e == f) continue;
      for (int de = 0; de < 2; ++de) {
        const VertexIndex x = de ? tree.edge(e).v : tree.edge(e).u;
        const VertexIndex y = de ? tree.edge(e).u : tree.edge(e).v;
        for (int df = 0; df < 2; ++df) {
          const VertexIndex v = df ? tree.edge(f).v : tree.edge(f).u;
          const VertexIndex w = df ? tree.edge(f).u : tree.edge(f).v;
          if (dist[y][v] < dist[x][v] && dist[y][v] < dist[y][w]) {
            relations.emplace_back(de ? pairs[e].second : pairs[e].first,
                                   df ? pairs[f].second : pairs[f].first);
          }
        }
      }
    }
  }
  return SeparationSystem::build(pairs, relations);
}

std::optional<VertexIndex> TreeOfTreeSet::vertex_of(const Orientation& o) const {
  for (VertexIndex v = 0; v < orientations.size(); ++v) {
    if (orientations[v].chosen == o.chosen) return v;
  }
  return std::nullopt;
}

TreeOfTreeSet tree_of(const SeparationSystem& tau) {
  const auto report = validate_tree_set(tau);
  if (!report.is_tree_set) throw Error(ErrorCode::not_a_tree_set, "input is not a tree set");
  if (!report.is_regular) throw Error(ErrorCode::not_regular, "input tree set is not regular");

  std::vector<Orientation> found;
  std::vector<std::size_t> found_of_element(tau.size());
  if (tau.empty()) {
    found.push_back(make_orientation(tau, {}));
  }
  for (ElementIndex x = 0; x < tau.size(); ++x) {
    Orientation o = orientation_of(tau, x);
    auto it = std::find(found.begin(), found.end(), o);
    found_of_element[x] = static_cast<std::size_t>(it - found.begin());
    if (it == found.end()) found.push_back(std::move(o));
  }

  std::vector<std::string> labels;
  for (const auto& o : found) labels.push_back(orientation_label(tau, o));
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  std::vector<VertexIndex> vertex_of_found(found.size());
  for (VertexIndex v = 0; v < order.size(); ++v) vertex_of_found[order[v]] = v;

  TreeOfTreeSet out;
  std::vector<std::string> vertex_names;
  for (VertexIndex v = 0; v < order.size(); ++v) {
    vertex_names.push_back("O" + std::to_string(v));
    out.orientations.push_back(found[order[v]]);
    out.labels.push_back(labels[order[v]]);
  }
  out.vertex_of_element.resize(tau.size());
  for (ElementIndex x = 0; x < tau.size(); ++x) {
    out.vertex_of_element[x] = vertex_of_found[found_of_element[x]];
  }

  std::vector<EdgeInput> edges;
  for (SeparationIndex s = 0; s < tau.separation_count(); ++s) {
    const auto [a, b] = tau.orientations(s);
    edges.push_back(EdgeInput{vertex_names[out.vertex_of_element[b]],
                              vertex_names[out.vertex_of_element[a]], tau.name(a)});
    out.edge_separation.push_back(s);
  }
  try {
    out.tree = Tree::build(std::move(vertex_names), edges);
  } catch (const Error& e) {
    throw Error(ErrorCode::construction_failed,
                std::string("orientation graph is not a tree: ") + e.what());
  }
  return out;
}

std::vector<Orientation> flip_path(const SeparationSystem& tau, const Orientation& from,
                                   const Orientation& to) {
  const Orientation start = make_orientation(tau, from.chosen);
  const Orientation goal = make_orientation(tau, to.chosen);
  if (!start.splitting || !goal.splitting) {
    throw Error(ErrorCode::not_splitting, "flip_path needs splitting orientations");
  }
  std::vector<Orientation> path{start};
  while (!(path.back() == goal)) {
    if (path.size() > tau.separation_count() + 1) {
      throw Error(ErrorCode::construction_failed, "flipping did not terminate");
    }
    const Orientation& current = path.back();
    const Star star = star_of(tau, current);
    std::optional<ElementIndex> flip;
    for (ElementIndex s : star.members) {
      if (goal.contains(tau.inverse(s))) {
        if (flip) throw Error(ErrorCode::construction_failed, "two flippable star elements");
        flip = s;
      }
    }
    if (!flip) throw Error(ErrorCode::construction_failed, "no flippable star element");
    std::vector<ElementIndex> next = current.chosen;
    std::replace(next.begin(), next.end(), *flip, tau.inverse(*flip));
    path.push_back(make_orientation(tau, std::move(next)));
  }
  return path;
}

TreeSetIso roundtrip_tau(const SeparationSystem& tau) {
  const TreeOfTreeSet t = tree_of(tau);
  TreeSetIso iso;
  iso.source = tau;
  iso.target = edge_tree_set(t.tree);
  iso.forward.resize(tau.size());
  for (ElementIndex x = 0; x < tau.size(); ++x) {
    const auto& tail = t.tree.vertex_name(t.vertex_of_element[tau.inverse(x)]);
    const auto& head = t.tree.vertex_name(t.vertex_of_element[x]);
    iso.forward[x] = iso.target.index_of("(" + tail + "," + head + ")");
  }
  iso.verdict = check_isomorphism(iso.forward, iso.source, iso.target);
  iso.certified = iso.verdict.accepted;
  return iso;
}

bool is_tree_isomorphism(std::span<const VertexIndex> forward, const Tree& a, const Tree& b) {
  if (forward.size() != a.vertex_count() || a.vertex_count() != b.vertex_count()) return false;
  std::vector<bool> hit(b.vertex_count(), false);
  for (VertexIndex v : forward) {
    if (v >= b.vertex_count() || hit[v]) return false;
    hit[v] = true;
  }
  if (a.edge_count() != b.edge_count()) return false;
  return std::all_of(a.edges().begin(), a.edges().end(), [&](const TreeEdge& e) {
    return b.edge_between(forward[e.u], forward[e.v]).has_value();
  });
}

TreeIso roundtrip_tree(const Tree& tree) {
  const SeparationSystem tau = edge_tree_set(tree);
  TreeOfTreeSet t = tree_of(tau);
  TreeIso iso;
  iso.source = tree;
  iso.forward.resize(tree.vertex_count(), 0);
  for (VertexIndex v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(v) == 0) continue;  // single-vertex tree
    const auto& inc = tree.incident(v).front();
    const auto& edge = tree.edge(inc.edge);
    // (w,v) is the forward orientation iff edge.v == v.
    const ElementIndex toward_v = 2 * inc.edge + (edge.v == v ? 0 : 1);
    iso.forward[v] = t.vertex_of_element[toward_v];
  }
  iso.target = std::move(t.tree);
  iso.certified = is_tree_isomorphism(iso.forward, iso.source, iso.target);
  return iso;
}

std::optional<std::string> minor_model_problem(const MinorModel& model, const Tree& minor,
                                               const Tree& host, bool require_cover) {
  if (model.branch_sets.size() != minor.vertex_count()) {
    return "branch set count differs from minor vertex count";
  }
  if (model.edge_map.size() != minor.edge_count()) {
    return "edge map is not total on minor edges";
  }
  std::vector<std::optional<VertexIndex>> owner(host.vertex_count());
  for (VertexIndex m = 0; m < minor.vertex_count(); ++m) {
    const auto& set = model.branch_sets[m];
    if (set.empty()) return "branch set of '" + minor.vertex_name(m) + "' is empty";
    for (VertexIndex h : set) {
      if (h >= host.vertex_count()) return "branch set names an unknown host vertex";
      if (owner[h]) return "host vertex '" + host.vertex_name(h) + "' is in two branch sets";
      owner[h] = m;
    }
    // Connectivity inside the host, restricted to the set.
    std::vector<bool> seen(host.vertex_count(), false);
    std::vector<VertexIndex> stack{set.front()};
    seen[set.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const VertexIndex x = stack.back();
      stack.pop_back();
      for (const auto& inc : host.incident(x)) {
        if (seen[inc.neighbor] || owner[inc.neighbor] != m) continue;
        seen[inc.neighbor] = true;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
    if (reached != set.size()) {
      return "branch set of '" + minor.vertex_name(m) + "' is not connected";
    }
  }
  if (require_cover) {
    for (VertexIndex h = 0; h < host.vertex_count(); ++h) {
      if (!owner[h]) return "host vertex '" + host.vertex_name(h) + "' is deleted";
    }
  }
  std::vector<bool> used(host.edge_count(), false);
  for (EdgeIndex e = 0; e < minor.edge_count(); ++e) {
    const EdgeIndex h = model.edge_map[e];
    if (h >= host.edge_count()) return "edge map names an unknown host edge";
    if (used[h]) return "edge map is not injective";
    used[h] = true;
    const auto& me = minor.edge(e);
    const auto& he = host.edge(h);
    const bool straight = owner[he.u] == me.u && owner[he.v] == me.v;
    const bool crossed = owner[he.u] == me.v && owner[he.v] == me.u;
    if (!straight && !crossed) {
      return "host edge '" + he.id + "' does not join the branch sets of minor edge '" + me.id + "'";
    }
  }
  return std::nullopt;
}

SubsetMinor subset_minor(const SeparationSystem& tau1, const SeparationSystem& tau2,
                         std::span<const ElementIndex> inclusion) {
  if (inclusion.size() != tau1.size()) {
    throw Error(ErrorCode::not_a_subset, "inclusion is not total");
  }
  std::vector<bool> hit(tau2.size(), false);
  for (ElementIndex x = 0; x < tau1.size(); ++x) {
    const ElementIndex fx = inclusion[x];
    if (fx >= tau2.size()) throw Error(ErrorCode::not_a_subset, "image outside the superset");
    if (hit[fx]) throw Error(ErrorCode::not_a_subset, "inclusion is not injective");
    hit[fx] = true;
    if (tau2.inverse(fx) != inclusion[tau1.inverse(x)]) {
      throw Error(ErrorCode::not_a_subset,
                  "inclusion does not commute with the involution at '" + tau1.name(x) + "'");
    }
  }
  for (ElementIndex x = 0; x < tau1.size(); ++x) {
    for (ElementIndex y = 0; y < tau1.size(); ++y) {
      if (tau1.leq(x, y) != tau2.leq(inclusion[x], inclusion[y])) {
        throw Error(ErrorCode::not_a_subset, "order differs on '" + tau1.name(x) + "', '" +
                                                 tau1.name(y) + "'");
      }
    }
  }

  SubsetMinor out{tree_of(tau1), tree_of(tau2), {}};
  std::map<std::vector<ElementIndex>, VertexIndex> minor_vertex;
  for (VertexIndex v = 0; v < out.minor.orientations.size(); ++v) {
    minor_vertex.emplace(out.minor.orientations[v].chosen, v);
  }
  std::vector<ElementIndex> preimage(tau2.size(), tau1.size());
  for (ElementIndex x = 0; x < tau1.size(); ++x) preimage[inclusion[x]] = x;

  out.model.branch_sets.resize(out.minor.tree.vertex_count());
  for (VertexIndex h = 0; h < out.host.tree.vertex_count(); ++h) {
    std::vector<ElementIndex> restricted;
    for (ElementIndex y : out.host.orientations[h].chosen) {
      if (preimage[y] < tau1.size()) restricted.push_back(preimage[y]);
    }
    std::sort(restricted.begin(), restricted.end());
    auto it = minor_vertex.find(restricted);
    if (it == minor_vertex.end()) {
      throw Error(ErrorCode::construction_failed,
                  "restriction of host vertex " + out.host.labels[h] + " is not a minor vertex");
    }
    out.model.branch_sets[it->second].push_back(h);
  }
  for (EdgeIndex e = 0; e < out.minor.tree.edge_count(); ++e) {
    const SeparationIndex s = out.minor.edge_separation[e];
    const ElementIndex image = inclusion[tau1.orientations(s).first];
    const SeparationIndex hs = tau2.separation_of(image);
    const auto it = std::find(out.host.edge_separation.begin(), out.host.edge_separation.end(), hs);
    out.model.edge_map.push_back(static_cast<EdgeIndex>(it - out.host.edge_separation.begin()));
  }
  if (auto problem = minor_model_problem(out.model, out.minor.tree, out.host.tree)) {
    throw Error(ErrorCode::construction_failed, "minor model invalid: " + *problem);
  }
  return out;
}

TreeSetIso minor_subset(const MinorModel& model, const Tree& minor, const Tree& host) {
  if (auto problem = minor_model_problem(model, minor, host, true)) {
    throw Error(ErrorCode::invalid_model, *problem);
  }
  std::vector<VertexIndex> owner(host.vertex_count());
  for (VertexIndex m = 0; m < model.branch_sets.size(); ++m) {
    for (VertexIndex h : model.branch_sets[m]) owner[h] = m;
  }

  TreeSetIso iso;
  iso.source = edge_tree_set(minor);
  iso.target = edge_tree_set(host);
  iso.forward.resize(iso.source.size());
  std::vector<ElementIndex> image;
  for (EdgeIndex e = 0; e < minor.edge_count(); ++e) {
    const EdgeIndex h = model.edge_map[e];
    const bool straight = owner[host.edge(h).u] == minor.edge(e).u;
    iso.forward[2 * e] = 2 * h + (straight ? 0 : 1);
    iso.forward[2 * e + 1] = 2 * h + (straight ? 1 : 0);
    image.push_back(2 * h);
    image.push_back(2 * h + 1);
  }

  // Certify onto the image: re-index into the induced subsystem.
  std::sort(image.begin(), image.end());
  const SeparationSystem sub = iso.target.induced(image);
  std::vector<ElementIndex> into_sub(iso.source.size());
  for (ElementIndex x = 0; x < iso.source.size(); ++x) {
    into_sub[x] = sub.index_of(iso.target.name(iso.forward[x]));
  }
  iso.verdict = check_isomorphism(into_sub, iso.source, sub);
  iso.certified = iso.verdict.accepted;
  return iso;
}

}  // namespace treesets
