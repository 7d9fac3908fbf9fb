#include "corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "treesets/cli.hpp"

namespace treesets::testing {

namespace {

Tree from_pruefer(std::size_t n, const std::vector<std::size_t>& code) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<EdgeInput> edges;
  if (n == 2) edges.push_back({names[0], names[1], ""});
  if (n > 2) {
    std::vector<std::size_t> degree(n, 1);
    for (auto c : code) ++degree[c];
    for (auto c : code) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.push_back({names[leaf], names[c], ""});
      --degree[leaf];
      --degree[c];
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (degree[i] == 1) rest.push_back(i);
    }
    edges.push_back({names[rest[0]], names[rest[1]], ""});
  }
  return Tree::build(std::move(names), edges);
}

}  // namespace

std::vector<Tree> all_labelled_trees(std::size_t n) {
  std::vector<Tree> out;
  if (n == 0) return out;
  if (n <= 2) {
    out.push_back(from_pruefer(n, {}));
    return out;
  }
  std::vector<std::size_t> code(n - 2, 0);
  while (true) {
    out.push_back(from_pruefer(n, code));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) break;
  }
  return out;
}

std::vector<Tree> exhaustive_trees(std::size_t max_edges) {
  std::vector<Tree> out;
  for (std::size_t n = 1; n <= max_edges + 1; ++n) {
    auto batch = all_labelled_trees(n);
    out.insert(out.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  return out;
}

std::vector<Tree> random_trees(std::size_t count, std::size_t max_edges, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Tree> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % (max_edges + 1);
    out.push_back(treesets::random_tree(n, rng()));
  }
  return out;
}

SeparationSystem relabelled(const SeparationSystem& sys, std::mt19937_64& rng,
                            std::vector<std::string>* names_out) {
  const std::size_t n = sys.separation_count();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> names(sys.size());
  std::vector<NamePair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    const SeparationIndex s = perm[i];
    auto [a, b] = sys.orientations(s);
    if (rng() % 2) std::swap(a, b);
    names[a] = "x" + std::to_string(i) + "L";
    names[b] = "x" + std::to_string(i) + "R";
    pairs.emplace_back(names[a], names[b]);
  }
  std::vector<NamePair> rel;
  for (ElementIndex x = 0; x < sys.size(); ++x) {
    for (ElementIndex y = 0; y < sys.size(); ++y) {
      if (sys.less(x, y)) rel.emplace_back(names[x], names[y]);
    }
  }
  if (names_out) *names_out = names;
  return SeparationSystem::build(pairs, rel);
}

SeparationSystem random_bipartition_system(std::mt19937_64& rng, std::size_t ground,
                                           std::size_t separations) {
  const unsigned full = (1u << ground) - 1;
  // Unordered {A, B} with A u B = V and A != B.
  std::vector<std::pair<unsigned, unsigned>> all;
  for (unsigned a = 0; a <= full; ++a) {
    for (unsigned b = a; b <= full; ++b) {
      if ((a | b) == full && a != b) all.emplace_back(a, b);
    }
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(all.size(), separations));

  std::vector<std::pair<unsigned, unsigned>> elems;
  std::vector<NamePair> pairs;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto [a, b] = all[i];
    if (rng() % 2) std::swap(a, b);
    elems.emplace_back(a, b);
    elems.emplace_back(b, a);
    names.push_back("s" + std::to_string(i));
    names.push_back("s" + std::to_string(i) + "*");
    pairs.emplace_back(names[2 * i], names[2 * i + 1]);
  }
  std::vector<NamePair> rel;
  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t y = 0; y < elems.size(); ++y) {
      if (x == y) continue;
      const auto [a, b] = elems[x];
      const auto [c, d] = elems[y];
      if ((a & ~c) == 0 && (d & ~b) == 0) rel.emplace_back(names[x], names[y]);
    }
  }
  return SeparationSystem::build(pairs, rel);
}

ChainTreePresentation make_presentation(const std::vector<std::string>& vertices,
                                        const std::vector<EdgeSpec>& edges) {
  std::vector<EdgeInput> in;
  for (const auto& e : edges) in.push_back({e.u, e.v, e.id});
  Tree tree = Tree::build(vertices, in);
  std::vector<OrderTypeLabel> labels;
  for (const auto& e : edges) {
    labels.push_back(OrderTypeLabel{e.kind, e.k, *tree.find_vertex(e.start)});
  }
  return ChainTreePresentation::build(std::move(tree), std::move(labels));
}

ChainTreePresentation omega_plus_one_example() {
  return make_presentation({"u", "v"}, {{"u", "v", "e", LabelKind::omega_plus_one, 1, "u"}});
}

std::vector<NamedPresentation> presentation_suite() {
  constexpr auto F = LabelKind::finite;
  constexpr auto W = LabelKind::omega;
  constexpr auto W1 = LabelKind::omega_plus_one;
  std::vector<NamedPresentation> s;
  auto add = [&](std::string name, std::vector<std::string> vs, std::vector<EdgeSpec> es, bool tame) {
    s.push_back({std::move(name), make_presentation(vs, es), tame});
  };
  add("finite_1", {"a", "b"}, {{"a", "b", "e", F, 1, "a"}}, true);
  add("finite_3", {"a", "b"}, {{"a", "b", "e", F, 3, "b"}}, true);
  add("ray", {"a", "b"}, {{"a", "b", "r", W, 1, "a"}}, true);
  add("ray_reversed", {"a", "b"}, {{"a", "b", "r", W, 1, "b"}}, true);
  s.push_back({"omega_plus_one", omega_plus_one_example(), false});
  add("omega_plus_one_reversed", {"u", "v"}, {{"u", "v", "e", W1, 1, "v"}}, false);
  add("path_finite", {"a", "b", "c"}, {{"a", "b", "e", F, 2, "a"}, {"b", "c", "f", F, 1, "c"}}, true);
  add("finite_then_ray", {"a", "b", "c"}, {{"a", "b", "e", F, 2, "a"}, {"b", "c", "r", W, 1, "b"}},
      true);
  add("ray_then_finite", {"a", "b", "c"}, {{"a", "b", "r", W, 1, "a"}, {"b", "c", "f", F, 1, "b"}},
      false);
  add("double_ray", {"a", "b", "c"}, {{"b", "a", "r", W, 1, "b"}, {"b", "c", "q", W, 1, "b"}}, true);
  add("rays_meeting", {"a", "b", "c"}, {{"a", "b", "r", W, 1, "a"}, {"c", "b", "q", W, 1, "c"}},
      false);
  add("star_mixed", {"c", "x", "y", "z"},
      {{"c", "x", "e", F, 2, "x"}, {"c", "y", "t", W1, 1, "c"}, {"c", "z", "r", W, 1, "c"}}, false);
  add("path_with_limit", {"a", "b", "c", "d"},
      {{"a", "b", "e", F, 1, "a"}, {"b", "c", "t", W1, 1, "b"}, {"c", "d", "f", F, 2, "d"}}, false);
  add("star_finite", {"c", "x", "y", "z"},
      {{"c", "x", "e1", F, 1, "c"}, {"c", "y", "e2", F, 2, "y"}, {"c", "z", "e3", F, 3, "c"}}, true);
  add("star_rays", {"c", "p", "q", "r", "s"},
      {{"c", "p", "r1", W, 1, "c"},
       {"c", "q", "r2", W, 1, "c"},
       {"c", "r", "r3", W, 1, "c"},
       {"c", "s", "r4", W, 1, "c"}},
      true);
  add("path_mixed", {"a", "b", "c", "d", "e"},
      {{"a", "b", "r", W, 1, "b"},
       {"b", "c", "f", F, 2, "b"},
       {"c", "d", "t", W1, 1, "c"},
       {"d", "e", "q", W, 1, "d"}},
      false);
  add("spider_inward", {"c", "a1", "a2", "a3"},
      {{"c", "a1", "r1", W, 1, "c"}, {"c", "a2", "r2", W, 1, "a2"}, {"c", "a3", "f", F, 1, "c"}}, false);
  add("caterpillar", {"a", "b", "c", "d", "x", "y"},
      {{"a", "b", "e1", F, 2, "a"},
       {"b", "c", "e2", F, 1, "c"},
       {"c", "d", "e3", F, 3, "c"},
       {"b", "x", "e4", F, 1, "x"},
       {"c", "y", "e5", F, 2, "c"}},
      true);
  add("limit_path", {"a", "b", "c", "d", "e", "f"},
      {{"a", "b", "t1", W1, 1, "a"},
       {"b", "c", "t2", W1, 1, "c"},
       {"c", "d", "t3", W1, 1, "c"},
       {"d", "e", "t4", W1, 1, "e"},
       {"e", "f", "t5", W1, 1, "e"}},
      false);
  add("branching_rays", {"c", "d", "l1", "l2", "l3", "l4"},
      {{"c", "l1", "r1", W, 1, "c"},
       {"c", "d", "f", F, 3, "c"},
       {"d", "l2", "r2", W, 1, "d"},
       {"d", "l3", "r3", W, 1, "d"},
       {"c", "l4", "g", F, 1, "l4"}},
      true);
  add("two_limits", {"a", "b", "c"}, {{"a", "b", "t1", W1, 1, "a"}, {"b", "c", "t2", W1, 1, "c"}},
      false);
  add("ray_from_hub", {"b", "a", "c", "d"},
      {{"b", "a", "e", F, 1, "b"}, {"b", "c", "f", F, 1, "c"}, {"b", "d", "r", W, 1, "b"}}, true);
  add("limits_around_edge", {"a", "b", "c", "d"},
      {{"a", "b", "t1", W1, 1, "b"}, {"b", "c", "m", F, 1, "b"}, {"c", "d", "t2", W1, 1, "c"}}, false);
  add("long_finite_then_rays", {"x", "y", "z", "w"},
      {{"x", "y", "f", F, 4, "y"}, {"y", "z", "r1", W, 1, "y"}, {"x", "w", "r2", W, 1, "x"}}, true);
  return s;
}

ContractedMinor contract_edges(const Tree& host, const std::vector<bool>& contract) {
  std::vector<VertexIndex> root(host.vertex_count());
  std::iota(root.begin(), root.end(), VertexIndex{0});
  const auto find = [&](VertexIndex x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (EdgeIndex e = 0; e < host.edge_count(); ++e) {
    if (!contract[e]) continue;
    const auto a = find(host.edge(e).u);
    const auto b = find(host.edge(e).v);
    root[std::max(a, b)] = std::min(a, b);
  }
  ContractedMinor out;
  std::vector<VertexIndex> minor_of(host.vertex_count());
  std::vector<std::string> names;
  for (VertexIndex h = 0; h < host.vertex_count(); ++h) {
    if (find(h) == h) {
      minor_of[h] = names.size();
      names.push_back(host.vertex_name(h));
      out.model.branch_sets.emplace_back();
    }
  }
  for (VertexIndex h = 0; h < host.vertex_count(); ++h) {
    out.model.branch_sets[minor_of[find(h)]].push_back(h);
  }
  std::vector<EdgeInput> edges;
  for (EdgeIndex e = 0; e < host.edge_count(); ++e) {
    if (contract[e]) continue;
    edges.push_back({names[minor_of[find(host.edge(e).u)]], names[minor_of[find(host.edge(e).v)]],
                     host.edge(e).id});
    out.model.edge_map.push_back(e);
  }
  out.minor = Tree::build(names, edges);
  return out;
}

}  // namespace treesets::testing
