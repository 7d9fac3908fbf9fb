#include "treesets/dot.hpp"

#include <sstream>

namespace treesets {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string clip(const std::string& s, std::size_t width) {
  if (width == 0 || s.size() <= width) return s;
  if (width <= 3) return s.substr(0, width);
  return s.substr(0, width - 3) + "...";
}

}  // namespace

std::string to_dot(const Tree& tree, const std::vector<std::string>& vertex_labels,
                   std::size_t width) {
  std::ostringstream out;
  out << "graph tree {\n";
  for (VertexIndex v = 0; v < tree.vertex_count(); ++v) {
    out << "  " << quote(tree.vertex_name(v));
    if (v < vertex_labels.size()) out << " [label=" << quote(clip(vertex_labels[v], width)) << "]";
    out << ";\n";
  }
  for (const auto& e : tree.edges()) {
    out << "  " << quote(tree.vertex_name(e.u)) << " -- " << quote(tree.vertex_name(e.v))
        << " [label=" << quote(e.id) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const TreeOfTreeSet& t, const SeparationSystem& tau, std::size_t width) {
  std::ostringstream out;
  out << "graph tree_set {\n";
  for (VertexIndex v = 0; v < t.tree.vertex_count(); ++v) {
    out << "  " << quote(t.tree.vertex_name(v)) << " [label=" << quote(clip(t.labels[v], width))
        << "];\n";
  }
  for (EdgeIndex e = 0; e < t.tree.edge_count(); ++e) {
    const auto& edge = t.tree.edge(e);
    const auto [a, b] = tau.orientations(t.edge_separation[e]);
    out << "  " << quote(t.tree.vertex_name(edge.u)) << " -- " << quote(t.tree.vertex_name(edge.v))
        << " [label=" << quote(tau.name(a) + "/" + tau.name(b)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const PresentedTLS& tls, std::uint64_t depth, std::size_t width) {
  const auto& pres = tls.presentation();
  auto id = [&](const VertexDescriptor& d) { return quote(format_descriptor(pres, d)); };
  std::ostringstream out;
  out << "graph tls {\n";
  for (const auto& d : tls.sample_vertices(depth)) {
    out << "  " << id(d) << " [label=" << quote(clip(format_descriptor(pres, d), width));
    if (is_limit_location(pres, d)) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const auto& x : tls.sample_edges(depth)) {
    const auto [tail, head] = tls.endpoints(x.edge, x.index);
    std::string label = pres.format(x);
    label.pop_back();
    out << "  " << id(tail) << " -- " << id(head) << " [label=" << quote(label);
    if (tls.is_limit_edge(x)) out << ", style=dashed";
    out << "];\n";
  }
  // Positions left out by the sample are drawn as one dotted edge.
  for (EdgeIndex e = 0; e < pres.edge_count(); ++e) {
    const auto& l = pres.label(e);
    if (l.kind == LabelKind::finite && l.k <= depth) continue;
    const VertexDescriptor from = canonical(pres, EdgeCut{e, Cut::at(depth)});
    const VertexDescriptor to = l.kind == LabelKind::omega_plus_one
                                    ? VertexDescriptor{EdgeCut{e, Cut::omega()}}
                                    : VertexDescriptor{SkeletonVertex{pres.end(e)}};
    out << "  " << id(from) << " -- " << id(to) << " [label=\"...\", style=dotted];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace treesets
