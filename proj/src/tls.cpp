#include "treesets/tls.hpp"

#include <algorithm>

#include "treesets/error.hpp"

namespace treesets {

bool PresentedTLS::is_limit_edge(const PresentedElement& x) const {
  return pres_.valid(x) && x.index.is_top;
}

std::pair<VertexDescriptor, VertexDescriptor> PresentedTLS::endpoints(EdgeIndex edge,
                                                                      ChainIndex index) const {
  const PresentedElement fwd{edge, index, Direction::forward};
  pres_.require_valid(fwd);
  return {head(pres_, fwd.inverse()), head(pres_, fwd)};
}

std::vector<VertexDescriptor> PresentedTLS::sample_vertices(std::uint64_t depth) const {
  std::vector<VertexDescriptor> out;
  for (VertexIndex v = 0; v < pres_.skeleton().vertex_count(); ++v) {
    out.push_back(SkeletonVertex{v});
  }
  for (const auto& f : cuts_) {
    const std::uint64_t last = f.last_finite ? std::min(*f.last_finite, depth) : depth;
    for (std::uint64_t n = 1; n <= last; ++n) out.push_back(EdgeCut{f.edge, Cut::at(n)});
    if (f.has_omega) out.push_back(EdgeCut{f.edge, Cut::omega()});
  }
  return out;
}

std::vector<PresentedElement> PresentedTLS::sample_edges(std::uint64_t depth) const {
  std::vector<PresentedElement> out;
  for (EdgeIndex e = 0; e < pres_.edge_count(); ++e) {
    for (const auto& i : kept_positions(pres_, e, depth)) out.push_back({e, i, Direction::forward});
  }
  return out;
}

PresentedTLS build_tls(const ChainTreePresentation& pres) {
  PresentedTLS tls;
  tls.pres_ = pres;
  for (EdgeIndex e = 0; e < pres.edge_count(); ++e) {
    const auto& l = pres.label(e);
    CutFamily f{e, std::nullopt, false};
    switch (l.kind) {
      case LabelKind::finite:
        f.last_finite = l.k - 1;
        break;
      case LabelKind::omega:
        break;
      case LabelKind::omega_plus_one:
        f.has_omega = true;
        tls.limit_edges_.push_back({e, ChainIndex::top(), Direction::forward});
        break;
    }
    tls.cuts_.push_back(f);
  }
  return tls;
}

bool in_upper_set(const ChainTreePresentation& pres, const PresentedElement& e, EdgeIndex edge,
                  ChainIndex index) {
  if (edge == e.edge && index == e.index) return false;
  const PresentedElement s{edge, index, Direction::forward};
  return compare(pres, e, s) == Comparison::less ||
         compare(pres, e, s.inverse()) == Comparison::less;
}

bool subbase_member(const PresentedTLS& tls, const TlsPoint& point, const PresentedElement& e,
                    Rational r) {
  const auto& pres = tls.presentation();
  if (r <= 0 || r >= 1) {
    throw Error(ErrorCode::invalid_coordinate, "r must lie strictly between 0 and 1");
  }
  pres.require_valid(e);
  if (const auto* d = std::get_if<VertexDescriptor>(&point)) return contains(pres, *d, e);

  const auto& p = std::get<InnerPoint>(point);
  if (p.x <= 0 || p.x >= 1) {
    throw Error(ErrorCode::invalid_coordinate, "inner coordinate must lie strictly between 0 and 1");
  }
  pres.require_valid({p.edge, p.index, Direction::forward});
  if (p.edge == e.edge && p.index == e.index) {
    return e.dir == Direction::forward ? p.x > r : p.x < r;
  }
  // For the backward orientation this is the set of separations with an
  // orientation below the forward one, taken symmetrically.
  return in_upper_set(pres, e, p.edge, p.index);
}

bool PseudoArc::contains_element(const PresentedElement& x) const {
  const Cut v = x.index.value();
  return std::any_of(segments.begin(), segments.end(), [&](const ArcSegment& s) {
    return s.edge == x.edge && s.direction == x.dir && s.lo <= v && v < s.hi;
  });
}

bool PseudoArc::closure_contains(const ChainTreePresentation& pres,
                                 const VertexDescriptor& d) const {
  for (EdgeIndex e = 0; e < cut_range.size(); ++e) {
    const Cut c = cut_on(pres, d, e);
    if (c < cut_range[e].first || cut_range[e].second < c) return false;
  }
  return true;
}

bool PseudoArc::same_support(const PseudoArc& other) const {
  if (segments.size() != other.segments.size()) return false;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& a = segments[i];
    const auto& b = other.segments[i];
    if (a.edge != b.edge || a.lo != b.lo || a.hi != b.hi) return false;
  }
  return cut_range == other.cut_range;
}

PseudoArc pseudo_arc(const PresentedTLS& tls, const VertexDescriptor& u, const VertexDescriptor& v) {
  const auto& pres = tls.presentation();
  PseudoArc arc{canonical(pres, u), canonical(pres, v), {}, {}};
  if (arc.from == arc.to) {
    throw Error(ErrorCode::invalid_argument, "pseudo-arc endpoints must differ");
  }
  for (EdgeIndex e = 0; e < pres.edge_count(); ++e) {
    const Cut cu = cut_on(pres, arc.from, e);
    const Cut cv = cut_on(pres, arc.to, e);
    arc.cut_range.push_back({std::min(cu, cv), std::max(cu, cv)});
    if (cu == cv) continue;
    arc.segments.push_back(ArcSegment{e, std::min(cu, cv), std::max(cu, cv),
                                      cu < cv ? Direction::forward : Direction::backward});
  }
  return arc;
}

}  // namespace treesets
