#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "treesets/presentation.hpp"

namespace treesets {

using Rational = boost::rational<std::int64_t>;

/// Interior cuts of one skeleton edge, i.e. the orientations located strictly
/// inside it: finite cuts 1..last (or unbounded), plus the omega cut of an
/// omega+1 edge.
struct CutFamily {
  EdgeIndex edge = 0;
  std::optional<std::uint64_t> last_finite;  // nullopt: unbounded
  bool has_omega = false;
};

/// Combinatorial skeleton of the tree-like space of a presented tree set:
/// vertices are consistent orientations (described by location), edges are
/// separations with their two endpoint orientations.
class PresentedTLS {
 public:
  const ChainTreePresentation& presentation() const noexcept { return pres_; }
  const std::vector<CutFamily>& interior_cuts() const noexcept { return cuts_; }
  /// Forward orientation of every separation sitting at the top of an
  /// omega+1 chain.
  const std::vector<PresentedElement>& limit_edges() const noexcept { return limit_edges_; }
  bool is_limit_edge(const PresentedElement& x) const;

  /// {O(x*), O(x)} for the forward orientation x of the edge.
  std::pair<VertexDescriptor, VertexDescriptor> endpoints(EdgeIndex edge, ChainIndex index) const;

  /// All skeleton vertices, interior finite cuts up to `depth`, omega cuts.
  std::vector<VertexDescriptor> sample_vertices(std::uint64_t depth) const;
  /// Forward orientations of the edges kept by truncate(depth).
  std::vector<PresentedElement> sample_edges(std::uint64_t depth) const;

 private:
  friend PresentedTLS build_tls(const ChainTreePresentation& pres);
  ChainTreePresentation pres_;
  std::vector<CutFamily> cuts_;
  std::vector<PresentedElement> limit_edges_;
};

PresentedTLS build_tls(const ChainTreePresentation& pres);

/// Point (x, e) inside an edge; x is measured from O(e*) towards O(e) for the
/// forward orientation e.
struct InnerPoint {
  EdgeIndex edge = 0;
  ChainIndex index;
  Rational x;
};

using TlsPoint = std::variant<VertexDescriptor, InnerPoint>;

/// Membership of `point` in the sub-base set S(e, r). Throws
/// InvalidCoordinate when r or the point's coordinate leaves (0,1), and
/// InvalidIndex / UnknownDescriptor for invalid references.
bool subbase_member(const PresentedTLS& tls, const TlsPoint& point, const PresentedElement& e,
                    Rational r);

/// Separations s != e of the presentation with an orientation above e.
bool in_upper_set(const ChainTreePresentation& pres, const PresentedElement& e,
                  EdgeIndex edge, ChainIndex index);

struct ArcSegment {
  EdgeIndex edge = 0;
  Cut lo;  // positions with lo <= value < hi
  Cut hi;
  Direction direction = Direction::forward;

  friend bool operator==(const ArcSegment&, const ArcSegment&) = default;
};

/// The chain v \ u as per-edge position intervals, and the vertex set of its
/// closure.
struct PseudoArc {
  VertexDescriptor from;
  VertexDescriptor to;
  std::vector<ArcSegment> segments;
  std::vector<std::pair<Cut, Cut>> cut_range;  // by skeleton edge, closed

  bool contains_element(const PresentedElement& x) const;
  bool closure_contains(const ChainTreePresentation& pres, const VertexDescriptor& d) const;
  /// Same separations regardless of the direction of travel.
  bool same_support(const PseudoArc& other) const;
};

/// Throws UnknownDescriptor, or InvalidArgument if u and v coincide.
PseudoArc pseudo_arc(const PresentedTLS& tls, const VertexDescriptor& u, const VertexDescriptor& v);

}  // namespace treesets
