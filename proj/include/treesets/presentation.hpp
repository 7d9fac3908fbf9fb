#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "treesets/separation_system.hpp"
#include "treesets/tree.hpp"

namespace treesets {

enum class LabelKind { finite, omega, omega_plus_one };

std::string_view to_string(LabelKind kind);

/// Order type of the chain of separations along one skeleton edge, read from
/// `start` towards the other endpoint.
struct OrderTypeLabel {
  LabelKind kind = LabelKind::finite;
  std::uint64_t k = 1;  // only meaningful for finite labels
  VertexIndex start = 0;

  friend bool operator==(const OrderTypeLabel&, const OrderTypeLabel&) = default;
};

/// A point of the extended order 0 < 1 < 2 < ... < omega < top. Used both for
/// cuts between chain positions and for the value of a position.
struct Cut {
  enum class Kind : std::uint8_t { finite, omega, top };
  Kind kind = Kind::finite;
  std::uint64_t n = 0;

  static constexpr Cut at(std::uint64_t n) { return Cut{Kind::finite, n}; }
  static constexpr Cut omega() { return Cut{Kind::omega, 0}; }
  static constexpr Cut top() { return Cut{Kind::top, 0}; }
  bool is_finite() const { return kind == Kind::finite; }

  friend auto operator<=>(const Cut&, const Cut&) = default;
};

std::string to_string(Cut c);
/// Accepts a decimal integer, "omega" or "top". Throws InvalidArgument.
Cut parse_cut(std::string_view text);

/// Position of a separation inside its edge's chain: at(n) or the top of an
/// omega+1 chain.
struct ChainIndex {
  bool is_top = false;
  std::uint64_t n = 0;

  static constexpr ChainIndex at(std::uint64_t n) { return ChainIndex{false, n}; }
  static constexpr ChainIndex top() { return ChainIndex{true, 0}; }
  // at(n) sits at cut value n, top at omega.
  Cut value() const { return is_top ? Cut::omega() : Cut::at(n); }

  friend bool operator==(const ChainIndex&, const ChainIndex&) = default;
};

enum class Direction { forward, backward };

inline Direction flip(Direction d) {
  return d == Direction::forward ? Direction::backward : Direction::forward;
}

/// An oriented separation of a presented tree set. Forward elements point
/// away from the label's start vertex.
struct PresentedElement {
  EdgeIndex edge = 0;
  ChainIndex index;
  Direction dir = Direction::forward;

  PresentedElement inverse() const { return {edge, index, flip(dir)}; }
  friend bool operator==(const PresentedElement&, const PresentedElement&) = default;
};

/// A finite tree skeleton whose edges carry order-type labels; it presents a
/// possibly infinite regular tree set.
class ChainTreePresentation {
 public:
  ChainTreePresentation() = default;

  /// `labels` is indexed by skeleton edge. Throws InvalidArgument when a
  /// label does not fit its edge.
  static ChainTreePresentation build(Tree skeleton, std::vector<OrderTypeLabel> labels);

  const Tree& skeleton() const noexcept { return skeleton_; }
  const OrderTypeLabel& label(EdgeIndex e) const { return labels_.at(e); }
  const std::vector<OrderTypeLabel>& labels() const noexcept { return labels_; }
  std::size_t edge_count() const noexcept { return labels_.size(); }

  VertexIndex start(EdgeIndex e) const { return labels_.at(e).start; }
  VertexIndex end(EdgeIndex e) const;
  /// Cut after the last position: k, omega or top.
  Cut max_cut(EdgeIndex e) const;
  /// True if `w` lies in the component of skeleton - e containing end(e).
  bool on_end_side(EdgeIndex e, VertexIndex w) const;

  bool valid(const PresentedElement& x) const;
  /// Throws InvalidIndex.
  void require_valid(const PresentedElement& x) const;

  /// "edge[n]+" / "edge[top]-".
  std::string format(const PresentedElement& x) const;
  /// Throws InvalidIndex for malformed text or positions outside the label.
  PresentedElement parse_element(std::string_view text) const;

 private:
  Tree skeleton_;
  std::vector<OrderTypeLabel> labels_;
};

enum class Comparison { less, greater, equal, incomparable };

std::string_view to_string(Comparison c);

/// Order of the presented tree set: within an edge by position, across edges
/// by the skeleton path rule. Throws InvalidIndex.
Comparison compare(const ChainTreePresentation& pres, const PresentedElement& x,
                   const PresentedElement& y);

/// An omega+1 chain: the forward elements at(0) < at(1) < ... of
/// `omega_edge` together with `upper_bound` above all of them.
struct ChainWitness {
  EdgeIndex omega_edge = 0;
  std::vector<EdgeIndex> edges;  // skeleton edges the chain runs through
  PresentedElement upper_bound;

  /// The first `count` chain elements followed by the upper bound.
  std::vector<PresentedElement> sample(std::uint64_t count) const;
};

struct TameVerdict {
  bool tame = true;
  std::optional<ChainWitness> witness;
};

/// Not tame iff some edge is labelled omega+1, or some omega edge ends at a
/// vertex incident to a further edge.
TameVerdict tame_check(const ChainTreePresentation& pres);

/// Replays a witness: the sampled chain must be strictly increasing and end
/// at the upper bound.
bool witness_holds(const ChainTreePresentation& pres, const ChainWitness& w,
                   std::uint64_t sample_size);

// ---------------------------------------------------------------------------
// Consistent orientations as locations in the skeleton.

struct SkeletonVertex {
  VertexIndex vertex = 0;
  friend bool operator==(const SkeletonVertex&, const SkeletonVertex&) = default;
};

/// The orientation whose forward choices on `edge` are exactly the positions
/// below `cut`.
struct EdgeCut {
  EdgeIndex edge = 0;
  Cut cut;
  friend bool operator==(const EdgeCut&, const EdgeCut&) = default;
};

using VertexDescriptor = std::variant<SkeletonVertex, EdgeCut>;

/// Validates and rewrites cuts at either end of an edge as skeleton
/// vertices. Throws UnknownDescriptor.
VertexDescriptor canonical(const ChainTreePresentation& pres, const VertexDescriptor& d);

std::string format_descriptor(const ChainTreePresentation& pres, const VertexDescriptor& d);
/// "vertexName" or "edge|cut". Throws UnknownDescriptor.
VertexDescriptor parse_descriptor(const ChainTreePresentation& pres, std::string_view text);

/// The cut the orientation `d` induces on edge `e`.
Cut cut_on(const ChainTreePresentation& pres, const VertexDescriptor& d, EdgeIndex e);

/// Membership of `x` in the consistent orientation described by `d`.
bool contains(const ChainTreePresentation& pres, const VertexDescriptor& d,
              const PresentedElement& x);

/// The orientation O(x) in which x is maximal, as a location.
VertexDescriptor head(const ChainTreePresentation& pres, const PresentedElement& x);

/// Maximal elements of the orientation `d`: the nearest element pointing at
/// the location from each direction that has one.
std::vector<PresentedElement> incoming(const ChainTreePresentation& pres,
                                       const VertexDescriptor& d);

/// True if the location is approached by an omega chain with no last element,
/// i.e. its orientation is not splitting.
bool is_limit_location(const ChainTreePresentation& pres, const VertexDescriptor& d);

/// Whether x lies in a splitting star. Throws InvalidIndex.
bool splitting_status(const ChainTreePresentation& pres, const PresentedElement& x);

// ---------------------------------------------------------------------------
// Finite views and transformations.

struct Truncation {
  SeparationSystem system;
  std::vector<PresentedElement> elements;  // by system element

  std::optional<ElementIndex> find(const PresentedElement& x) const;
};

/// Finite sub-tree-set keeping min(depth, k) positions of finite labels, the
/// first `depth` positions of omega labels, and the first `depth` positions
/// plus the top of omega+1 labels. Built as the edge tree set of the
/// subdivided skeleton, independently of compare(). Throws InvalidArgument
/// for depth 0.
Truncation truncate(const ChainTreePresentation& pres, std::uint64_t depth);

/// Positions kept by truncate() for edge `e`.
std::vector<ChainIndex> kept_positions(const ChainTreePresentation& pres, EdgeIndex e,
                                       std::uint64_t depth);

struct Realization {
  ChainTreePresentation tree;
  std::vector<EdgeIndex> first_edge;  // by input edge

  PresentedElement map_element(const ChainTreePresentation& input,
                               const PresentedElement& x) const;
};

/// Subdivides every finite label into single edges; omega labels stay rays.
/// Throws NotTame.
Realization realize_tame_tree(const ChainTreePresentation& pres);

/// Positions p of `edge` with lo <= p.value() < hi.
struct PositionInterval {
  EdgeIndex edge = 0;
  Cut lo;
  Cut hi;
};

/// "e" (whole edge), "e[top]" or "e[lo,hi)". Throws InvalidIntervalSet.
PositionInterval parse_interval(const ChainTreePresentation& pres, std::string_view text);

struct Contraction {
  ChainTreePresentation result;

  struct EdgeFate {
    std::optional<EdgeIndex> new_edge;
    std::vector<std::pair<Cut, Cut>> removed;  // merged finite-part intervals
    bool top_removed = false;
    bool new_label_finite = false;
    std::uint64_t remaining_finite = 0;  // when the finite part is finite
  };
  std::vector<EdgeFate> fate;  // by input edge

  /// Image of an element that survives the contraction.
  std::optional<PresentedElement> map_element(const PresentedElement& x) const;
};

/// Contracts the given positions. Each edge's remaining positions are again a
/// finite, omega or omega+1 chain; edges with nothing left are contracted in
/// the skeleton. Throws InvalidIntervalSet.
Contraction contract(const ChainTreePresentation& pres, const std::vector<PositionInterval>& f);

}  // namespace treesets
