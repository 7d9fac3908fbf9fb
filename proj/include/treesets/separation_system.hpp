#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace treesets {

// Index of an oriented separation inside a SeparationSystem.
using ElementIndex = std::size_t;
// Index of an unoriented separation (an inverse pair).
using SeparationIndex = std::size_t;

using NamePair = std::pair<std::string, std::string>;

/// A finite poset of oriented separations with an order-reversing involution.
///
/// The order is stored as its full reflexive-transitive closure, so every
/// comparison is a table lookup. Values are immutable once built.
class SeparationSystem {
 public:
  SeparationSystem() = default;

  /// Builds a system from explicit inverse pairs and generating relations
  /// `x <= y`. Every relation is closed under the order-reversing rule
  /// (`y* <= x*` is added) and then under transitivity.
  ///
  /// Throws Error with InvolutionClash, UnknownElement or NotAPartialOrder.
  static SeparationSystem build(std::span<const NamePair> inverse_pairs,
                                std::span<const NamePair> relations);

  std::size_t size() const noexcept { return names_.size(); }
  std::size_t separation_count() const noexcept { return names_.size() / 2; }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(ElementIndex x) const { return names_.at(x); }
  ElementIndex inverse(ElementIndex x) const { return inverse_.at(x); }
  SeparationIndex separation_of(ElementIndex x) const { return x / 2; }

  /// The two orientations of separation `s`, in declaration order.
  std::pair<ElementIndex, ElementIndex> orientations(SeparationIndex s) const {
    return {2 * s, 2 * s + 1};
  }

  std::optional<ElementIndex> find(std::string_view name) const;
  /// Like find() but throws UnknownElement.
  ElementIndex index_of(std::string_view name) const;

  bool leq(ElementIndex x, ElementIndex y) const { return leq_[x * size() + y] != 0; }
  bool less(ElementIndex x, ElementIndex y) const { return x != y && leq(x, y); }
  bool comparable(ElementIndex x, ElementIndex y) const { return leq(x, y) || leq(y, x); }

  std::vector<NamePair> inverse_pairs() const;
  /// Strict cover relations of the closure; rebuilding from these yields the
  /// same order.
  std::vector<NamePair> cover_relations() const;

  /// The subsystem on `subset` with the induced order. The subset must be
  /// closed under the involution; otherwise throws InvalidArgument.
  /// Separations keep their relative order.
  SeparationSystem induced(std::span<const ElementIndex> subset) const;

  /// Same order with element `x` renamed to `names[x]`.
  SeparationSystem renamed(std::span<const std::string> names) const;

  /// Element indices sorted by name; processing order for deterministic
  /// algorithms.
  std::vector<ElementIndex> elements_by_name() const;

 private:
  std::vector<std::string> names_;
  std::vector<ElementIndex> inverse_;
  std::vector<std::uint8_t> leq_;
  std::unordered_map<std::string, ElementIndex> lookup_;
};

struct ElementClassification {
  bool small = false;
  bool co_small = false;
  bool trivial = false;
  std::optional<ElementIndex> trivial_witness;
  bool co_trivial = false;
  std::optional<ElementIndex> co_trivial_witness;
  bool regular = false;
};

/// small: x <= x*. trivial: x <= r and x <= r* for some separation r other
/// than x's own; the witness is an orientation of such an r.
ElementClassification classify(const SeparationSystem& sys, ElementIndex x);

/// True iff some orientation of `s` is comparable with some orientation of
/// `r`. Both arguments may be either orientation of their separation.
bool nested(const SeparationSystem& sys, ElementIndex s, ElementIndex r);

struct TreeSetReport {
  bool is_nested = true;
  bool is_tree_set = true;
  bool is_regular = true;
  // Pairs of canonical orientations of crossing separations.
  std::vector<std::pair<ElementIndex, ElementIndex>> crossing_pairs;
  std::vector<ElementIndex> trivial_elements;
  std::vector<ElementIndex> small_elements;
};

TreeSetReport validate_tree_set(const SeparationSystem& sys);

enum class IsoFailureKind {
  not_bijective,
  involution_not_preserved,
  order_not_preserved,
  not_nested,
  not_regular,
};

std::string_view to_string(IsoFailureKind kind);

struct IsoFailure {
  IsoFailureKind kind;
  // Elements of the domain exhibiting the failure (one or two entries).
  std::vector<ElementIndex> witness;
  std::string detail;
};

struct IsomorphismVerdict {
  bool accepted = false;
  std::optional<IsoFailure> failure;
  bool domain_nested = false;
  bool codomain_regular = false;
  // Direct check that the inverse map is order-preserving; diagnostic only.
  bool inverse_order_preserving = false;
};

/// Decides whether `forward` (indexed by elements of `domain`, values in
/// `codomain`) is an isomorphism of tree sets via the sufficient condition:
/// a bijective homomorphism from a nested system onto a regular one.
IsomorphismVerdict check_isomorphism(std::span<const ElementIndex> forward,
                                     const SeparationSystem& domain,
                                     const SeparationSystem& codomain);

/// Name-keyed convenience overload. Throws UnknownElement.
IsomorphismVerdict check_isomorphism(
    const std::vector<std::pair<std::string, std::string>>& forward,
    const SeparationSystem& domain, const SeparationSystem& codomain);

}  // namespace treesets
