#pragma once

#include <optional>
#include <span>
#include <vector>

#include "treesets/separation_system.hpp"

namespace treesets {

/// A set of oriented separations with at most one orientation per separation.
/// `chosen` is kept sorted by element index.
struct PartialOrientation {
  std::vector<ElementIndex> chosen;

  bool contains(ElementIndex x) const;
  friend bool operator==(const PartialOrientation&, const PartialOrientation&) = default;
};

/// An orientation of the whole system together with its consistency and
/// splitting flags.
struct Orientation {
  std::vector<ElementIndex> chosen;
  bool consistent = false;
  bool splitting = false;

  bool contains(ElementIndex x) const;
  friend bool operator==(const Orientation& a, const Orientation& b) { return a.chosen == b.chosen; }
};

struct Star {
  std::vector<ElementIndex> members;
};

/// Sorts and validates ids: throws UnknownElement or DoubleOriented.
PartialOrientation make_partial(const SeparationSystem& sys, std::vector<ElementIndex> ids);

/// Sorts and validates a full orientation and computes its flags. Throws
/// UnknownElement, DoubleOriented, or InvalidArgument when a separation is
/// left unoriented.
Orientation make_orientation(const SeparationSystem& sys, std::vector<ElementIndex> ids);

/// No two chosen r, s of distinct separations with s* <= r.
bool is_consistent(const SeparationSystem& sys, std::span<const ElementIndex> chosen);
bool is_consistent(const SeparationSystem& sys, const PartialOrientation& p);

struct Extension {
  Orientation orientation;
  // Set when the system is nested and a pin was given: the result is then
  // the only consistent orientation extending P with the pin maximal.
  bool unique = false;
};

/// Extends a consistent partial orientation to a consistent orientation of
/// the whole system. With `pin`, the pin is added to P if absent and is
/// maximal in the result.
///
/// Undetermined separations are processed in ascending name order of their
/// smaller-named orientation; an orientation is legal if it keeps the set
/// consistent, is not co-trivial and does not lie strictly above the pin. If
/// both are legal, the one below the pin wins, else the smaller name.
Extension extend(const SeparationSystem& sys, const PartialOrientation& p,
                 std::optional<ElementIndex> pin = std::nullopt);

/// The unique consistent orientation in which `x` is maximal.
Orientation orientation_of(const SeparationSystem& sys, ElementIndex x);

/// Maximal elements of a consistent orientation.
Star star_of(const SeparationSystem& sys, const Orientation& o);

/// Every element of `o` lies below some maximal element of `o`.
bool is_splitting(const SeparationSystem& sys, const Orientation& o);

inline constexpr std::size_t kEnumerationLimit = 20;

/// All consistent orientations, in the order of the candidate bitmask where
/// bit i selects the second declared orientation of separation i.
std::vector<Orientation> enumerate_orientations(const SeparationSystem& sys);

bool lies_in_splitting_star(const SeparationSystem& sys, ElementIndex x);

}  // namespace treesets
