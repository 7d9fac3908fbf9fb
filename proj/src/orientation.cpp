#include "treesets/orientation.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "treesets/error.hpp"

namespace treesets {

bool PartialOrientation::contains(ElementIndex x) const {
  return std::binary_search(chosen.begin(), chosen.end(), x);
}

bool Orientation::contains(ElementIndex x) const {
  return std::binary_search(chosen.begin(), chosen.end(), x);
}

namespace {

void normalize(const SeparationSystem& sys, std::vector<ElementIndex>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<bool> seen(sys.separation_count(), false);
  for (ElementIndex x : ids) {
    if (x >= sys.size()) throw Error(ErrorCode::unknown_element, "element index out of range");
    const SeparationIndex s = sys.separation_of(x);
    if (seen[s]) {
      throw Error(ErrorCode::double_oriented,
                  "both orientations of '" + sys.name(x) + "' chosen");
    }
    seen[s] = true;
  }
}

bool consistent_with(const SeparationSystem& sys, std::span<const ElementIndex> chosen,
                     ElementIndex x) {
  for (ElementIndex r : chosen) {
    if (sys.separation_of(r) == sys.separation_of(x)) continue;
    if (sys.leq(sys.inverse(x), r) || sys.leq(sys.inverse(r), x)) return false;
  }
  return true;
}

bool is_co_trivial(const SeparationSystem& sys, ElementIndex x) {
  return classify(sys, x).co_trivial;
}

class Extender {
 public:
  Extender(const SeparationSystem& sys, std::optional<ElementIndex> pin,
           std::vector<SeparationIndex> order)
      : sys_(sys), pin_(pin), order_(std::move(order)) {}

  bool legal(const std::vector<ElementIndex>& current, ElementIndex x) const {
    if (!consistent_with(sys_, current, x)) return false;
    if (is_co_trivial(sys_, x)) return false;
    if (pin_ && sys_.less(*pin_, x)) return false;
    return true;
  }

  // Depth-first in preference order. When the extension property holds the
  // first candidate at every level is legal and this never backtracks.
  bool run(std::vector<ElementIndex>& current, std::size_t depth) const {
    if (depth == order_.size()) return true;
    const auto [a, b] = sys_.orientations(order_[depth]);
    for (ElementIndex x : preference(a, b)) {
      if (!legal(current, x)) continue;
      current.push_back(x);
      if (run(current, depth + 1)) return true;
      current.pop_back();
    }
    return false;
  }

 private:
  std::array<ElementIndex, 2> preference(ElementIndex a, ElementIndex b) const {
    if (pin_) {
      const bool a_below = sys_.leq(a, *pin_);
      const bool b_below = sys_.leq(b, *pin_);
      if (a_below != b_below) return a_below ? std::array{a, b} : std::array{b, a};
    }
    return sys_.name(a) < sys_.name(b) ? std::array{a, b} : std::array{b, a};
  }

  const SeparationSystem& sys_;
  std::optional<ElementIndex> pin_;
  std::vector<SeparationIndex> order_;
};

}  // namespace

PartialOrientation make_partial(const SeparationSystem& sys, std::vector<ElementIndex> ids) {
  normalize(sys, ids);
  return PartialOrientation{std::move(ids)};
}

Orientation make_orientation(const SeparationSystem& sys, std::vector<ElementIndex> ids) {
  normalize(sys, ids);
  if (ids.size() != sys.separation_count()) {
    throw Error(ErrorCode::invalid_argument, "orientation leaves a separation unoriented");
  }
  Orientation o;
  o.chosen = std::move(ids);
  o.consistent = is_consistent(sys, o.chosen);
  o.splitting = o.consistent && is_splitting(sys, o);
  return o;
}

bool is_consistent(const SeparationSystem& sys, std::span<const ElementIndex> chosen) {
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      const ElementIndex r = chosen[i];
      const ElementIndex s = chosen[j];
      if (sys.separation_of(r) == sys.separation_of(s)) continue;
      if (sys.leq(sys.inverse(s), r)) return false;
    }
  }
  return true;
}

bool is_consistent(const SeparationSystem& sys, const PartialOrientation& p) {
  std::vector<ElementIndex> ids = p.chosen;
  normalize(sys, ids);
  return is_consistent(sys, ids);
}

Extension extend(const SeparationSystem& sys, const PartialOrientation& p,
                 std::optional<ElementIndex> pin) {
  std::vector<ElementIndex> base = p.chosen;
  if (pin) {
    if (*pin >= sys.size()) throw Error(ErrorCode::unknown_element, "pin out of range");
    base.push_back(*pin);
  }
  normalize(sys, base);

  if (!is_consistent(sys, base)) {
    throw Error(ErrorCode::inconsistent_input, "partial orientation is inconsistent");
  }
  for (ElementIndex x : base) {
    const auto c = classify(sys, x);
    if (c.co_trivial) {
      throw Error(ErrorCode::co_trivial_element,
                  "'" + sys.name(x) + "' is co-trivial with witness '" +
                      sys.name(*c.co_trivial_witness) + "'");
    }
  }
  if (pin) {
    if (classify(sys, *pin).trivial) {
      throw Error(ErrorCode::pin_trivial, "pin '" + sys.name(*pin) + "' is trivial");
    }
    for (ElementIndex x : base) {
      if (sys.less(*pin, x)) {
        throw Error(ErrorCode::pin_not_maximal,
                    "pin '" + sys.name(*pin) + "' lies below '" + sys.name(x) + "'");
      }
    }
  }

  std::vector<bool> decided(sys.separation_count(), false);
  for (ElementIndex x : base) decided[sys.separation_of(x)] = true;
  std::vector<SeparationIndex> order;
  std::vector<bool> queued(sys.separation_count(), false);
  for (ElementIndex x : sys.elements_by_name()) {
    const SeparationIndex s = sys.separation_of(x);
    if (decided[s] || queued[s]) continue;
    queued[s] = true;
    order.push_back(s);
  }

  Extender extender(sys, pin, std::move(order));
  std::vector<ElementIndex> current = base;
  if (!extender.run(current, 0)) {
    throw Error(ErrorCode::construction_failed, "no consistent extension found");
  }

  Extension ext;
  ext.orientation = make_orientation(sys, std::move(current));
  ext.unique = pin.has_value() && validate_tree_set(sys).is_nested;
  return ext;
}

Orientation orientation_of(const SeparationSystem& sys, ElementIndex x) {
  return extend(sys, PartialOrientation{}, x).orientation;
}

Star star_of(const SeparationSystem& sys, const Orientation& o) {
  if (!is_consistent(sys, o.chosen)) {
    throw Error(ErrorCode::inconsistent_orientation, "star of an inconsistent orientation");
  }
  Star star;
  for (ElementIndex x : o.chosen) {
    const bool maximal = std::none_of(o.chosen.begin(), o.chosen.end(),
                                      [&](ElementIndex y) { return sys.less(x, y); });
    if (maximal) star.members.push_back(x);
  }
  return star;
}

bool is_splitting(const SeparationSystem& sys, const Orientation& o) {
  const Star star = star_of(sys, o);
  return std::all_of(o.chosen.begin(), o.chosen.end(), [&](ElementIndex x) {
    return std::any_of(star.members.begin(), star.members.end(),
                       [&](ElementIndex m) { return sys.leq(x, m); });
  });
}

std::vector<Orientation> enumerate_orientations(const SeparationSystem& sys) {
  const std::size_t k = sys.separation_count();
  if (k > kEnumerationLimit) {
    throw Error(ErrorCode::too_large, std::to_string(k) + " separations exceed the limit of " +
                                          std::to_string(kEnumerationLimit));
  }
  std::vector<Orientation> out;
  std::vector<ElementIndex> chosen(k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    for (SeparationIndex s = 0; s < k; ++s) {
      chosen[s] = 2 * s + ((mask >> s) & 1U);
    }
    if (!is_consistent(sys, chosen)) continue;
    Orientation o;
    o.chosen = chosen;
    o.consistent = true;
    o.splitting = is_splitting(sys, o);
    out.push_back(std::move(o));
  }
  return out;
}

bool lies_in_splitting_star(const SeparationSystem& sys, ElementIndex x) {
  return is_splitting(sys, orientation_of(sys, x));
}

}  // namespace treesets
