#include "treesets/separation_system.hpp"

#include <algorithm>
#include <numeric>

#include "treesets/error.hpp"

namespace treesets {

SeparationSystem SeparationSystem::build(std::span<const NamePair> inverse_pairs,
                                         std::span<const NamePair> relations) {
  SeparationSystem sys;
  sys.names_.reserve(2 * inverse_pairs.size());
  for (const auto& [a, b] : inverse_pairs) {
    if (a.empty() || b.empty()) {
      throw Error(ErrorCode::involution_clash, "element ids must be nonempty");
    }
    if (a == b) {
      throw Error(ErrorCode::involution_clash, "element '" + a + "' paired with itself");
    }
    for (const auto& id : {a, b}) {
      if (!sys.lookup_.emplace(id, sys.names_.size()).second) {
        throw Error(ErrorCode::involution_clash, "element '" + id + "' declared twice");
      }
      sys.names_.push_back(id);
    }
  }
  const std::size_t n = sys.names_.size();
  sys.inverse_.resize(n);
  for (ElementIndex x = 0; x < n; ++x) sys.inverse_[x] = x ^ 1U;

  sys.leq_.assign(n * n, 0);
  for (ElementIndex x = 0; x < n; ++x) sys.leq_[x * n + x] = 1;
  for (const auto& [lo, hi] : relations) {
    const ElementIndex x = sys.index_of(lo);
    const ElementIndex y = sys.index_of(hi);
    sys.leq_[x * n + y] = 1;
    sys.leq_[sys.inverse_[y] * n + sys.inverse_[x]] = 1;
  }

  // Warshall closure.
  for (ElementIndex k = 0; k < n; ++k) {
    for (ElementIndex i = 0; i < n; ++i) {
      if (!sys.leq_[i * n + k]) continue;
      const std::uint8_t* row_k = &sys.leq_[k * n];
      std::uint8_t* row_i = &sys.leq_[i * n];
      for (ElementIndex j = 0; j < n; ++j) row_i[j] |= row_k[j];
    }
  }

  for (ElementIndex i = 0; i < n; ++i) {
    for (ElementIndex j = i + 1; j < n; ++j) {
      if (sys.leq_[i * n + j] && sys.leq_[j * n + i]) {
        throw Error(ErrorCode::not_a_partial_order,
                    "cycle between '" + sys.names_[i] + "' and '" + sys.names_[j] + "'");
      }
    }
  }
  return sys;
}

std::optional<ElementIndex> SeparationSystem::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

ElementIndex SeparationSystem::index_of(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw Error(ErrorCode::unknown_element, "no element '" + std::string(name) + "'");
}

std::vector<NamePair> SeparationSystem::inverse_pairs() const {
  std::vector<NamePair> out;
  out.reserve(separation_count());
  for (SeparationIndex s = 0; s < separation_count(); ++s) {
    out.emplace_back(names_[2 * s], names_[2 * s + 1]);
  }
  return out;
}

std::vector<NamePair> SeparationSystem::cover_relations() const {
  const std::size_t n = size();
  std::vector<NamePair> out;
  for (ElementIndex x = 0; x < n; ++x) {
    for (ElementIndex y = 0; y < n; ++y) {
      if (!less(x, y)) continue;
      bool covered = true;
      for (ElementIndex z = 0; z < n && covered; ++z) {
        if (less(x, z) && less(z, y)) covered = false;
      }
      if (covered) out.emplace_back(names_[x], names_[y]);
    }
  }
  return out;
}

SeparationSystem SeparationSystem::induced(std::span<const ElementIndex> subset) const {
  std::vector<bool> in(size(), false);
  for (ElementIndex x : subset) in.at(x) = true;
  for (ElementIndex x : subset) {
    if (!in[inverse(x)]) {
      throw Error(ErrorCode::invalid_argument,
                  "subset not closed under involution at '" + names_[x] + "'");
    }
  }
  SeparationSystem out;
  std::vector<ElementIndex> old_of;
  for (SeparationIndex s = 0; s < separation_count(); ++s) {
    if (!in[2 * s]) continue;
    for (ElementIndex x : {2 * s, 2 * s + 1}) {
      out.lookup_.emplace(names_[x], out.names_.size());
      out.names_.push_back(names_[x]);
      old_of.push_back(x);
    }
  }
  const std::size_t m = out.names_.size();
  out.inverse_.resize(m);
  for (ElementIndex x = 0; x < m; ++x) out.inverse_[x] = x ^ 1U;
  out.leq_.assign(m * m, 0);
  for (ElementIndex i = 0; i < m; ++i) {
    for (ElementIndex j = 0; j < m; ++j) out.leq_[i * m + j] = leq_[old_of[i] * size() + old_of[j]];
  }
  return out;
}

SeparationSystem SeparationSystem::renamed(std::span<const std::string> names) const {
  if (names.size() != size()) {
    throw Error(ErrorCode::invalid_argument, "rename table has wrong size");
  }
  SeparationSystem out = *this;
  out.lookup_.clear();
  for (ElementIndex x = 0; x < size(); ++x) {
    out.names_[x] = names[x];
    if (names[x].empty() || !out.lookup_.emplace(names[x], x).second) {
      throw Error(ErrorCode::involution_clash, "duplicate or empty name '" + names[x] + "'");
    }
  }
  return out;
}

std::vector<ElementIndex> SeparationSystem::elements_by_name() const {
  std::vector<ElementIndex> order(size());
  std::iota(order.begin(), order.end(), ElementIndex{0});
  std::sort(order.begin(), order.end(),
            [&](ElementIndex a, ElementIndex b) { return names_[a] < names_[b]; });
  return order;
}

namespace {

std::optional<ElementIndex> triviality_witness(const SeparationSystem& sys, ElementIndex x) {
  for (ElementIndex r = 0; r < sys.size(); ++r) {
    if (sys.separation_of(r) == sys.separation_of(x)) continue;
    if (sys.leq(x, r) && sys.leq(x, sys.inverse(r))) return r;
  }
  return std::nullopt;
}

}  // namespace

ElementClassification classify(const SeparationSystem& sys, ElementIndex x) {
  if (x >= sys.size()) {
    throw Error(ErrorCode::unknown_element, "element index out of range");
  }
  const ElementIndex xs = sys.inverse(x);
  ElementClassification c;
  c.small = sys.leq(x, xs);
  c.co_small = sys.leq(xs, x);
  c.trivial_witness = triviality_witness(sys, x);
  c.trivial = c.trivial_witness.has_value();
  c.co_trivial_witness = triviality_witness(sys, xs);
  c.co_trivial = c.co_trivial_witness.has_value();
  c.regular = !c.small && !c.co_small;
  return c;
}

bool nested(const SeparationSystem& sys, ElementIndex s, ElementIndex r) {
  if (s >= sys.size() || r >= sys.size()) {
    throw Error(ErrorCode::unknown_element, "element index out of range");
  }
  const ElementIndex ss = sys.inverse(s);
  const ElementIndex rs = sys.inverse(r);
  return sys.comparable(s, r) || sys.comparable(s, rs) || sys.comparable(ss, r) ||
         sys.comparable(ss, rs);
}

TreeSetReport validate_tree_set(const SeparationSystem& sys) {
  TreeSetReport report;
  const std::size_t seps = sys.separation_count();
  for (SeparationIndex a = 0; a < seps; ++a) {
    for (SeparationIndex b = a + 1; b < seps; ++b) {
      const ElementIndex x = sys.orientations(a).first;
      const ElementIndex y = sys.orientations(b).first;
      if (!nested(sys, x, y)) report.crossing_pairs.emplace_back(x, y);
    }
  }
  for (ElementIndex x = 0; x < sys.size(); ++x) {
    const auto c = classify(sys, x);
    if (c.trivial) report.trivial_elements.push_back(x);
    if (c.small) report.small_elements.push_back(x);
  }
  report.is_nested = report.crossing_pairs.empty();
  report.is_tree_set = report.is_nested && report.trivial_elements.empty();
  report.is_regular = report.is_tree_set && report.small_elements.empty();
  return report;
}

std::string_view to_string(IsoFailureKind kind) {
  switch (kind) {
    case IsoFailureKind::not_bijective: return "NotBijective";
    case IsoFailureKind::involution_not_preserved: return "InvolutionNotPreserved";
    case IsoFailureKind::order_not_preserved: return "OrderNotPreserved";
    case IsoFailureKind::not_nested: return "DomainNotNested";
    case IsoFailureKind::not_regular: return "CodomainNotRegular";
  }
  return "Unknown";
}

IsomorphismVerdict check_isomorphism(std::span<const ElementIndex> forward,
                                     const SeparationSystem& domain,
                                     const SeparationSystem& codomain) {
  IsomorphismVerdict v;
  auto fail = [&](IsoFailureKind kind, std::vector<ElementIndex> witness, std::string detail) {
    v.failure = IsoFailure{kind, std::move(witness), std::move(detail)};
    return v;
  };

  if (forward.size() != domain.size()) {
    return fail(IsoFailureKind::not_bijective, {}, "map is not total on the domain");
  }
  if (domain.size() != codomain.size()) {
    return fail(IsoFailureKind::not_bijective, {}, "domain and codomain differ in size");
  }
  std::vector<std::optional<ElementIndex>> preimage(codomain.size());
  for (ElementIndex x = 0; x < domain.size(); ++x) {
    const ElementIndex fx = forward[x];
    if (fx >= codomain.size()) {
      return fail(IsoFailureKind::not_bijective, {x}, "image outside the codomain");
    }
    if (preimage[fx]) {
      return fail(IsoFailureKind::not_bijective, {*preimage[fx], x},
                  "'" + domain.name(*preimage[fx]) + "' and '" + domain.name(x) +
                      "' share an image");
    }
    preimage[fx] = x;
  }
  for (ElementIndex x = 0; x < domain.size(); ++x) {
    if (codomain.inverse(forward[x]) != forward[domain.inverse(x)]) {
      return fail(IsoFailureKind::involution_not_preserved, {x},
                  "f('" + domain.name(x) + "')* != f('" + domain.name(domain.inverse(x)) + "')");
    }
  }
  for (ElementIndex x = 0; x < domain.size(); ++x) {
    for (ElementIndex y = 0; y < domain.size(); ++y) {
      if (domain.leq(x, y) && !codomain.leq(forward[x], forward[y])) {
        return fail(IsoFailureKind::order_not_preserved, {x, y},
                    "'" + domain.name(x) + "' <= '" + domain.name(y) + "' not preserved");
      }
    }
  }

  v.inverse_order_preserving = true;
  for (ElementIndex x = 0; x < domain.size() && v.inverse_order_preserving; ++x) {
    for (ElementIndex y = 0; y < domain.size(); ++y) {
      if (codomain.leq(forward[x], forward[y]) && !domain.leq(x, y)) {
        v.inverse_order_preserving = false;
        break;
      }
    }
  }

  const auto dom = validate_tree_set(domain);
  const auto cod = validate_tree_set(codomain);
  v.domain_nested = dom.is_nested;
  v.codomain_regular = cod.small_elements.empty();
  if (!v.domain_nested) {
    const auto& [a, b] = dom.crossing_pairs.front();
    return fail(IsoFailureKind::not_nested, {a, b}, "domain contains crossing separations");
  }
  if (!v.codomain_regular) {
    return fail(IsoFailureKind::not_regular, {}, "codomain contains a small element");
  }
  v.accepted = true;
  return v;
}

IsomorphismVerdict check_isomorphism(
    const std::vector<std::pair<std::string, std::string>>& forward,
    const SeparationSystem& domain, const SeparationSystem& codomain) {
  std::vector<ElementIndex> map(domain.size(), codomain.size());
  std::vector<bool> seen(domain.size(), false);
  for (const auto& [from, to] : forward) {
    const ElementIndex x = domain.index_of(from);
    seen[x] = true;
    map[x] = codomain.index_of(to);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    IsomorphismVerdict v;
    v.failure = IsoFailure{IsoFailureKind::not_bijective, {}, "map is not total on the domain"};
    return v;
  }
  return check_isomorphism(std::span<const ElementIndex>(map), domain, codomain);
}

}  // namespace treesets
