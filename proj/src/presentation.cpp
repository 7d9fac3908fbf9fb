#include "treesets/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_set>

#include "treesets/error.hpp"
#include "treesets/finite_bridge.hpp"

namespace treesets {

namespace {

std::string fresh_name(const std::unordered_set<std::string>& taken, std::string base) {
  while (taken.count(base)) base += '\'';
  return base;
}

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  if (s.empty()) return std::nullopt;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view to_string(LabelKind kind) {
  switch (kind) {
    case LabelKind::finite: return "finite";
    case LabelKind::omega: return "omega";
    case LabelKind::omega_plus_one: return "omega+1";
  }
  return "?";
}

std::string to_string(Cut c) {
  switch (c.kind) {
    case Cut::Kind::finite: return std::to_string(c.n);
    case Cut::Kind::omega: return "omega";
    case Cut::Kind::top: return "top";
  }
  return "?";
}

Cut parse_cut(std::string_view text) {
  text = trim(text);
  if (text == "omega" || text == "w") return Cut::omega();
  if (text == "top") return Cut::top();
  if (auto n = parse_u64(text)) return Cut::at(*n);
  throw Error(ErrorCode::invalid_argument, "bad cut '" + std::string(text) + "'");
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::less: return "less";
    case Comparison::greater: return "greater";
    case Comparison::equal: return "equal";
    case Comparison::incomparable: return "incomparable";
  }
  return "?";
}

// ---------------------------------------------------------------------------

ChainTreePresentation ChainTreePresentation::build(Tree skeleton,
                                                   std::vector<OrderTypeLabel> labels) {
  if (labels.size() != skeleton.edge_count()) {
    throw Error(ErrorCode::invalid_argument,
                std::to_string(labels.size()) + " labels for " +
                    std::to_string(skeleton.edge_count()) + " edges");
  }
  for (EdgeIndex e = 0; e < labels.size(); ++e) {
    const auto& edge = skeleton.edge(e);
    const auto& l = labels[e];
    if (l.start != edge.u && l.start != edge.v) {
      throw Error(ErrorCode::invalid_argument,
                  "label start of edge '" + edge.id + "' is not one of its endpoints");
    }
    if (l.kind == LabelKind::finite && l.k == 0) {
      throw Error(ErrorCode::invalid_argument, "edge '" + edge.id + "' has an empty finite label");
    }
  }
  ChainTreePresentation p;
  p.skeleton_ = std::move(skeleton);
  p.labels_ = std::move(labels);
  return p;
}

VertexIndex ChainTreePresentation::end(EdgeIndex e) const {
  const auto& edge = skeleton_.edge(e);
  return labels_.at(e).start == edge.u ? edge.v : edge.u;
}

Cut ChainTreePresentation::max_cut(EdgeIndex e) const {
  const auto& l = labels_.at(e);
  switch (l.kind) {
    case LabelKind::finite: return Cut::at(l.k);
    case LabelKind::omega: return Cut::omega();
    case LabelKind::omega_plus_one: return Cut::top();
  }
  return Cut::top();
}

bool ChainTreePresentation::on_end_side(EdgeIndex e, VertexIndex w) const {
  const bool far = skeleton_.far_side(e).at(w);
  return end(e) == skeleton_.edge(e).v ? far : !far;
}

bool ChainTreePresentation::valid(const PresentedElement& x) const {
  if (x.edge >= labels_.size()) return false;
  const auto& l = labels_[x.edge];
  switch (l.kind) {
    case LabelKind::finite: return !x.index.is_top && x.index.n < l.k;
    case LabelKind::omega: return !x.index.is_top;
    case LabelKind::omega_plus_one: return true;
  }
  return false;
}

void ChainTreePresentation::require_valid(const PresentedElement& x) const {
  if (valid(x)) return;
  if (x.edge >= labels_.size()) {
    throw Error(ErrorCode::invalid_index, "edge index " + std::to_string(x.edge) + " out of range");
  }
  throw Error(ErrorCode::invalid_index, "position " + format(x) + " lies outside the edge label");
}

std::string ChainTreePresentation::format(const PresentedElement& x) const {
  std::string out = x.edge < labels_.size() ? skeleton_.edge(x.edge).id : "#" + std::to_string(x.edge);
  out += '[';
  out += x.index.is_top ? std::string("top") : std::to_string(x.index.n);
  out += ']';
  out += x.dir == Direction::forward ? '+' : '-';
  return out;
}

PresentedElement ChainTreePresentation::parse_element(std::string_view text) const {
  const std::string original(text);
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::invalid_index, "'" + original + "': " + why);
  };
  text = trim(text);
  if (text.size() < 4) throw bad("expected edge[position]+ or edge[position]-");
  PresentedElement x;
  if (text.back() == '+') {
    x.dir = Direction::forward;
  } else if (text.back() == '-') {
    x.dir = Direction::backward;
  } else {
    throw bad("missing direction suffix");
  }
  text.remove_suffix(1);
  if (text.back() != ']') throw bad("missing ']'");
  text.remove_suffix(1);
  const auto open = text.rfind('[');
  if (open == std::string_view::npos) throw bad("missing '['");
  const auto id = text.substr(0, open);
  const auto pos = text.substr(open + 1);
  auto e = skeleton_.find_edge(id);
  if (!e) throw bad("unknown edge '" + std::string(id) + "'");
  x.edge = *e;
  if (pos == "top") {
    x.index = ChainIndex::top();
  } else if (auto n = parse_u64(pos)) {
    x.index = ChainIndex::at(*n);
  } else {
    throw bad("bad position '" + std::string(pos) + "'");
  }
  require_valid(x);
  return x;
}

// ---------------------------------------------------------------------------

Comparison compare(const ChainTreePresentation& pres, const PresentedElement& x,
                   const PresentedElement& y) {
  pres.require_valid(x);
  pres.require_valid(y);
  if (x.edge == y.edge) {
    const Cut p = x.index.value();
    const Cut q = y.index.value();
    if (p == q) return x.dir == y.dir ? Comparison::equal : Comparison::incomparable;
    if (x.dir != y.dir) return Comparison::incomparable;
    const bool forward = x.dir == Direction::forward;
    if (p < q) return forward ? Comparison::less : Comparison::greater;
    return forward ? Comparison::greater : Comparison::less;
  }
  const auto& sk = pres.skeleton();
  // Does a point toward b's edge?
  auto toward = [&](const PresentedElement& a, const PresentedElement& b) {
    const bool b_at_end = pres.on_end_side(a.edge, sk.edge(b.edge).u);
    return (a.dir == Direction::forward) == b_at_end;
  };
  const bool x_to_y = toward(x, y);
  const bool y_to_x = toward(y, x);
  if (x_to_y && !y_to_x) return Comparison::less;
  if (!x_to_y && y_to_x) return Comparison::greater;
  return Comparison::incomparable;
}

// ---------------------------------------------------------------------------

std::vector<PresentedElement> ChainWitness::sample(std::uint64_t count) const {
  std::vector<PresentedElement> out;
  out.reserve(count + 1);
  for (std::uint64_t n = 0; n < count; ++n) {
    out.push_back({omega_edge, ChainIndex::at(n), Direction::forward});
  }
  out.push_back(upper_bound);
  return out;
}

TameVerdict tame_check(const ChainTreePresentation& pres) {
  const auto& sk = pres.skeleton();
  for (EdgeIndex e = 0; e < pres.edge_count(); ++e) {
    if (pres.label(e).kind == LabelKind::omega_plus_one) {
      return {false, ChainWitness{e, {e}, {e, ChainIndex::top(), Direction::forward}}};
    }
  }
  for (EdgeIndex e = 0; e < pres.edge_count(); ++e) {
    if (pres.label(e).kind != LabelKind::omega) continue;
    const VertexIndex v = pres.end(e);
    for (const auto& inc : sk.incident(v)) {
      if (inc.edge == e) continue;
      const EdgeIndex f = inc.edge;
      const Direction away = pres.start(f) == v ? Direction::forward : Direction::backward;
      return {false, ChainWitness{e, {e, f}, {f, ChainIndex::at(0), away}}};
    }
  }
  return {true, std::nullopt};
}

bool witness_holds(const ChainTreePresentation& pres, const ChainWitness& w,
                   std::uint64_t sample_size) {
  if (!pres.valid(w.upper_bound) || w.omega_edge >= pres.edge_count()) return false;
  if (pres.label(w.omega_edge).kind == LabelKind::finite) return false;
  const auto chain = w.sample(sample_size);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (compare(pres, chain[i], chain[i + 1]) != Comparison::less) return false;
    if (compare(pres, chain[i], w.upper_bound) != Comparison::less) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

VertexDescriptor canonical(const ChainTreePresentation& pres, const VertexDescriptor& d) {
  if (const auto* sv = std::get_if<SkeletonVertex>(&d)) {
    if (sv->vertex >= pres.skeleton().vertex_count()) {
      throw Error(ErrorCode::unknown_descriptor, "vertex index out of range");
    }
    return d;
  }
  const auto& ec = std::get<EdgeCut>(d);
  if (ec.edge >= pres.edge_count()) {
    throw Error(ErrorCode::unknown_descriptor, "edge index out of range");
  }
  const Cut max = pres.max_cut(ec.edge);
  if (max < ec.cut) {
    throw Error(ErrorCode::unknown_descriptor, "cut " + to_string(ec.cut) + " beyond edge '" +
                                                   pres.skeleton().edge(ec.edge).id + "'");
  }
  if (ec.cut == Cut::at(0)) return SkeletonVertex{pres.start(ec.edge)};
  if (ec.cut == max) return SkeletonVertex{pres.end(ec.edge)};
  return d;
}

std::string format_descriptor(const ChainTreePresentation& pres, const VertexDescriptor& d) {
  if (const auto* sv = std::get_if<SkeletonVertex>(&d)) {
    return pres.skeleton().vertex_name(sv->vertex);
  }
  const auto& ec = std::get<EdgeCut>(d);
  return pres.skeleton().edge(ec.edge).id + "|" + to_string(ec.cut);
}

VertexDescriptor parse_descriptor(const ChainTreePresentation& pres, std::string_view text) {
  text = trim(text);
  const auto bar = text.rfind('|');
  if (bar == std::string_view::npos) {
    auto v = pres.skeleton().find_vertex(text);
    if (!v) throw Error(ErrorCode::unknown_descriptor, "unknown vertex '" + std::string(text) + "'");
    return SkeletonVertex{*v};
  }
  auto e = pres.skeleton().find_edge(text.substr(0, bar));
  if (!e) {
    throw Error(ErrorCode::unknown_descriptor,
                "unknown edge '" + std::string(text.substr(0, bar)) + "'");
  }
  Cut c;
  try {
    c = parse_cut(text.substr(bar + 1));
  } catch (const Error&) {
    throw Error(ErrorCode::unknown_descriptor, "bad cut in '" + std::string(text) + "'");
  }
  return canonical(pres, EdgeCut{*e, c});
}

Cut cut_on(const ChainTreePresentation& pres, const VertexDescriptor& d, EdgeIndex e) {
  const auto c = canonical(pres, d);
  VertexIndex proxy = 0;
  if (const auto* sv = std::get_if<SkeletonVertex>(&c)) {
    proxy = sv->vertex;
  } else {
    const auto& ec = std::get<EdgeCut>(c);
    if (ec.edge == e) return ec.cut;
    proxy = pres.start(ec.edge);
  }
  return pres.on_end_side(e, proxy) ? pres.max_cut(e) : Cut::at(0);
}

bool contains(const ChainTreePresentation& pres, const VertexDescriptor& d,
              const PresentedElement& x) {
  pres.require_valid(x);
  const bool below = x.index.value() < cut_on(pres, d, x.edge);
  return x.dir == Direction::forward ? below : !below;
}

VertexDescriptor head(const ChainTreePresentation& pres, const PresentedElement& x) {
  pres.require_valid(x);
  Cut c;
  if (x.dir == Direction::forward) {
    c = x.index.is_top ? Cut::top() : Cut::at(x.index.n + 1);
  } else {
    c = x.index.is_top ? Cut::omega() : Cut::at(x.index.n);
  }
  return canonical(pres, EdgeCut{x.edge, c});
}

std::vector<PresentedElement> incoming(const ChainTreePresentation& pres,
                                       const VertexDescriptor& d) {
  const auto c = canonical(pres, d);
  std::vector<PresentedElement> out;
  if (const auto* ec = std::get_if<EdgeCut>(&c)) {
    if (ec->cut.is_finite()) {
      out.push_back({ec->edge, ChainIndex::at(ec->cut.n - 1), Direction::forward});
      out.push_back({ec->edge, ChainIndex::at(ec->cut.n), Direction::backward});
    } else {
      out.push_back({ec->edge, ChainIndex::top(), Direction::backward});
    }
    return out;
  }
  const VertexIndex w = std::get<SkeletonVertex>(c).vertex;
  for (const auto& inc : pres.skeleton().incident(w)) {
    const EdgeIndex f = inc.edge;
    if (pres.start(f) == w) {
      out.push_back({f, ChainIndex::at(0), Direction::backward});
      continue;
    }
    const auto& l = pres.label(f);
    if (l.kind == LabelKind::finite) {
      out.push_back({f, ChainIndex::at(l.k - 1), Direction::forward});
    } else if (l.kind == LabelKind::omega_plus_one) {
      out.push_back({f, ChainIndex::top(), Direction::forward});
    }
  }
  return out;
}

bool is_limit_location(const ChainTreePresentation& pres, const VertexDescriptor& d) {
  const auto c = canonical(pres, d);
  if (const auto* ec = std::get_if<EdgeCut>(&c)) return ec->cut == Cut::omega();
  const VertexIndex w = std::get<SkeletonVertex>(c).vertex;
  for (const auto& inc : pres.skeleton().incident(w)) {
    if (pres.label(inc.edge).kind == LabelKind::omega && pres.end(inc.edge) == w) return true;
  }
  return false;
}

bool splitting_status(const ChainTreePresentation& pres, const PresentedElement& x) {
  return !is_limit_location(pres, head(pres, x));
}

// ---------------------------------------------------------------------------

std::optional<ElementIndex> Truncation::find(const PresentedElement& x) const {
  for (ElementIndex i = 0; i < elements.size(); ++i) {
    if (elements[i] == x) return i;
  }
  return std::nullopt;
}

std::vector<ChainIndex> kept_positions(const ChainTreePresentation& pres, EdgeIndex e,
                                       std::uint64_t depth) {
  const auto& l = pres.label(e);
  const std::uint64_t n = l.kind == LabelKind::finite ? std::min(depth, l.k) : depth;
  std::vector<ChainIndex> out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(ChainIndex::at(i));
  if (l.kind == LabelKind::omega_plus_one) out.push_back(ChainIndex::top());
  return out;
}

Truncation truncate(const ChainTreePresentation& pres, std::uint64_t depth) {
  if (depth == 0) throw Error(ErrorCode::invalid_argument, "truncation depth must be positive");
  const auto& sk = pres.skeleton();
  std::vector<std::string> vertices = sk.vertex_names();
  std::unordered_set<std::string> taken(vertices.begin(), vertices.end());
  std::vector<EdgeInput> edges;
  struct Origin {
    EdgeIndex edge;
    ChainIndex index;
  };
  std::vector<Origin> origin;

  for (EdgeIndex e = 0; e < pres.edge_count(); ++e) {
    const auto kept = kept_positions(pres, e, depth);
    std::string prev = sk.vertex_name(pres.start(e));
    for (std::size_t j = 0; j < kept.size(); ++j) {
      std::string next;
      if (j + 1 == kept.size()) {
        next = sk.vertex_name(pres.end(e));
      } else {
        next = fresh_name(taken, sk.edge(e).id + ":" + std::to_string(j + 1));
        taken.insert(next);
        vertices.push_back(next);
      }
      edges.push_back(EdgeInput{prev, next, "t" + std::to_string(edges.size())});
      origin.push_back({e, kept[j]});
      prev = std::move(next);
    }
  }

  const Tree subdivided = Tree::build(std::move(vertices), edges);
  Truncation out;
  out.system = edge_tree_set(subdivided, [&](const Tree&, EdgeIndex i, bool forward) {
    return pres.format({origin[i].edge, origin[i].index,
                        forward ? Direction::forward : Direction::backward});
  });
  out.elements.reserve(2 * origin.size());
  for (const auto& o : origin) {
    out.elements.push_back({o.edge, o.index, Direction::forward});
    out.elements.push_back({o.edge, o.index, Direction::backward});
  }
  return out;
}

// ---------------------------------------------------------------------------

PresentedElement Realization::map_element(const ChainTreePresentation& input,
                                          const PresentedElement& x) const {
  input.require_valid(x);
  if (input.label(x.edge).kind == LabelKind::finite) {
    return {first_edge.at(x.edge) + x.index.n, ChainIndex::at(0), x.dir};
  }
  return {first_edge.at(x.edge), x.index, x.dir};
}

Realization realize_tame_tree(const ChainTreePresentation& pres) {
  const auto verdict = tame_check(pres);
  if (!verdict.tame) {
    const auto& w = *verdict.witness;
    throw Error(ErrorCode::not_tame, "edge '" + pres.skeleton().edge(w.omega_edge).id +
                                         "' carries a chain with an upper bound " +
                                         pres.format(w.upper_bound));
  }
  const auto& sk = pres.skeleton();
  std::vector<std::string> vertices = sk.vertex_names();
  std::unordered_set<std::string> taken(vertices.begin(), vertices.end());
  std::unordered_set<std::string> ids;
  for (const auto& e : sk.edges()) ids.insert(e.id);

  std::vector<EdgeInput> edges;
  std::vector<std::string> starts;  // by new edge, start vertex name
  std::vector<LabelKind> kinds;
  Realization out;
  for (EdgeIndex e = 0; e < pres.edge_count(); ++e) {
    const auto& l = pres.label(e);
    const auto& id = sk.edge(e).id;
    out.first_edge.push_back(edges.size());
    const std::string s = sk.vertex_name(pres.start(e));
    const std::string t = sk.vertex_name(pres.end(e));
    if (l.kind != LabelKind::finite || l.k == 1) {
      edges.push_back(EdgeInput{s, t, id});
      starts.push_back(s);
      kinds.push_back(l.kind);
      continue;
    }
    std::string prev = s;
    for (std::uint64_t i = 0; i < l.k; ++i) {
      std::string next;
      if (i + 1 == l.k) {
        next = t;
      } else {
        next = fresh_name(taken, id + ":" + std::to_string(i + 1));
        taken.insert(next);
        vertices.push_back(next);
      }
      std::string sub = fresh_name(ids, id + "/" + std::to_string(i));
      ids.insert(sub);
      edges.push_back(EdgeInput{prev, next, sub});
      starts.push_back(prev);
      kinds.push_back(LabelKind::finite);
      prev = std::move(next);
    }
  }
  Tree tree = Tree::build(std::move(vertices), edges);
  std::vector<OrderTypeLabel> labels;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    labels.push_back(OrderTypeLabel{kinds[i], 1, *tree.find_vertex(starts[i])});
  }
  out.tree = ChainTreePresentation::build(std::move(tree), std::move(labels));
  return out;
}

// ---------------------------------------------------------------------------

PositionInterval parse_interval(const ChainTreePresentation& pres, std::string_view text) {
  const std::string original(text);
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::invalid_interval_set, "'" + original + "': " + why);
  };
  text = trim(text);
  const auto& sk = pres.skeleton();
  const auto open = text.rfind('[');
  if (open == std::string_view::npos || (text.back() != ']' && text.back() != ')')) {
    auto e = sk.find_edge(text);
    if (!e) throw bad("unknown edge");
    return {*e, Cut::at(0), pres.max_cut(*e)};
  }
  auto e = sk.find_edge(text.substr(0, open));
  if (!e) throw bad("unknown edge '" + std::string(text.substr(0, open)) + "'");
  const bool closed = text.back() == ']';
  const auto body = text.substr(open + 1, text.size() - open - 2);
  const auto comma = body.find(',');
  try {
    if (comma == std::string_view::npos) {
      if (!closed) throw bad("single positions use [p]");
      const Cut p = parse_cut(body);
      if (p == Cut::top()) return {*e, Cut::omega(), Cut::top()};
      if (p == Cut::omega()) throw bad("no position at omega; use [top]");
      return {*e, p, Cut::at(p.n + 1)};
    }
    if (closed) throw bad("ranges use [lo,hi)");
    return {*e, parse_cut(body.substr(0, comma)), parse_cut(body.substr(comma + 1))};
  } catch (const Error& err) {
    if (err.code() == ErrorCode::invalid_interval_set) throw;
    throw bad(err.what());
  }
}

std::optional<PresentedElement> Contraction::map_element(const PresentedElement& x) const {
  if (x.edge >= fate.size()) return std::nullopt;
  const auto& f = fate[x.edge];
  if (!f.new_edge) return std::nullopt;
  if (x.index.is_top) {
    if (f.top_removed) return std::nullopt;
    if (f.new_label_finite) return PresentedElement{*f.new_edge, ChainIndex::at(f.remaining_finite), x.dir};
    return PresentedElement{*f.new_edge, ChainIndex::top(), x.dir};
  }
  const Cut p = Cut::at(x.index.n);
  std::uint64_t below = 0;
  for (const auto& [lo, hi] : f.removed) {
    if (lo <= p && p < hi) return std::nullopt;
    if (hi <= p) below += hi.n - lo.n;
  }
  return PresentedElement{*f.new_edge, ChainIndex::at(x.index.n - below), x.dir};
}

Contraction contract(const ChainTreePresentation& pres, const std::vector<PositionInterval>& f) {
  const auto& sk = pres.skeleton();
  const std::size_t m = pres.edge_count();
  std::vector<std::vector<std::pair<Cut, Cut>>> parts(m);
  Contraction out;
  out.fate.resize(m);

  for (const auto& iv : f) {
    if (iv.edge >= m) throw Error(ErrorCode::invalid_interval_set, "edge index out of range");
    const auto& id = sk.edge(iv.edge).id;
    if (!(iv.lo < iv.hi)) {
      throw Error(ErrorCode::invalid_interval_set, "empty or reversed interval on '" + id + "'");
    }
    if (pres.max_cut(iv.edge) < iv.hi) {
      throw Error(ErrorCode::invalid_interval_set, "interval on '" + id + "' exceeds its label");
    }
    if (iv.hi == Cut::top()) out.fate[iv.edge].top_removed = true;
    if (iv.lo.is_finite()) parts[iv.edge].push_back({iv.lo, std::min(iv.hi, Cut::omega())});
  }

  // Merge removed finite parts and decide each edge's new label.
  std::vector<VertexIndex> parent(sk.vertex_count());
  std::iota(parent.begin(), parent.end(), VertexIndex{0});
  auto root = [&](VertexIndex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::optional<OrderTypeLabel>> new_label(m);
  for (EdgeIndex e = 0; e < m; ++e) {
    auto& ps = parts[e];
    std::sort(ps.begin(), ps.end());
    std::vector<std::pair<Cut, Cut>> merged;
    for (const auto& p : ps) {
      if (!merged.empty() && !(merged.back().second < p.first)) {
        merged.back().second = std::max(merged.back().second, p.second);
      } else {
        merged.push_back(p);
      }
    }
    auto& fate = out.fate[e];
    fate.removed = merged;
    const auto& l = pres.label(e);
    std::uint64_t removed_finite = 0;
    std::optional<std::uint64_t> tail;
    for (const auto& [lo, hi] : merged) {
      if (hi == Cut::omega()) {
        tail = lo.n;
      } else {
        removed_finite += hi.n - lo.n;
      }
    }
    std::optional<OrderTypeLabel> nl;
    if (l.kind == LabelKind::finite) {
      const std::uint64_t left = l.k - removed_finite;
      fate.remaining_finite = left;
      if (left > 0) nl = OrderTypeLabel{LabelKind::finite, left, l.start};
    } else if (tail) {
      const std::uint64_t left = *tail - removed_finite;
      fate.remaining_finite = left;
      const bool top_kept = l.kind == LabelKind::omega_plus_one && !fate.top_removed;
      const std::uint64_t k = left + (top_kept ? 1 : 0);
      if (k > 0) nl = OrderTypeLabel{LabelKind::finite, k, l.start};
    } else {
      const bool top_kept = l.kind == LabelKind::omega_plus_one && !fate.top_removed;
      nl = OrderTypeLabel{top_kept ? LabelKind::omega_plus_one : LabelKind::omega, 1, l.start};
    }
    fate.new_label_finite = nl && nl->kind == LabelKind::finite;
    new_label[e] = nl;
    if (!nl) {
      const VertexIndex a = root(sk.edge(e).u);
      const VertexIndex b = root(sk.edge(e).v);
      parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::vector<std::string> vertices;
  for (VertexIndex v = 0; v < sk.vertex_count(); ++v) {
    if (root(v) == v) vertices.push_back(sk.vertex_name(v));
  }
  std::vector<EdgeInput> edges;
  std::vector<std::pair<std::string, OrderTypeLabel>> labels;
  for (EdgeIndex e = 0; e < m; ++e) {
    if (!new_label[e]) continue;
    out.fate[e].new_edge = edges.size();
    const auto& edge = sk.edge(e);
    edges.push_back(EdgeInput{sk.vertex_name(root(edge.u)), sk.vertex_name(root(edge.v)), edge.id});
    labels.push_back({sk.vertex_name(root(new_label[e]->start)), *new_label[e]});
  }
  Tree tree = Tree::build(std::move(vertices), edges);
  std::vector<OrderTypeLabel> final_labels;
  for (auto& [start, l] : labels) {
    l.start = *tree.find_vertex(start);
    final_labels.push_back(l);
  }
  out.result = ChainTreePresentation::build(std::move(tree), std::move(final_labels));
  return out;
}

}  // namespace treesets
