#include "treesets/cli.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include "treesets/error.hpp"
#include "treesets/orientation.hpp"

namespace treesets {

namespace {

std::vector<std::string> sorted_names(const SeparationSystem& sys, std::span<const ElementIndex> xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (ElementIndex x : xs) out.push_back(sys.name(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::string braces(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out + "}";
}

// A separation system file, or a tree file read as its edge tree set.
SeparationSystem load_tree_set(const std::string& path) {
  const Json doc = read_json_file(path);
  if (detect_kind(doc) == ObjectKind::tree) return edge_tree_set(load_tree(path));
  return load_system(path);
}

const std::string& single_input(const Command& cmd) {
  if (cmd.inputs.size() != 1) {
    throw Error(ErrorCode::invalid_argument, "'" + cmd.verb + "' takes exactly one input file");
  }
  return cmd.inputs.front();
}

std::vector<ElementIndex> indices(const SeparationSystem& sys, const std::vector<std::string>& names) {
  std::vector<ElementIndex> out;
  for (const auto& n : names) out.push_back(sys.index_of(n));
  return out;
}

Json orientation_json(const SeparationSystem& sys, const Orientation& o) {
  Json j;
  j["orientation"] = sorted_names(sys, o.chosen);
  j["consistent"] = o.consistent;
  j["splitting"] = o.splitting;
  return j;
}

void set_verdict(Report& rep, bool positive) {
  rep.exit_code = positive ? 0 : 1;
  rep.body["verdict"] = positive ? "positive" : "negative";
}

// --- finite verbs ----------------------------------------------------------

Report validate(const Command& cmd) {
  const auto& path = single_input(cmd);
  const Json doc = read_json_file(path);
  Report rep;
  std::ostringstream text;
  switch (detect_kind(doc)) {
    case ObjectKind::system: {
      const auto sys = load_system(path);
      const auto r = validate_tree_set(sys);
      rep.body["kind"] = "system";
      rep.body["elements"] = sys.size();
      rep.body["nested"] = r.is_nested;
      rep.body["tree_set"] = r.is_tree_set;
      rep.body["regular"] = r.is_regular;
      rep.body["crossing_pairs"] = Json::array();
      for (const auto& [a, b] : r.crossing_pairs) {
        rep.body["crossing_pairs"].push_back({sys.name(a), sys.name(b)});
      }
      rep.body["trivial"] = Json::array();
      for (ElementIndex x : r.trivial_elements) {
        const auto c = classify(sys, x);
        rep.body["trivial"].push_back(
            {{"element", sys.name(x)}, {"witness", sys.name(*c.trivial_witness)}});
      }
      rep.body["small"] = sorted_names(sys, r.small_elements);
      text << sys.separation_count() << " separations; "
           << (r.is_nested ? "nested" : "not nested") << ", "
           << (r.is_tree_set ? "a tree set" : "not a tree set") << ", "
           << (r.is_regular ? "regular" : "not regular") << "\n";
      for (const auto& [a, b] : r.crossing_pairs) {
        text << "  " << sys.name(a) << " crosses " << sys.name(b) << "\n";
      }
      for (const auto& t : rep.body["trivial"]) {
        text << "  " << t["element"].get<std::string>() << " is trivial, witnessed by "
             << t["witness"].get<std::string>() << "\n";
      }
      set_verdict(rep, r.is_tree_set);
      break;
    }
    case ObjectKind::tree: {
      const auto tree = load_tree(path);
      rep.body["kind"] = "tree";
      rep.body["vertices"] = tree.vertex_count();
      rep.body["edges"] = tree.edge_count();
      text << "valid tree with " << tree.vertex_count() << " vertices\n";
      set_verdict(rep, true);
      break;
    }
    case ObjectKind::presentation: {
      const auto pres = load_presentation(path);
      rep.body["kind"] = "presentation";
      rep.body["edges"] = pres.edge_count();
      text << "valid presentation with " << pres.edge_count() << " skeleton edges\n";
      set_verdict(rep, true);
      break;
    }
  }
  rep.text = text.str();
  return rep;
}

Report orient(const Command& cmd) {
  const auto sys = load_tree_set(single_input(cmd));
  const auto p = make_partial(sys, indices(sys, cmd.partial));
  std::optional<ElementIndex> pin;
  if (!cmd.pin.empty()) pin = sys.index_of(cmd.pin);
  const auto ext = extend(sys, p, pin);
  Report rep;
  rep.body = orientation_json(sys, ext.orientation);
  if (pin) rep.body["pin"] = sys.name(*pin);
  rep.body["unique"] = ext.unique;
  std::ostringstream text;
  text << "consistent orientation " << braces(sorted_names(sys, ext.orientation.chosen)) << "\n";
  if (pin) {
    text << "  " << sys.name(*pin) << " is maximal"
         << (ext.unique ? "; no other consistent orientation extends the input this way" : "")
         << "\n";
  }
  rep.text = text.str();
  set_verdict(rep, true);
  return rep;
}

Report enumerate(const Command& cmd, bool with_stars) {
  const auto sys = load_tree_set(single_input(cmd));
  const auto all = enumerate_orientations(sys);
  Report rep;
  rep.body["count"] = all.size();
  rep.body["orientations"] = Json::array();
  std::ostringstream text;
  std::size_t splitting = 0;
  for (const auto& o : all) {
    Json j = orientation_json(sys, o);
    text << braces(sorted_names(sys, o.chosen));
    if (with_stars) {
      const auto star = star_of(sys, o);
      j["star"] = sorted_names(sys, star.members);
      text << "  star " << braces(j["star"].get<std::vector<std::string>>());
    }
    if (o.splitting) {
      ++splitting;
      text << "  splitting";
    }
    text << "\n";
    rep.body["orientations"].push_back(std::move(j));
  }
  rep.body["splitting"] = splitting;
  text << all.size() << " consistent orientations, " << splitting << " splitting\n";
  rep.text = text.str();
  set_verdict(rep, true);
  return rep;
}

Report to_tree(const Command& cmd) {
  const auto tau = load_tree_set(single_input(cmd));
  const auto t = tree_of(tau);
  Report rep;
  rep.body = to_json(t.tree);
  rep.body["orientations"] = Json::object();
  for (VertexIndex v = 0; v < t.tree.vertex_count(); ++v) {
    rep.body["orientations"][t.tree.vertex_name(v)] = sorted_names(tau, t.orientations[v].chosen);
  }
  std::ostringstream text;
  text << "tree with " << t.tree.vertex_count() << " vertices, one per splitting orientation\n";
  for (VertexIndex v = 0; v < t.tree.vertex_count(); ++v) {
    text << "  " << t.tree.vertex_name(v) << " = " << t.labels[v] << "\n";
  }
  rep.text = text.str();
  rep.dot = to_dot(t, tau, cmd.dot_width);
  set_verdict(rep, true);
  return rep;
}

Report from_tree(const Command& cmd) {
  const auto tree = load_tree(single_input(cmd));
  const auto tau = edge_tree_set(tree);
  Report rep;
  rep.body = to_json(tau);
  rep.text = "edge tree set with " + std::to_string(tau.separation_count()) + " separations\n";
  rep.dot = to_dot(tree, {}, cmd.dot_width);
  set_verdict(rep, true);
  return rep;
}

Report roundtrip(const Command& cmd) {
  Report rep;
  std::ostringstream text;
  if (cmd.random > 0) {
    std::mt19937_64 rng(cmd.seed);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < cmd.random; ++i) {
      const std::size_t n = 1 + rng() % (cmd.max_edges + 1);
      const auto tree = random_tree(n, rng());
      const bool ok = roundtrip_tree(tree).certified && roundtrip_tau(edge_tree_set(tree)).certified;
      if (!ok) ++failures;
    }
    rep.body["checked"] = cmd.random;
    rep.body["seed"] = cmd.seed;
    rep.body["failures"] = failures;
    text << cmd.random << " random trees, " << failures << " failed round trips\n";
    rep.text = text.str();
    set_verdict(rep, failures == 0);
    return rep;
  }
  const std::string path = !cmd.tree.empty() ? cmd.tree : single_input(cmd);
  const Json doc = read_json_file(path);
  if (detect_kind(doc) == ObjectKind::tree) {
    const auto iso = roundtrip_tree(load_tree(path));
    rep.body["kind"] = "tree";
    rep.body["certified"] = iso.certified;
    rep.body["map"] = Json::object();
    for (VertexIndex v = 0; v < iso.forward.size(); ++v) {
      rep.body["map"][iso.source.vertex_name(v)] = iso.target.vertex_name(iso.forward[v]);
    }
    text << "tree -> tree of its edge tree set: "
         << (iso.certified ? "isomorphism certified" : "not an isomorphism") << "\n";
    for (VertexIndex v = 0; v < iso.forward.size(); ++v) {
      text << "  " << iso.source.vertex_name(v) << " -> " << iso.target.vertex_name(iso.forward[v]) << "\n";
    }
    rep.text = text.str();
    set_verdict(rep, iso.certified);
    return rep;
  }
  const auto iso = roundtrip_tau(load_system(path));
  rep.body["kind"] = "system";
  rep.body["certified"] = iso.certified;
  rep.body["map"] = Json::object();
  for (ElementIndex x = 0; x < iso.forward.size(); ++x) {
    rep.body["map"][iso.source.name(x)] = iso.target.name(iso.forward[x]);
  }
  if (iso.verdict.failure) {
    rep.body["failure"] = {{"kind", to_string(iso.verdict.failure->kind)},
                           {"detail", iso.verdict.failure->detail}};
  }
  text << "tree set -> edge tree set of its tree: "
       << (iso.certified ? "isomorphism certified" : "not an isomorphism") << "\n";
  for (ElementIndex x = 0; x < iso.forward.size(); ++x) {
    text << "  " << iso.source.name(x) << " -> " << iso.target.name(iso.forward[x]) << "\n";
  }
  rep.text = text.str();
  set_verdict(rep, iso.certified);
  return rep;
}

Report flip(const Command& cmd) {
  const auto tau = load_tree_set(single_input(cmd));
  const auto from = make_orientation(tau, indices(tau, cmd.from));
  const auto to = make_orientation(tau, indices(tau, cmd.to));
  const auto path = flip_path(tau, from, to);
  Report rep;
  rep.body["length"] = path.size() - 1;
  rep.body["steps"] = Json::array();
  std::ostringstream text;
  for (const auto& o : path) {
    rep.body["steps"].push_back(sorted_names(tau, o.chosen));
    text << braces(sorted_names(tau, o.chosen)) << "\n";
  }
  text << path.size() - 1 << " flips\n";
  rep.text = text.str();
  set_verdict(rep, true);
  return rep;
}

Report minor(const Command& cmd) {
  Report rep;
  std::ostringstream text;
  if (!cmd.sub.empty() || !cmd.super.empty()) {
    if (cmd.sub.empty() || cmd.super.empty() || cmd.inclusion.empty()) {
      throw Error(ErrorCode::invalid_argument, "minor needs --sub, --super and --inclusion together");
    }
    const auto tau1 = load_tree_set(cmd.sub);
    const auto tau2 = load_tree_set(cmd.super);
    const auto inc = inclusion_from_json(read_json_file(cmd.inclusion), tau1, tau2);
    const auto sm = subset_minor(tau1, tau2, inc);
    const auto problem = minor_model_problem(sm.model, sm.minor.tree, sm.host.tree);
    rep.body["mode"] = "subset";
    rep.body["minor"] = to_json(sm.minor.tree);
    rep.body["host"] = to_json(sm.host.tree);
    rep.body["model"] = to_json(sm.model, sm.minor.tree, sm.host.tree);
    rep.body["valid"] = !problem;
    if (problem) rep.body["problem"] = *problem;
    text << "tree of the smaller tree set is " << (problem ? "not " : "")
         << "a minor of the tree of the larger one\n";
    for (VertexIndex v = 0; v < sm.model.branch_sets.size(); ++v) {
      text << "  " << sm.minor.tree.vertex_name(v) << " <- {";
      for (std::size_t i = 0; i < sm.model.branch_sets[v].size(); ++i) {
        text << (i ? ", " : "") << sm.host.tree.vertex_name(sm.model.branch_sets[v][i]);
      }
      text << "}\n";
    }
    rep.text = text.str();
    set_verdict(rep, !problem);
    return rep;
  }
  if (cmd.model.empty() || cmd.minor.empty() || cmd.host.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "minor needs either --sub/--super/--inclusion or --model/--minor/--host");
  }
  const auto t1 = load_tree(cmd.minor);
  const auto t2 = load_tree(cmd.host);
  const auto model = model_from_json(read_json_file(cmd.model), t1, t2);
  const auto iso = minor_subset(model, t1, t2);
  rep.body["mode"] = "model";
  rep.body["certified"] = iso.certified;
  rep.body["map"] = Json::object();
  for (ElementIndex x = 0; x < iso.forward.size(); ++x) {
    rep.body["map"][iso.source.name(x)] = iso.target.name(iso.forward[x]);
  }
  text << "edge tree set of the minor embeds into the host's: "
       << (iso.certified ? "certified onto its image" : "not certified") << "\n";
  rep.text = text.str();
  set_verdict(rep, iso.certified);
  return rep;
}

// --- presented verbs --------------------------------------------------------

Json descriptor_list(const ChainTreePresentation& pres, const std::vector<VertexDescriptor>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) out.push_back(format_descriptor(pres, d));
  return out;
}

Report tame(const Command& cmd) {
  const auto pres = load_presentation(single_input(cmd));
  const auto v = tame_check(pres);
  Report rep;
  rep.body["tame"] = v.tame;
  std::ostringstream text;
  if (v.witness) {
    const auto& w = *v.witness;
    Json j;
    j["omega_edge"] = pres.skeleton().edge(w.omega_edge).id;
    j["edges"] = Json::array();
    for (EdgeIndex e : w.edges) j["edges"].push_back(pres.skeleton().edge(e).id);
    j["upper_bound"] = pres.format(w.upper_bound);
    j["sample"] = Json::array();
    for (const auto& x : w.sample(4)) j["sample"].push_back(pres.format(x));
    rep.body["witness"] = std::move(j);
    const auto& id = pres.skeleton().edge(w.omega_edge).id;
    text << "not tame: " << id << "[0]+ < " << id << "[1]+ < " << id << "[2]+ < ... < "
         << pres.format(w.upper_bound) << " is a chain of order type omega+1\n";
  } else {
    text << "tame: no chain of order type omega+1\n";
  }
  rep.text = text.str();
  set_verdict(rep, v.tame);
  return rep;
}

Report splitting(const Command& cmd) {
  const auto pres = load_presentation(single_input(cmd));
  if (cmd.element.empty()) throw Error(ErrorCode::invalid_argument, "splitting needs --element");
  const auto x = pres.parse_element(cmd.element);
  const bool ok = splitting_status(pres, x);
  const auto h = head(pres, x);
  Report rep;
  rep.body["element"] = pres.format(x);
  rep.body["splitting"] = ok;
  rep.body["orientation"] = format_descriptor(pres, h);
  Json star = Json::array();
  for (const auto& y : incoming(pres, h)) star.push_back(pres.format(y));
  rep.body["star"] = std::move(star);
  std::ostringstream text;
  if (ok) {
    text << pres.format(x) << " lies in a splitting star (orientation at "
         << format_descriptor(pres, h) << ")\n";
  } else {
    text << pres.format(x) << " does not lie in a splitting star: its orientation at "
         << format_descriptor(pres, h)
         << " contains an omega-chain with no maximal element below it\n";
  }
  rep.text = text.str();
  set_verdict(rep, ok);
  return rep;
}

Report tls(const Command& cmd) {
  const auto pres = load_presentation(single_input(cmd));
  const auto t = build_tls(pres);
  Report rep;
  rep.body["depth"] = cmd.depth;
  rep.body["vertices"] = descriptor_list(pres, t.sample_vertices(cmd.depth));
  rep.body["limit_vertices"] = Json::array();
  for (const auto& d : t.sample_vertices(cmd.depth)) {
    if (is_limit_location(pres, d)) rep.body["limit_vertices"].push_back(format_descriptor(pres, d));
  }
  auto edge_json = [&](const PresentedElement& x) {
    const auto [a, b] = t.endpoints(x.edge, x.index);
    return Json{{"edge", pres.format(x)}, {"endpoints", {format_descriptor(pres, a), format_descriptor(pres, b)}}};
  };
  rep.body["limit_edges"] = Json::array();
  for (const auto& x : t.limit_edges()) rep.body["limit_edges"].push_back(edge_json(x));
  rep.body["edges"] = Json::array();
  for (const auto& x : t.sample_edges(cmd.depth)) rep.body["edges"].push_back(edge_json(x));
  std::ostringstream text;
  text << rep.body["vertices"].size() << " sampled vertices, " << rep.body["edges"].size()
       << " sampled edges, " << t.limit_edges().size() << " limit edges\n";
  for (const auto& j : rep.body["limit_edges"]) {
    text << "  limit edge " << j["edge"].get<std::string>() << " joins "
         << j["endpoints"][0].get<std::string>() << " and " << j["endpoints"][1].get<std::string>()
         << "\n";
  }
  rep.text = text.str();
  rep.dot = to_dot(t, cmd.depth, cmd.dot_width);
  set_verdict(rep, true);
  return rep;
}

TlsPoint parse_point(const ChainTreePresentation& pres, const std::string& text) {
  const auto at = text.rfind('@');
  if (at == std::string::npos) return parse_descriptor(pres, text);
  const auto x = pres.parse_element(text.substr(0, at) + "+");
  return InnerPoint{x.edge, x.index, parse_rational(text.substr(at + 1))};
}

Report subbase(const Command& cmd) {
  const auto pres = load_presentation(single_input(cmd));
  if (cmd.element.empty() || cmd.point.empty()) {
    throw Error(ErrorCode::invalid_argument, "subbase needs --element and --point");
  }
  const auto t = build_tls(pres);
  const auto e = pres.parse_element(cmd.element);
  const auto r = parse_rational(cmd.r);
  const bool in = subbase_member(t, parse_point(pres, cmd.point), e, r);
  Report rep;
  rep.body["element"] = pres.format(e);
  rep.body["r"] = std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  rep.body["point"] = cmd.point;
  rep.body["member"] = in;
  rep.text = cmd.point + (in ? " lies in " : " does not lie in ") + "S(" + pres.format(e) + ", " +
             rep.body["r"].get<std::string>() + ")\n";
  set_verdict(rep, in);
  return rep;
}

Report arc(const Command& cmd) {
  const auto pres = load_presentation(single_input(cmd));
  if (cmd.u.empty() || cmd.v.empty()) throw Error(ErrorCode::invalid_argument, "arc needs --u and --v");
  const auto t = build_tls(pres);
  const auto a = pseudo_arc(t, parse_descriptor(pres, cmd.u), parse_descriptor(pres, cmd.v));
  Report rep;
  rep.body["from"] = format_descriptor(pres, a.from);
  rep.body["to"] = format_descriptor(pres, a.to);
  rep.body["segments"] = Json::array();
  std::ostringstream text;
  text << "pseudo-arc from " << rep.body["from"].get<std::string>() << " to "
       << rep.body["to"].get<std::string>() << "\n";
  for (const auto& s : a.segments) {
    const auto& id = pres.skeleton().edge(s.edge).id;
    const std::string dir = s.direction == Direction::forward ? "+" : "-";
    rep.body["segments"].push_back(
        {{"edge", id}, {"from", to_string(s.lo)}, {"to", to_string(s.hi)}, {"direction", dir}});
    text << "  " << id << "[" << to_string(s.lo) << "," << to_string(s.hi) << ")" << dir << "\n";
  }
  Json closure = Json::array();
  for (const auto& d : t.sample_vertices(cmd.depth)) {
    if (a.closure_contains(pres, d)) closure.push_back(format_descriptor(pres, d));
  }
  text << "  closure vertices (sampled): " << closure.size() << "\n";
  rep.body["closure_vertices"] = std::move(closure);
  rep.text = text.str();
  set_verdict(rep, true);
  return rep;
}

Report contract_verb(const Command& cmd) {
  const auto pres = load_presentation(single_input(cmd));
  std::vector<PositionInterval> f;
  for (const auto& s : cmd.intervals) f.push_back(parse_interval(pres, s));
  const auto c = contract(pres, f);
  Report rep;
  rep.body = to_json(c.result);
  rep.body["contracted_edges"] = Json::array();
  for (EdgeIndex e = 0; e < c.fate.size(); ++e) {
    if (!c.fate[e].new_edge) rep.body["contracted_edges"].push_back(pres.skeleton().edge(e).id);
  }
  std::ostringstream text;
  text << "contracted presentation with " << c.result.edge_count() << " skeleton edges\n";
  for (EdgeIndex e = 0; e < c.result.edge_count(); ++e) {
    const auto& l = c.result.label(e);
    text << "  " << c.result.skeleton().edge(e).id << ": " << to_string(l.kind);
    if (l.kind == LabelKind::finite) text << " " << l.k;
    text << " from " << c.result.skeleton().vertex_name(l.start) << "\n";
  }
  rep.text = text.str();
  set_verdict(rep, true);
  return rep;
}

Report truncate_verb(const Command& cmd) {
  const auto pres = load_presentation(single_input(cmd));
  const auto t = truncate(pres, cmd.depth);
  Report rep;
  rep.body = to_json(t.system);
  rep.body["depth"] = cmd.depth;
  rep.text = "truncation at depth " + std::to_string(cmd.depth) + ": " +
             std::to_string(t.system.separation_count()) + " separations\n";
  set_verdict(rep, true);
  return rep;
}

Report dispatch(const Command& cmd) {
  const auto& v = cmd.verb;
  if (v == "validate") return validate(cmd);
  if (v == "orient") return orient(cmd);
  if (v == "stars") return enumerate(cmd, true);
  if (v == "enumerate") return enumerate(cmd, false);
  if (v == "to-tree") return to_tree(cmd);
  if (v == "from-tree") return from_tree(cmd);
  if (v == "roundtrip") return roundtrip(cmd);
  if (v == "flip-path") return flip(cmd);
  if (v == "minor") return minor(cmd);
  if (v == "tame") return tame(cmd);
  if (v == "splitting") return splitting(cmd);
  if (v == "tls") return tls(cmd);
  if (v == "subbase") return subbase(cmd);
  if (v == "arc") return arc(cmd);
  if (v == "contract") return contract_verb(cmd);
  if (v == "truncate") return truncate_verb(cmd);
  throw Error(ErrorCode::invalid_argument, "unknown verb '" + v + "'");
}

Report error_report(const Command& cmd, ErrorCode code, const std::string& message) {
  Report rep;
  rep.exit_code = 2;
  rep.body["schema"] = kSchemaVersion;
  rep.body["verb"] = cmd.verb;
  rep.body["error"] = to_string(code);
  rep.body["message"] = message;
  rep.text = "error: " + message + "\n";
  return rep;
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{
      "validate", "orient", "stars",  "to-tree", "from-tree", "roundtrip", "flip-path", "minor",
      "tame",     "splitting", "tls", "subbase", "arc",       "contract",  "truncate",  "enumerate"};
  return v;
}

std::string Report::render(OutputFormat format) const {
  switch (format) {
    case OutputFormat::json: return body.dump(2) + "\n";
    case OutputFormat::dot: return dot;
    case OutputFormat::text: return text;
  }
  return text;
}

Report run(const Command& cmd) {
  Report rep;
  try {
    rep = dispatch(cmd);
  } catch (const Error& e) {
    return error_report(cmd, e.code(), e.what());
  } catch (const std::exception& e) {
    return error_report(cmd, ErrorCode::invalid_argument, e.what());
  }
  if (cmd.format == OutputFormat::dot && rep.dot.empty()) {
    return error_report(cmd, ErrorCode::invalid_argument,
                        "DOT output is available for to-tree, from-tree and tls only");
  }
  Json body;
  body["schema"] = kSchemaVersion;
  body["verb"] = cmd.verb;
  for (auto& [k, val] : rep.body.items()) {
    if (k != "schema") body[k] = val;
  }
  rep.body = std::move(body);
  return rep;
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return Error(ErrorCode::invalid_coordinate, "bad rational '" + text + "'"); };
  auto integer = [&](std::string_view s) {
    std::int64_t v = 0;
    if (s.empty()) throw bad();
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw bad();
    return v;
  };
  const std::string_view s(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto den = integer(s.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(integer(s.substr(0, slash)), den);
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto frac = s.substr(dot + 1);
    if (frac.size() > 15) throw bad();
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::string_view whole = s.substr(0, dot);
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::int64_t w = whole.empty() || whole == "-" ? 0 : integer(whole);
    const std::int64_t f = frac.empty() ? 0 : integer(frac);
    return Rational(w, 1) + Rational(negative ? -f : f, scale);
  }
  return Rational(integer(s), 1);
}

Tree random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "a tree needs at least one vertex");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<EdgeInput> edges;
  if (n == 2) edges.push_back({names[0], names[1], ""});
  if (n > 2) {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> code(n - 2);
    for (auto& c : code) c = rng() % n;
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

}  // namespace treesets
