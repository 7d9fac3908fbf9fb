#include "treesets/io.hpp"

#include <fstream>
#include <sstream>

#include "treesets/error.hpp"

namespace treesets {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::schema_error, what); }

void check_schema_field(const Json& doc) {
  if (!doc.is_object()) schema("top level must be an object");
  auto it = doc.find("schema");
  if (it == doc.end()) return;
  if (!it->is_number_integer() || it->get<int>() != kSchemaVersion) {
    schema("unsupported schema version " + it->dump());
  }
}

const Json& field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) schema(std::string("missing field '") + key + "'");
  return *it;
}

std::string str(const Json& v, const std::string& where) {
  if (!v.is_string()) schema(where + " must be a string");
  return v.get<std::string>();
}

std::vector<NamePair> pairs(const Json& arr, const std::string& where) {
  if (!arr.is_array()) schema(where + " must be an array");
  std::vector<NamePair> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& p = arr[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!p.is_array() || p.size() != 2) schema(at + " must be a pair of ids");
    out.emplace_back(str(p[0], at), str(p[1], at));
  }
  return out;
}

// Construction failures of a well-formed document are invariant violations.
template <typename F>
auto guarded(F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::schema_error || e.code() == ErrorCode::parse_error ||
        e.code() == ErrorCode::invariant_violation) {
      throw;
    }
    throw Error(ErrorCode::invariant_violation, e.what());
  }
}

}  // namespace

ObjectKind detect_kind(const Json& doc) {
  if (!doc.is_object()) schema("top level must be an object");
  if (doc.contains("skeleton")) return ObjectKind::presentation;
  if (doc.contains("elements")) return ObjectKind::system;
  if (doc.contains("vertices")) return ObjectKind::tree;
  schema("cannot tell the document kind: expected 'elements', 'vertices' or 'skeleton'");
}

SeparationSystem system_from_json(const Json& doc) {
  check_schema_field(doc);
  const auto inverse = pairs(field(doc, "elements"), "elements");
  std::vector<NamePair> order;
  if (doc.contains("order")) order = pairs(doc["order"], "order");
  return guarded([&] { return SeparationSystem::build(inverse, order); });
}

Tree tree_from_json(const Json& doc) {
  check_schema_field(doc);
  const auto& vs = field(doc, "vertices");
  if (!vs.is_array()) schema("vertices must be an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    vertices.push_back(str(vs[i], "vertices[" + std::to_string(i) + "]"));
  }
  const auto& es = field(doc, "edges");
  if (!es.is_array()) schema("edges must be an array");
  std::vector<EdgeInput> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto& e = es[i];
    const std::string at = "edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() < 2 || e.size() > 3) schema(at + " must be [u, v] or [u, v, id]");
    edges.push_back(EdgeInput{str(e[0], at), str(e[1], at), e.size() == 3 ? str(e[2], at) : ""});
  }
  return guarded([&] { return Tree::build(std::move(vertices), edges); });
}

ChainTreePresentation presentation_from_json(const Json& doc) {
  check_schema_field(doc);
  Tree skeleton = tree_from_json(field(doc, "skeleton"));
  const auto& ls = field(doc, "labels");
  if (!ls.is_object()) schema("labels must be an object keyed by edge id");
  std::vector<std::optional<OrderTypeLabel>> labels(skeleton.edge_count());
  for (const auto& [id, l] : ls.items()) {
    const std::string at = "labels." + id;
    if (!l.is_object()) schema(at + " must be an object");
    auto e = skeleton.find_edge(id);
    if (!e) throw Error(ErrorCode::invariant_violation, "label for unknown edge '" + id + "'");
    OrderTypeLabel label;
    const std::string kind = str(field(l, "kind"), at + ".kind");
    if (kind == "finite") {
      label.kind = LabelKind::finite;
      const auto& k = field(l, "k");
      if (!k.is_number_integer()) schema(at + ".k must be an integer");
      if (k.get<std::int64_t>() < 1) {
        throw Error(ErrorCode::invariant_violation, at + ".k must be at least 1");
      }
      label.k = k.get<std::uint64_t>();
    } else if (kind == "omega") {
      label.kind = LabelKind::omega;
    } else if (kind == "omega_plus_one") {
      label.kind = LabelKind::omega_plus_one;
    } else {
      schema(at + ".kind must be finite, omega or omega_plus_one");
    }
    const std::string start = str(field(l, "start"), at + ".start");
    auto s = skeleton.find_vertex(start);
    if (!s) throw Error(ErrorCode::invariant_violation, at + ".start names unknown vertex '" + start + "'");
    label.start = *s;
    labels[*e] = label;
  }
  std::vector<OrderTypeLabel> full;
  for (EdgeIndex e = 0; e < labels.size(); ++e) {
    if (!labels[e]) {
      throw Error(ErrorCode::invariant_violation, "edge '" + skeleton.edge(e).id + "' has no label");
    }
    full.push_back(*labels[e]);
  }
  return guarded([&] { return ChainTreePresentation::build(std::move(skeleton), std::move(full)); });
}

MinorModel model_from_json(const Json& doc, const Tree& minor, const Tree& host) {
  check_schema_field(doc);
  MinorModel m;
  m.branch_sets.resize(minor.vertex_count());
  m.edge_map.resize(minor.edge_count(), static_cast<EdgeIndex>(-1));
  const auto& bs = field(doc, "branch_sets");
  if (!bs.is_object()) schema("branch_sets must be an object");
  for (const auto& [name, set] : bs.items()) {
    auto v = minor.find_vertex(name);
    if (!v) throw Error(ErrorCode::invariant_violation, "branch set for unknown vertex '" + name + "'");
    if (!set.is_array()) schema("branch_sets." + name + " must be an array");
    for (const auto& h : set) {
      const std::string hn = str(h, "branch_sets." + name);
      auto hv = host.find_vertex(hn);
      if (!hv) throw Error(ErrorCode::invariant_violation, "unknown host vertex '" + hn + "'");
      m.branch_sets[*v].push_back(*hv);
    }
  }
  const auto& em = field(doc, "edge_map");
  if (!em.is_object()) schema("edge_map must be an object");
  for (const auto& [id, target] : em.items()) {
    auto e = minor.find_edge(id);
    if (!e) throw Error(ErrorCode::invariant_violation, "edge_map names unknown edge '" + id + "'");
    const std::string tn = str(target, "edge_map." + id);
    auto he = host.find_edge(tn);
    if (!he) throw Error(ErrorCode::invariant_violation, "unknown host edge '" + tn + "'");
    m.edge_map[*e] = *he;
  }
  for (EdgeIndex e = 0; e < m.edge_map.size(); ++e) {
    if (m.edge_map[e] == static_cast<EdgeIndex>(-1)) {
      throw Error(ErrorCode::invariant_violation, "edge '" + minor.edge(e).id + "' is not mapped");
    }
  }
  return m;
}

std::vector<ElementIndex> inclusion_from_json(const Json& doc, const SeparationSystem& from,
                                              const SeparationSystem& to) {
  check_schema_field(doc);
  const auto& map = field(doc, "map");
  if (!map.is_object()) schema("map must be an object");
  std::vector<ElementIndex> out(from.size(), static_cast<ElementIndex>(-1));
  for (const auto& [x, y] : map.items()) {
    auto a = from.find(x);
    auto b = to.find(str(y, "map." + x));
    if (!a || !b) throw Error(ErrorCode::invariant_violation, "map entry '" + x + "' names unknown elements");
    out[*a] = *b;
  }
  for (ElementIndex x = 0; x < out.size(); ++x) {
    if (out[x] == static_cast<ElementIndex>(-1)) {
      throw Error(ErrorCode::invariant_violation, "element '" + from.name(x) + "' is not mapped");
    }
  }
  return out;
}

Json to_json(const SeparationSystem& sys) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["elements"] = Json::array();
  for (const auto& [a, b] : sys.inverse_pairs()) doc["elements"].push_back({a, b});
  doc["order"] = Json::array();
  for (const auto& [a, b] : sys.cover_relations()) doc["order"].push_back({a, b});
  return doc;
}

Json to_json(const Tree& tree) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["vertices"] = tree.vertex_names();
  doc["edges"] = Json::array();
  for (const auto& e : tree.edge_inputs()) doc["edges"].push_back({e.u, e.v, e.id});
  return doc;
}

Json to_json(const ChainTreePresentation& pres) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  Json sk = to_json(pres.skeleton());
  sk.erase("schema");
  doc["skeleton"] = std::move(sk);
  doc["labels"] = Json::object();
  for (EdgeIndex e = 0; e < pres.edge_count(); ++e) {
    const auto& l = pres.label(e);
    Json j;
    switch (l.kind) {
      case LabelKind::finite:
        j["kind"] = "finite";
        j["k"] = l.k;
        break;
      case LabelKind::omega: j["kind"] = "omega"; break;
      case LabelKind::omega_plus_one: j["kind"] = "omega_plus_one"; break;
    }
    j["start"] = pres.skeleton().vertex_name(l.start);
    doc["labels"][pres.skeleton().edge(e).id] = std::move(j);
  }
  return doc;
}

Json to_json(const MinorModel& model, const Tree& minor, const Tree& host) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["branch_sets"] = Json::object();
  for (VertexIndex v = 0; v < model.branch_sets.size(); ++v) {
    Json set = Json::array();
    for (VertexIndex h : model.branch_sets[v]) set.push_back(host.vertex_name(h));
    doc["branch_sets"][minor.vertex_name(v)] = std::move(set);
  }
  doc["edge_map"] = Json::object();
  for (EdgeIndex e = 0; e < model.edge_map.size(); ++e) {
    doc["edge_map"][minor.edge(e).id] = host.edge(model.edge_map[e]).id;
  }
  return doc;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::parse_error, source + ":" + std::to_string(line) + ":" +
                                            std::to_string(col) + ": malformed JSON");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::invalid_argument, path.string() + ": cannot write file");
  out << doc.dump(2) << '\n';
}

namespace {

template <typename F>
auto with_source(const std::filesystem::path& path, F&& decode) -> decltype(decode(Json{})) {
  const Json doc = read_json_file(path);
  try {
    return decode(doc);
  } catch (const Error& e) {
    // Error::what() already starts with the code name; keep the code.
    std::string msg = e.what();
    const auto colon = msg.find(": ");
    throw Error(e.code(), path.string() + ": " + (colon == std::string::npos ? msg : msg.substr(colon + 2)));
  }
}

}  // namespace

SeparationSystem load_system(const std::filesystem::path& path) {
  return with_source(path, [](const Json& d) { return system_from_json(d); });
}

Tree load_tree(const std::filesystem::path& path) {
  return with_source(path, [](const Json& d) { return tree_from_json(d); });
}

ChainTreePresentation load_presentation(const std::filesystem::path& path) {
  return with_source(path, [](const Json& d) { return presentation_from_json(d); });
}

}  // namespace treesets
