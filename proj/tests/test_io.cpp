#include <gtest/gtest.h>

#include <filesystem>
#include <functional>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "treesets/error.hpp"
#include "treesets/io.hpp"

using namespace treesets;
using namespace treesets::testing;

namespace {

const std::filesystem::path kData = TREESETS_DATA_DIR;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::invalid_argument;
}

bool same_order(const SeparationSystem& a, const SeparationSystem& b) {
  if (a.size() != b.size()) return false;
  for (ElementIndex x = 0; x < a.size(); ++x) {
    const auto bx = b.find(a.name(x));
    if (!bx || b.inverse(*bx) != b.index_of(a.name(a.inverse(x)))) return false;
    for (ElementIndex y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) != b.leq(*bx, b.index_of(a.name(y)))) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Io, LoadsDataFiles) {
  const auto p3 = load_tree(kData / "p3.json");
  EXPECT_EQ(p3.vertex_count(), 3u);
  EXPECT_EQ(p3.edge(0).id, "e0");
  const auto star = load_system(kData / "star3.json");
  EXPECT_EQ(star.separation_count(), 3u);
  EXPECT_TRUE(star.less(star.index_of("a"), star.index_of("c*")));
  const auto w1 = load_presentation(kData / "omega_plus_one.json");
  EXPECT_EQ(w1.label(0).kind, LabelKind::omega_plus_one);
  EXPECT_EQ(w1.skeleton().vertex_name(w1.start(0)), "u");
  EXPECT_EQ(detect_kind(read_json_file(kData / "ray.json")), ObjectKind::presentation);
  EXPECT_EQ(detect_kind(read_json_file(kData / "p3.json")), ObjectKind::tree);
  EXPECT_EQ(detect_kind(read_json_file(kData / "crossing.json")), ObjectKind::system);
}

TEST(Io, SystemsRoundTrip) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto s = random_bipartition_system(rng, 4, 1 + i % 8);
    const auto back = system_from_json(parse_json(to_json(s).dump(2)));
    EXPECT_TRUE(same_order(s, back));
  }
}

TEST(Io, TreesRoundTrip) {
  for (const auto& t : random_trees(50, 10, 5)) {
    const auto back = tree_from_json(parse_json(to_json(t).dump()));
    ASSERT_EQ(back.vertex_names(), t.vertex_names());
    ASSERT_EQ(back.edge_count(), t.edge_count());
    for (EdgeIndex e = 0; e < t.edge_count(); ++e) {
      EXPECT_EQ(back.edge(e).u, t.edge(e).u);
      EXPECT_EQ(back.edge(e).v, t.edge(e).v);
      EXPECT_EQ(back.edge(e).id, t.edge(e).id);
    }
  }
}

TEST(Io, PresentationsRoundTrip) {
  for (const auto& [name, p, tame] : presentation_suite()) {
    const auto back = presentation_from_json(parse_json(to_json(p).dump()));
    EXPECT_EQ(back.labels(), p.labels()) << name;
    EXPECT_EQ(back.skeleton().vertex_names(), p.skeleton().vertex_names()) << name;
  }
}

TEST(Io, FilesRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "treesets_io_test";
  std::filesystem::create_directories(dir);
  const auto s = load_system(kData / "star3.json");
  write_json_file(dir / "s.json", to_json(s));
  EXPECT_TRUE(same_order(s, load_system(dir / "s.json")));
  std::filesystem::remove_all(dir);
}

TEST(Io, ParseErrorsCarryLocation) {
  try {
    parse_json("{\n  \"schema\": 1,\n  oops\n}", "doc.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse_error);
    EXPECT_NE(std::string(e.what()).find("doc.json:3:"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of([] { read_json_file("/nonexistent/file.json"); }), ErrorCode::parse_error);
}

TEST(Io, SchemaErrors) {
  EXPECT_EQ(code_of([] { system_from_json(parse_json(R"({"schema": 2, "elements": [], "order": []})")); }),
            ErrorCode::schema_error);
  EXPECT_EQ(code_of([] { system_from_json(parse_json(R"({"schema": 1, "elements": 3, "order": []})")); }),
            ErrorCode::schema_error);
  EXPECT_EQ(code_of([] { tree_from_json(parse_json(R"({"schema": 1, "vertices": ["a"], "edges": [["a"]]})")); }),
            ErrorCode::schema_error);
  EXPECT_EQ(code_of([] { detect_kind(parse_json(R"({"schema": 1})")); }), ErrorCode::schema_error);
  EXPECT_EQ(code_of([] {
              presentation_from_json(parse_json(
                  R"({"schema":1,"skeleton":{"vertices":["u","v"],"edges":[["u","v","e"]]},"labels":{"e":{"kind":"aleph","start":"u"}}})"));
            }),
            ErrorCode::schema_error);
}

TEST(Io, InvariantViolations) {
  EXPECT_EQ(code_of([] { load_system(kData / "antisymmetry.json"); }), ErrorCode::invariant_violation);
  EXPECT_EQ(code_of([] {
              tree_from_json(parse_json(R"({"schema": 1, "vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]})"));
            }),
            ErrorCode::invariant_violation);
  EXPECT_EQ(code_of([] {
              presentation_from_json(parse_json(
                  R"({"schema":1,"skeleton":{"vertices":["u","v"],"edges":[["u","v","e"]]},"labels":{"e":{"kind":"finite","k":0,"start":"u"}}})"));
            }),
            ErrorCode::invariant_violation);
}

TEST(Io, MinorModelsAndInclusions) {
  const auto host = load_tree(kData / "p3.json");
  const auto minor = Tree::build({"a", "c"}, {{"a", "c", "m"}});
  const auto doc = parse_json(R"({"schema":1,"branch_sets":{"a":["a","b"],"c":["c"]},"edge_map":{"m":"e1"}})");
  const auto model = model_from_json(doc, minor, host);
  EXPECT_EQ(model.branch_sets[0], (std::vector<VertexIndex>{0, 1}));
  EXPECT_EQ(model.edge_map[0], 1u);
  const auto again = model_from_json(parse_json(to_json(model, minor, host).dump()), minor, host);
  EXPECT_EQ(again.branch_sets, model.branch_sets);
  EXPECT_EQ(again.edge_map, model.edge_map);

  const auto tau = load_system(kData / "star3.json");
  const auto sub = tau.induced(std::vector<ElementIndex>{tau.index_of("a"), tau.index_of("a*")});
  const auto inc = inclusion_from_json(parse_json(R"({"schema":1,"map":{"a":"a","a*":"a*"}})"), sub, tau);
  EXPECT_EQ(inc[sub.index_of("a")], tau.index_of("a"));
  EXPECT_EQ(code_of([&] { inclusion_from_json(parse_json(R"({"schema":1,"map":{"a":"zz"}})"), sub, tau); }),
            ErrorCode::invariant_violation);
}
