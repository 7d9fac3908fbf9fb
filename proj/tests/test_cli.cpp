#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "treesets/cli.hpp"
#include "treesets/tls.hpp"

using namespace treesets;
using namespace treesets::testing;

namespace {

const std::string kData = TREESETS_DATA_DIR;
const std::string kCli = TREESETS_CLI;

std::string data_path(const std::string& file) { return kData + "/" + file; }

Command cmd(std::string verb, std::vector<std::string> inputs) {
  Command c;
  c.verb = std::move(verb);
  for (auto& i : inputs) c.inputs.push_back(data_path(i));
  return c;
}

struct Run {
  int status;
  std::string out;
};

Run shell(const std::string& args) {
  const auto out = std::filesystem::temp_directory_path() / "treesets_cli_test.out";
  const std::string line = kCli + " " + args + " > " + out.string() + " 2>/dev/null";
  const int raw = std::system(line.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, ss.str()};
}

}  // namespace

TEST(Cli, ValidateVerdicts) {
  EXPECT_EQ(run(cmd("validate", {"star3.json"})).exit_code, 0);
  const auto crossing = run(cmd("validate", {"crossing.json"}));
  EXPECT_EQ(crossing.exit_code, 1);
  EXPECT_EQ(crossing.body["verdict"], "negative");
  const auto bad = run(cmd("validate", {"antisymmetry.json"}));
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_EQ(bad.body["error"], "InvariantViolation");
}

TEST(Cli, EveryBodyCarriesSchemaAndVerb) {
  for (const auto& [verb, file] : std::vector<std::pair<std::string, std::string>>{
           {"validate", "p3.json"}, {"enumerate", "star3.json"}, {"stars", "star3.json"},
           {"to-tree", "star3.json"}, {"from-tree", "p3.json"}, {"roundtrip", "p3.json"},
           {"tame", "ray.json"}, {"tls", "omega_plus_one.json"}, {"truncate", "omega_plus_one.json"}}) {
    const auto r = run(cmd(verb, {file}));
    EXPECT_EQ(r.body["schema"], 1) << verb;
    EXPECT_EQ(r.body["verb"], verb) << verb;
    EXPECT_LE(r.exit_code, 1) << verb << ": " << r.body.dump();
  }
}

TEST(Cli, OrientWithPin) {
  auto c = cmd("orient", {"star3.json"});
  c.pin = "a";
  const auto r = run(c);
  ASSERT_EQ(r.exit_code, 0) << r.body.dump();
  const auto tau = load_system(data_path("star3.json"));
  std::vector<ElementIndex> chosen;
  for (const auto& n : r.body["orientation"]) chosen.push_back(tau.index_of(n.get<std::string>()));
  EXPECT_TRUE(is_consistent(tau, chosen));
  for (ElementIndex y : chosen) EXPECT_FALSE(tau.less(tau.index_of("a"), y));
}

TEST(Cli, TameWitnessReplays) {
  const auto r = run(cmd("tame", {"omega_plus_one.json"}));
  ASSERT_EQ(r.exit_code, 1);
  const auto pres = load_presentation(data_path("omega_plus_one.json"));
  const auto bound = pres.parse_element(r.body["witness"]["upper_bound"].get<std::string>());
  const auto& chain = r.body["witness"]["sample"];
  ASSERT_GE(chain.size(), 2u);
  EXPECT_EQ(chain.back(), r.body["witness"]["upper_bound"]);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    EXPECT_EQ(compare(pres, pres.parse_element(chain[i].get<std::string>()), bound), Comparison::less);
  }
  EXPECT_EQ(run(cmd("tame", {"ray.json"})).exit_code, 0);
}

TEST(Cli, SplittingExitCodes) {
  auto c = cmd("splitting", {"omega_plus_one.json"});
  c.element = "e[top]-";
  EXPECT_EQ(run(c).exit_code, 1);
  c.element = "e[top]+";
  EXPECT_EQ(run(c).exit_code, 0);
  c.element = "e[top]?";
  EXPECT_EQ(run(c).exit_code, 2);
}

TEST(Cli, SubbaseAndArc) {
  auto c = cmd("subbase", {"omega_plus_one.json"});
  c.element = "e[3]+";
  c.point = "e[3]@3/4";
  EXPECT_EQ(run(c).exit_code, 0);
  c.point = "e[3]@1/4";
  EXPECT_EQ(run(c).exit_code, 1);
  c.r = "0";
  EXPECT_EQ(run(c).body["error"], "InvalidCoordinate");

  auto a = cmd("arc", {"omega_plus_one.json"});
  a.u = "u";
  a.v = "v";
  const auto r = run(a);
  ASSERT_EQ(r.exit_code, 0) << r.body.dump();
}

TEST(Cli, ContractAndTruncate) {
  auto c = cmd("contract", {"omega_plus_one.json"});
  c.intervals = {"e[0,omega)"};
  const auto r = run(c);
  ASSERT_EQ(r.exit_code, 0) << r.body.dump();
  const auto result = presentation_from_json(r.body);
  EXPECT_EQ(result.label(0).kind, LabelKind::finite);
  EXPECT_EQ(result.label(0).k, 1u);

  auto t = cmd("truncate", {"omega_plus_one.json"});
  t.depth = 3;
  const auto tr = run(t);
  ASSERT_EQ(tr.exit_code, 0);
  EXPECT_EQ(system_from_json(tr.body).separation_count(), 4u);
}

TEST(Cli, FlipPathAndRoundtrip) {
  auto c = cmd("flip-path", {"p3.json"});
  c.from = {"(b,a)", "(c,b)"};
  c.to = {"(a,b)", "(b,c)"};
  const auto r = run(c);
  ASSERT_EQ(r.exit_code, 0) << r.body.dump();
  EXPECT_EQ(r.body["steps"].size(), 3u);

  Command rt;
  rt.verb = "roundtrip";
  rt.random = 30;
  rt.seed = 9;
  EXPECT_EQ(run(rt).exit_code, 0);
}

TEST(Cli, DotOutput) {
  auto c = cmd("to-tree", {"star3.json"});
  c.format = OutputFormat::dot;
  const auto r = run(c);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.render(OutputFormat::dot).rfind("graph", 0), 0u);
  auto v = cmd("validate", {"star3.json"});
  v.format = OutputFormat::dot;
  EXPECT_EQ(run(v).exit_code, 2);
}

TEST(Cli, RationalParsing) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("3"), Rational(3));
}

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(shell("validate " + data_path("star3.json")).status, 0);
  EXPECT_EQ(shell("validate " + data_path("crossing.json")).status, 1);
  EXPECT_EQ(shell("validate " + data_path("antisymmetry.json")).status, 2);
  EXPECT_EQ(shell("no-such-verb").status, 2);
  EXPECT_EQ(shell("validate /nonexistent.json").status, 2);
  const auto r = shell("tame " + data_path("omega_plus_one.json"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("upper_bound"), std::string::npos);
  const auto d = shell("to-tree --format dot " + data_path("star3.json"));
  EXPECT_EQ(d.status, 0);
  EXPECT_EQ(d.out.rfind("graph", 0), 0u) << d.out;
}
