#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "treesets/error.hpp"
#include "treesets/finite_bridge.hpp"
#include "treesets/orientation.hpp"

using namespace treesets;
using namespace treesets::testing;

namespace {

Tree p3() { return Tree::build({"a", "b", "c"}, {{"a", "b", ""}, {"b", "c", ""}}); }
Tree k13() {
  return Tree::build({"c", "l1", "l2", "l3"}, {{"l1", "c", ""}, {"l2", "c", ""}, {"l3", "c", ""}});
}

std::vector<ElementIndex> ids(const SeparationSystem& s, std::vector<std::string> names) {
  std::vector<ElementIndex> out;
  for (const auto& n : names) out.push_back(s.index_of(n));
  std::sort(out.begin(), out.end());
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::invalid_argument;
}

bool pin_maximal(const SeparationSystem& s, const std::vector<ElementIndex>& o, ElementIndex pin) {
  return std::none_of(o.begin(), o.end(), [&](ElementIndex y) { return s.less(pin, y); });
}

}  // namespace

TEST(Consistency, PathExamples) {
  const auto tau = edge_tree_set(p3());
  EXPECT_FALSE(is_consistent(tau, make_partial(tau, ids(tau, {"(b,a)", "(b,c)"}))));
  EXPECT_TRUE(is_consistent(tau, make_partial(tau, ids(tau, {"(a,b)", "(b,c)"}))));
  EXPECT_TRUE(is_consistent(tau, make_partial(tau, {})));
  EXPECT_EQ(code_of([&] { make_partial(tau, ids(tau, {"(a,b)", "(b,a)"})); }), ErrorCode::double_oriented);
  EXPECT_EQ(code_of([&] { make_partial(tau, {99}); }), ErrorCode::unknown_element);
}

TEST(Extend, PathExamples) {
  const auto tau = edge_tree_set(p3());
  auto ext = extend(tau, make_partial(tau, {}), tau.index_of("(a,b)"));
  EXPECT_EQ(ext.orientation.chosen, ids(tau, {"(a,b)", "(c,b)"}));
  EXPECT_TRUE(ext.unique);
  ext = extend(tau, make_partial(tau, ids(tau, {"(a,b)", "(b,c)"})));
  EXPECT_EQ(ext.orientation.chosen, ids(tau, {"(a,b)", "(b,c)"}));
}

TEST(Extend, Errors) {
  const auto s = SeparationSystem::build(std::vector<NamePair>{{"x", "x*"}, {"r", "r*"}},
                                         std::vector<NamePair>{{"x", "r"}, {"x", "r*"}});
  EXPECT_EQ(code_of([&] { extend(s, make_partial(s, {s.index_of("x*")})); }), ErrorCode::co_trivial_element);
  EXPECT_EQ(code_of([&] { extend(s, make_partial(s, {}), s.index_of("x")); }), ErrorCode::pin_trivial);
  const auto tau = edge_tree_set(p3());
  EXPECT_EQ(code_of([&] { extend(tau, make_partial(tau, ids(tau, {"(b,c)"})), tau.index_of("(a,b)")); }),
            ErrorCode::pin_not_maximal);
  EXPECT_EQ(code_of([&] { extend(tau, make_partial(tau, ids(tau, {"(b,a)", "(b,c)"}))); }),
            ErrorCode::inconsistent_input);
}

TEST(OrientationOf, Examples) {
  const auto tau = edge_tree_set(p3());
  EXPECT_EQ(orientation_of(tau, tau.index_of("(a,b)")).chosen, ids(tau, {"(a,b)", "(c,b)"}));
  EXPECT_EQ(orientation_of(tau, tau.index_of("(b,c)")).chosen, ids(tau, {"(a,b)", "(b,c)"}));
  const auto k = edge_tree_set(k13());
  EXPECT_EQ(orientation_of(k, k.index_of("(l1,c)")).chosen, ids(k, {"(l1,c)", "(l2,c)", "(l3,c)"}));
  EXPECT_EQ(orientation_of(k, k.index_of("(c,l1)")).chosen, ids(k, {"(c,l1)", "(l2,c)", "(l3,c)"}));
}

TEST(OrientationOf, InverseDiffersInOneSeparation) {
  for (const auto& t : random_trees(60, 9, 4)) {
    const auto tau = edge_tree_set(t);
    for (ElementIndex x = 0; x < tau.size(); ++x) {
      const auto a = orientation_of(tau, x);
      const auto b = orientation_of(tau, tau.inverse(x));
      std::size_t diff = 0;
      for (std::size_t i = 0; i < a.chosen.size(); ++i) diff += a.chosen[i] != b.chosen[i];
      EXPECT_EQ(diff, 1u);
      EXPECT_TRUE(a.contains(x));
      EXPECT_TRUE(b.contains(tau.inverse(x)));
    }
  }
}

TEST(Stars, PathExamples) {
  const auto tau = edge_tree_set(p3());
  auto o = make_orientation(tau, ids(tau, {"(a,b)", "(c,b)"}));
  auto st = star_of(tau, o);
  EXPECT_EQ(st.members, ids(tau, {"(a,b)", "(c,b)"}));
  EXPECT_TRUE(is_splitting(tau, o));
  o = make_orientation(tau, ids(tau, {"(b,a)", "(c,b)"}));
  EXPECT_EQ(star_of(tau, o).members, ids(tau, {"(b,a)"}));
  EXPECT_TRUE(is_splitting(tau, o));
  o = make_orientation(tau, ids(tau, {"(b,a)", "(b,c)"}));
  EXPECT_FALSE(o.consistent);
  EXPECT_EQ(code_of([&] { star_of(tau, o); }), ErrorCode::inconsistent_orientation);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_orientations(edge_tree_set(p3())).size(), 3u);
  const auto k = enumerate_orientations(edge_tree_set(k13()));
  EXPECT_EQ(k.size(), 4u);
  for (const auto& o : k) EXPECT_TRUE(o.splitting);
  const auto empty = SeparationSystem::build(std::vector<NamePair>{}, std::vector<NamePair>{});
  const auto e = enumerate_orientations(empty);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_TRUE(e[0].chosen.empty());
}

TEST(Enumerate, TooLarge) {
  std::vector<std::string> vs;
  std::vector<EdgeInput> es;
  for (int i = 0; i <= 21; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 0; i < 21; ++i) es.push_back({vs[i], vs[i + 1], ""});
  const auto tau = edge_tree_set(Tree::build(vs, es));
  EXPECT_EQ(code_of([&] { enumerate_orientations(tau); }), ErrorCode::too_large);
}

TEST(Enumerate, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto s = random_bipartition_system(rng, 3 + i % 2, 1 + i % 8);
    const auto got = enumerate_orientations(s);
    const auto want = orientations_oracle(s);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      EXPECT_EQ(got[k].chosen, want[k]);
      EXPECT_EQ(got[k].splitting, splitting_oracle(s, want[k]));
    }
  }
}

TEST(Enumerate, FiniteTreeSetsAreSplittingAndStarsAreStars) {
  for (const auto& t : exhaustive_trees(5)) {
    const auto tau = edge_tree_set(t);
    for (const auto& o : enumerate_orientations(tau)) {
      EXPECT_TRUE(o.splitting);
      const auto st = star_of(tau, o);
      EXPECT_TRUE(is_star(tau, st.members));
      EXPECT_EQ(st.members, maximal_oracle(tau, o.chosen));
    }
    for (ElementIndex x = 0; x < tau.size(); ++x) EXPECT_TRUE(lies_in_splitting_star(tau, x));
  }
}

// extend() against exhaustive enumeration, on systems that live in
// a universe of set bipartitions.
TEST(Extend, AgreesWithEnumeration) {
  std::mt19937_64 rng(23);
  std::size_t checked = 0;
  for (int i = 0; i < 300; ++i) {
    const auto s = random_bipartition_system(rng, 3 + i % 2, 1 + i % 7);
    const auto all = orientations_oracle(s);
    const bool nested_sys = validate_tree_set(s).is_nested;
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<ElementIndex> p;
      for (SeparationIndex k = 0; k < s.separation_count(); ++k) {
        const auto r = rng() % 4;
        if (r < 2) p.push_back(2 * k + r);
      }
      std::optional<ElementIndex> pin;
      if (!p.empty() && rng() % 3) pin = p[rng() % p.size()];
      if (!consistent_oracle(s, p)) continue;
      if (std::any_of(p.begin(), p.end(), [&](ElementIndex x) { return co_trivial_oracle(s, x); })) {
        EXPECT_EQ(code_of([&] { extend(s, make_partial(s, p), pin); }), ErrorCode::co_trivial_element);
        continue;
      }
      if (pin && (trivial_oracle(s, *pin) || !pin_maximal(s, p, *pin))) continue;
      const auto ext = extend(s, make_partial(s, p), pin);
      const auto& o = ext.orientation.chosen;
      EXPECT_NE(std::find(all.begin(), all.end(), o), all.end());
      for (ElementIndex x : p) EXPECT_TRUE(ext.orientation.contains(x));
      if (pin) {
        EXPECT_TRUE(pin_maximal(s, o, *pin));
        if (nested_sys) {
          EXPECT_TRUE(ext.unique);
          std::size_t candidates = 0;
          for (const auto& cand : all) {
            const bool has_p = std::all_of(p.begin(), p.end(), [&](ElementIndex x) {
              return std::binary_search(cand.begin(), cand.end(), x);
            });
            if (has_p && pin_maximal(s, cand, *pin)) ++candidates;
          }
          EXPECT_EQ(candidates, 1u);
        }
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 500u);
}
