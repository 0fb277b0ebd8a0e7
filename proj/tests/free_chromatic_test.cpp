#include <gtest/gtest.h>

#include "brute.hpp"
#include "circlab/chromatic.hpp"
#include "circlab/families.hpp"
#include "circlab/free_chromatic.hpp"

namespace circlab {
namespace {

const NatOrInf kInf = NatOrInf::infinity();

TEST(Support, FiveCycle) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(supp(c5, VertexSet(5, {0})), (std::vector<Edge>{{2, 3}}));
  EXPECT_TRUE(supp(c5, VertexSet(5, {0, 2})).empty());
  EXPECT_THROW(supp(c5, VertexSet(5, {0, 1})), std::invalid_argument);
  EXPECT_TRUE(is_free_independent(c5, VertexSet(5, {0})));
  EXPECT_FALSE(is_free_independent(c5, VertexSet(5, {0, 2})));
}

TEST(Support, PetersenEdgeSupportsPair) {
  const Graph g = kneser(5, 2);
  // Vertices in colex order: {1,2}=0, {1,3}=1, {2,3}=2, {1,4}=3.
  EXPECT_TRUE(supports(g, Edge{2, 3}, VertexSet(10, {0, 1})));
}

TEST(Support, DefinitionLevelAgreement) {
  // F is free iff it extends to two distinct maximal independent sets.
  for (const char* name : {"C5", "C7", "KG(5,2)", "P4", "K2xK3", "M(K2)"}) {
    const Graph g = build_family(std::string_view(name));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << std::min<std::size_t>(g.order(), 10));
         ++mask) {
      const VertexSet f = VertexSet::from_mask(g.order(), mask);
      if (!is_independent(g, f)) continue;
      EXPECT_EQ(is_free_independent(g, f), count_maximal_extensions(g, f, 2) >= 2)
          << name << " mask " << mask;
    }
  }
}

TEST(FreeGraph, Recognition) {
  EXPECT_TRUE(is_free_graph(cycle_graph(5)));
  EXPECT_TRUE(is_free_graph(kneser(5, 2)));
  EXPECT_FALSE(is_free_graph(complete_graph(3)));
  EXPECT_FALSE(is_free_graph(complete_graph(2)));
  // In P4 the remainder G - N[1] is the single vertex 3.
  EXPECT_FALSE(is_free_graph(path_graph(4)));
  EXPECT_TRUE(is_free_graph(path_graph(6)));
  EXPECT_TRUE(vertex_criterion_gaps(cycle_graph(5)).empty());
}

TEST(FreeGraph, MaxFreeSize) {
  EXPECT_EQ(max_free_size(cycle_graph(5)), 1u);
  EXPECT_EQ(max_free_size(kneser(5, 2)), 2u);
  EXPECT_EQ(max_free_size(complete_graph(3)), 0u);
  for (const char* name : {"C7", "P4", "K2xK3", "SG(6,2)", "M(K2)"}) {
    const Graph g = build_family(std::string_view(name));
    EXPECT_EQ(max_free_size(g), brute::alpha_bar(g)) << name;
  }
}

TEST(FreeChromatic, FiveCycleValues) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(free_chromatic_number(c5).value, NatOrInf(5));
  EXPECT_EQ(ab_free_chromatic_number(c5, 0, 2).value, NatOrInf(5));
  EXPECT_EQ(ab_free_chromatic_number(c5, 0, 1).value, kInf);
  EXPECT_EQ(ab_free_chromatic_number(c5, 3, 1).value, NatOrInf(3));
}

TEST(FreeChromatic, WitnessesValidate) {
  for (const char* name : {"C5", "C7", "P6", "K2xK3", "KG(5,2)", "SG(5,2)"}) {
    const Graph g = build_family(std::string_view(name));
    const auto r = free_chromatic_number(g);
    ASSERT_TRUE(r.witness.has_value()) << name;
    EXPECT_EQ(r.witness->class_count(), r.value.value());
    EXPECT_TRUE(validate(g, *r.witness).empty()) << name;
  }
}

TEST(FreeChromatic, FrozenOracleValues) {
  EXPECT_EQ(free_chromatic_number(build_family("K2xK3")).value, NatOrInf(6));
  EXPECT_EQ(free_chromatic_number(build_family("K2xK2")).value, NatOrInf(4));
  EXPECT_EQ(free_chromatic_number(cycle_graph(7)).value, NatOrInf(4));
  EXPECT_EQ(free_chromatic_number(schrijver(5, 2)).value, NatOrInf(5));
  EXPECT_EQ(free_chromatic_number(complete_graph(3)).value, kInf);
  EXPECT_EQ(ab_free_chromatic_number(complete_graph(2), 2, 4).value, NatOrInf(2));
  EXPECT_EQ(ab_free_chromatic_number(complete_graph(3), 2, 4).value, kInf);
  EXPECT_EQ(ab_free_chromatic_number(path_graph(4), 2, 4).value, NatOrInf(2));
  EXPECT_EQ(ab_free_chromatic_number(cycle_graph(5), 2, 4).value, NatOrInf(3));
  EXPECT_EQ(ab_free_chromatic_number(build_family("M(K2)"), 0, 2).value, NatOrInf(5));
  EXPECT_EQ(ab_free_chromatic_number(build_family("M(K3)"), 0, 2).value, kInf);
  EXPECT_EQ(ab_free_chromatic_number(build_family("M(P4)"), 0, 2).value, NatOrInf(5));
}

TEST(FreeChromatic, MatchesBruteForceOnRandomGraphs) {
  const std::vector<std::pair<std::size_t, std::size_t>> params{{0, 1}, {0, 2}, {1, 1}, {2, 3}};
  for (std::uint32_t seed = 1; seed <= 30; ++seed) {
    const Graph g = brute::random_graph(7, 0.35, seed);
    for (auto [a, b] : params) {
      const auto got = ab_free_chromatic_number(g, a, b);
      const auto want = brute::phi_ab(g, a, b);
      if (want) {
        EXPECT_EQ(got.value, NatOrInf(*want)) << "seed " << seed << " a=" << a << " b=" << b;
        ASSERT_TRUE(got.witness.has_value());
        EXPECT_TRUE(is_valid(g, *got.witness));
      } else {
        EXPECT_TRUE(got.value.is_infinite()) << "seed " << seed << " a=" << a << " b=" << b;
      }
    }
    const auto phi = free_chromatic_number(g);
    const auto want = brute::phi(g);
    EXPECT_EQ(phi.value, want ? NatOrInf(*want) : kInf) << "seed " << seed;
  }
}

TEST(FreeChromatic, Preconditions) {
  EXPECT_THROW(ab_free_chromatic_number(cycle_graph(5), 0, 0), std::invalid_argument);
  const std::vector<Edge> none;
  EXPECT_EQ(free_chromatic_number(Graph(0, none)).value, NatOrInf(0));
  EXPECT_THROW(free_chromatic_number(kneser(7, 2), SearchLimits{64, 5}), BudgetExhausted);
}

TEST(FreeChromatic, ChainMonotonicity) {
  const Graph g = cycle_graph(7);
  for (std::size_t a = 0; a <= 2; ++a) {
    for (std::size_t b = 1; b <= 3; ++b) {
      const auto here = ab_free_chromatic_number(g, a, b).value;
      EXPECT_LE(ab_free_chromatic_number(g, a + 1, b).value, here);
      EXPECT_LE(ab_free_chromatic_number(g, a, b + 1).value, here);
    }
  }
}

TEST(Validate, ReportsEachViolation) {
  const Graph c5 = cycle_graph(5);
  FreeColoring fc;
  fc.classes = {VertexSet(5, {0, 1}), VertexSet(5, {2, 3, 4})};
  fc.a = 0;
  fc.b = 1;
  EXPECT_FALSE(validate(c5, fc).empty());

  FreeColoring good;
  for (Vertex v = 0; v < 5; ++v) good.classes.push_back(VertexSet(5, {v}));
  good.support_edges = {{2, 3}, {3, 4}, {0, 4}, {0, 1}, {1, 2}};
  good.b = 2;
  EXPECT_TRUE(validate(c5, good).empty());
  EXPECT_EQ(good.max_incidence(5), 2u);
  good.b = 1;
  EXPECT_FALSE(validate(c5, good).empty());
  good.b = 2;
  good.support_edges[0] = {0, 1};  // does not support {0}
  EXPECT_FALSE(validate(c5, good).empty());
}

TEST(Enumerate, CountsAndValidity) {
  const Graph c5 = cycle_graph(5);
  std::size_t seen = 0;
  const std::size_t visits = enumerate_free_colorings(
      c5, 0, 2, 5,
      [&](const FreeColoring& fc) {
        EXPECT_TRUE(is_valid(c5, fc));
        ++seen;
        return true;
      });
  EXPECT_EQ(visits, seen);
  // Five singletons, each with its unique support edge.
  EXPECT_EQ(visits, 1u);
  std::size_t stopped = 0;
  enumerate_free_colorings(c5, 3, 1, 5, [&](const FreeColoring&) { return ++stopped < 2; });
  EXPECT_EQ(stopped, 2u);
}

}  // namespace
}  // namespace circlab
