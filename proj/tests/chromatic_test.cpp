#include <gtest/gtest.h>

#include "brute.hpp"
#include "circlab/chromatic.hpp"
#include "circlab/families.hpp"
#include "circlab/formulas.hpp"

namespace circlab {
namespace {

TEST(Chromatic, KneserFormula) {
  for (auto [m, n] : {std::pair{4, 2}, {5, 2}, {6, 2}, {7, 2}, {7, 3}}) {
    const Graph g = kneser(m, n);
    const auto r = chromatic_number(g);
    EXPECT_EQ(static_cast<std::int64_t>(r.value), kneser_chi(m, n)) << m << "," << n;
    EXPECT_TRUE(is_proper_coloring(g, r.witness));
    EXPECT_EQ(r.witness.k, r.value);
  }
}

TEST(Chromatic, MatchesBruteForce) {
  for (const char* name : {"C5", "C7", "M(K3)", "M(C5)", "SG(6,2)", "K2xK3", "K(7,3)"}) {
    const Graph g = build_family(std::string_view(name));
    EXPECT_EQ(chromatic_number(g).value, brute::chi(g)) << name;
  }
}

TEST(Chromatic, EdgelessAndEmpty) {
  const std::vector<Edge> none;
  EXPECT_EQ(chromatic_number(Graph(3, none)).value, 1u);
  EXPECT_EQ(chromatic_number(Graph(0, none)).value, 0u);
}

TEST(Chromatic, KColorable) {
  const Graph g = kneser(5, 2);
  EXPECT_TRUE(k_colorable(g, 2).refuted());
  const auto r = k_colorable(g, 3);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(is_proper_coloring(g, *r.witness));
  EXPECT_TRUE(k_colorable(g, 2, SearchLimits{64, 1}).exhausted() ||
              k_colorable(g, 2, SearchLimits{64, 1}).refuted());
}

TEST(Chromatic, ClassesFromColoring) {
  Coloring c{{0, 1, 0, 2}, 3};
  const auto classes = c.classes(4);
  ASSERT_EQ(classes.size(), 3u);
  EXPECT_EQ(classes[0], VertexSet(4, {0, 2}));
}

TEST(SternBrocot, MatchesFareyEnumeration) {
  for (std::int64_t k = 2; k <= 5; ++k) {
    for (std::int64_t cap = 1; cap <= 13; ++cap) {
      const auto got = stern_brocot_candidates(k - 1, k, cap);
      const auto want = brute::farey_between(k - 1, k, cap);
      ASSERT_EQ(got.size(), want.size()) << k << " " << cap;
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].numerator(), want[i].first);
        EXPECT_EQ(got[i].denominator(), want[i].second);
      }
    }
  }
}

TEST(Rational, Arithmetic) {
  const Rational a(10, 4);
  EXPECT_EQ(a.numerator(), 5);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(a.to_string(), "5/2");
  EXPECT_EQ(Rational(6, 3).to_string(), "2");
  EXPECT_EQ(a.ceil(), 3);
  EXPECT_LT(Rational(7, 3), Rational(5, 2));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

struct CircularCase {
  const char* name;
  std::int64_t num;
  std::int64_t den;
};

void PrintTo(const CircularCase& c, std::ostream* os) { *os << c.name; }

class CircularChromatic : public ::testing::TestWithParam<CircularCase> {};

TEST_P(CircularChromatic, ExactValue) {
  const auto& c = GetParam();
  const Graph g = build_family(std::string_view(c.name));
  const auto r = circular_chromatic_number(g);
  EXPECT_EQ(r.value, Rational(c.num, c.den)) << c.name;
  EXPECT_TRUE(is_homomorphism(g, circular_complete(static_cast<int>(r.n()), static_cast<int>(r.d())),
                              r.witness.mapping));
  EXPECT_GT(r.value, Rational(static_cast<std::int64_t>(r.chromatic) - 1));
  EXPECT_LE(r.value, Rational(static_cast<std::int64_t>(r.chromatic)));
}

INSTANTIATE_TEST_SUITE_P(
    Frozen, CircularChromatic,
    ::testing::Values(CircularCase{"C5", 5, 2}, CircularCase{"C7", 7, 3}, CircularCase{"K4", 4, 1},
                      CircularCase{"K(7,3)", 7, 3}, CircularCase{"KG(5,2)", 3, 1},
                      CircularCase{"M(K2)", 5, 2}, CircularCase{"M(K3)", 4, 1},
                      CircularCase{"M(P4)", 5, 2}, CircularCase{"SG(6,2)", 4, 1},
                      CircularCase{"P4", 2, 1}),
    [](const auto& info) {
      std::string s;
      for (char ch : std::string(info.param.name)) s += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
      return s;
    });

TEST(CircularChromatic, MatchesBruteForceOnRandomGraphs) {
  for (std::uint32_t seed = 1; seed <= 25; ++seed) {
    const Graph g = brute::random_graph(7, 0.4, seed);
    if (g.size() == 0) continue;
    const auto r = circular_chromatic_number(g);
    const auto [n, d] = brute::chi_c(g);
    EXPECT_EQ(r.value, Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)))
        << "seed " << seed;
  }
}

TEST(CircularChromatic, RequiresAnEdge) {
  const std::vector<Edge> none;
  EXPECT_THROW(circular_chromatic_number(Graph(3, none)), std::invalid_argument);
}

}  // namespace
}  // namespace circlab
