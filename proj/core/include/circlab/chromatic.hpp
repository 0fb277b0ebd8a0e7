#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "circlab/graph.hpp"
#include "circlab/hom_search.hpp"
#include "circlab/limits.hpp"
#include "circlab/rational.hpp"
#include "circlab/search_result.hpp"

namespace circlab {

/// color[v] in 0..k-1.
struct Coloring {
  std::vector<std::size_t> color;
  std::size_t k = 0;

  /// Color classes in color order (classes may be empty).
  std::vector<VertexSet> classes(std::size_t order) const;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

bool is_proper_coloring(const Graph& graph, const Coloring& coloring);

/// A proper k-coloring or a proof that none exists. Uses the homomorphism
/// engine with color-symmetry breaking.
SearchResult<Coloring> k_colorable(const Graph& graph, std::size_t k,
                                   const SearchLimits& limits = {});

struct ChromaticNumber {
  std::size_t value = 0;
  Coloring witness;
  std::uint64_t nodes = 0;
};

/// Least k with a proper k-coloring, scanning upward from the clique number.
/// Throws BudgetExhausted.
ChromaticNumber chromatic_number(const Graph& graph, const SearchLimits& limits = {});

struct CircularChromaticNumber {
  Rational value;
  HomWitness witness;
  std::size_t chromatic = 0;
  std::size_t candidates_refuted = 0;
  std::uint64_t nodes = 0;

  std::size_t n() const noexcept { return static_cast<std::size_t>(value.numerator()); }
  std::size_t d() const noexcept { return static_cast<std::size_t>(value.denominator()); }
};

/// Least p/q with chi-1 < p/q <= chi and p <= |V(G)| such that G -> K_{p/q}.
/// Since K_{p/q} -> K_{r/s} whenever p/q <= r/s, feasibility is monotone over
/// the candidates: the largest one below chi is probed first and, if it is
/// feasible, the least feasible candidate is found by bisection. Requires at
/// least one edge. Throws BudgetExhausted if a probe runs out of budget.
CircularChromaticNumber circular_chromatic_number(const Graph& graph,
                                                  const SearchLimits& limits = {});

}  // namespace circlab
