#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "circlab/families.hpp"
#include "circlab/graph.hpp"
#include "circlab/limits.hpp"
#include "circlab/search_result.hpp"

namespace circlab {

/// Vertex map G -> H; mapping[v] is the image of v.
struct HomWitness {
  std::vector<Vertex> mapping;
  friend bool operator==(const HomWitness&, const HomWitness&) = default;
};

using HomResult = SearchResult<HomWitness>;

/// Recomputes edge preservation from scratch.
bool is_homomorphism(const Graph& g, const Graph& h, std::span<const Vertex> mapping);
/// Homomorphism whose edge image is all of E(H).
bool is_onto_edge_homomorphism(const Graph& g, const Graph& h, std::span<const Vertex> mapping);
/// (first then second): G -> H -> K.
HomWitness compose(const HomWitness& first, const HomWitness& second);

/// Exhaustive backtracking with forward checking. Variable order: smallest
/// live domain, then larger degree, then lower index; values ascending.
/// Requires |V(H)| <= 64 and G within the search guard.
HomResult exists_hom(const Graph& g, const Graph& h, const SearchLimits& limits = {});
HomResult exists_onto_edge_hom(const Graph& g, const Graph& h, const SearchLimits& limits = {});

/// Homomorphism into K_{n/d}, with the first branched vertex pinned to 0 and
/// the second restricted to [0, n/2]. Requires gcd(n,d)=1 and n >= 2d.
HomResult circular_hom(const Graph& g, std::size_t n, std::size_t d,
                       const SearchLimits& limits = {});

/// True when color c lies in [n-d+1, d-1] (mod n), i.e. within d-1 of 0.
bool in_root_window(std::size_t color, std::size_t n, std::size_t d);
/// c(root)=0, and c(v)=c(v') for every base vertex v of the last level whose
/// color lies outside the root window.
bool satisfies_root_twin_condition(const MycielskiGraph& mg, std::span<const Vertex> coloring,
                                   std::size_t n, std::size_t d);

/// Homomorphism M(H) -> K_{n/d} with c(z)=0 and the twin condition above,
/// enforced during search. Requires level >= 1, gcd(n,d)=1 and d >= 2.
HomResult constrained_mycielski_hom(const MycielskiGraph& mg, std::size_t n, std::size_t d,
                                    const SearchLimits& limits = {});

}  // namespace circlab
