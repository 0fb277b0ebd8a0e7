#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "circlab/graph.hpp"

// Exhaustive reference implementations. They only read adjacency through
// Graph::adjacent and share no search code with the library.
namespace circlab::brute {

std::size_t alpha(const Graph& g);
std::size_t omega(const Graph& g);
std::size_t chi(const Graph& g);

using Adjacency = std::function<bool(std::size_t, std::size_t)>;
/// Any map V(G) -> [0, target_order) preserving edges.
bool hom_exists(const Graph& g, std::size_t target_order, const Adjacency& target_adj);
bool hom_exists(const Graph& g, const Graph& h);

/// Least n/d over all 2 <= 2d <= n <= |V| with G -> K_{n/d}.
std::pair<std::size_t, std::size_t> chi_c(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// Edges uv with (N(u) ∪ N(v)) disjoint from `set`.
std::vector<Edge> support(const Graph& g, std::uint64_t set);

/// phi^a_b by enumerating every set partition and every choice of designated
/// classes and support edges; nullopt is infinity.
std::optional<std::size_t> phi_ab(const Graph& g, std::size_t a, std::size_t b);
std::optional<std::size_t> phi(const Graph& g);

/// Largest free independent set, by checking for two distinct maximal
/// independent supersets.
std::size_t alpha_bar(const Graph& g);

/// All reduced p/q with lower < p/q <= upper and p <= max_num, ascending.
std::vector<std::pair<std::int64_t, std::int64_t>> farey_between(std::int64_t lower,
                                                                 std::int64_t upper,
                                                                 std::int64_t max_num);

/// G(n, p) with edges decided by a seeded mt19937.
Graph random_graph(std::size_t n, double p, std::uint32_t seed);

}  // namespace circlab::brute
