#pragma once

// Backtracking homomorphism search shared by hom_search and chromatic.
// Domains are bitmasks over the target vertices, so targets have at most 64
// vertices.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "circlab/graph.hpp"
#include "circlab/search_result.hpp"

namespace circlab::detail {

using Mask = std::uint64_t;

enum class ValueSymmetry {
  none,
  /// All target values interchangeable (K_k): a branch may open at most one
  /// new value beyond those already used.
  interchangeable,
  /// Target is K_{n/d} with full initial domains: the first branched vertex
  /// is pinned to 0 (rotation) and the second to [0, n/2] (reflection).
  rotational,
};

struct HomProblem {
  const Graph* source = nullptr;
  std::vector<Mask> target_adjacency;
  std::size_t target_order = 0;
  /// Initial domain per source vertex; empty means "all target vertices".
  std::vector<Mask> domains;
  ValueSymmetry symmetry = ValueSymmetry::none;
  /// Extra propagation after `var := value`; narrows `domains` of unassigned
  /// vertices and returns false on a wipe-out. `assignment[v]` is -1 when v is
  /// unassigned.
  std::function<bool(Vertex var, Vertex value, std::span<Mask> domains,
                     std::span<const int> assignment)>
      propagate;
  /// Leaf filter; a complete mapping is reported only if it returns true.
  std::function<bool(std::span<const int> assignment)> accept;
  std::uint64_t node_budget = 50'000'000;
};

struct HomSolution {
  std::vector<Vertex> mapping;
};

SearchResult<HomSolution> solve(const HomProblem& problem);

std::vector<Mask> adjacency_masks(const Graph& target);
std::vector<Mask> circular_masks(std::size_t n, std::size_t d);

}  // namespace circlab::detail
