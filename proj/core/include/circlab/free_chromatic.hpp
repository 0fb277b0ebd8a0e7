#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "circlab/extended.hpp"
#include "circlab/graph.hpp"
#include "circlab/limits.hpp"

namespace circlab {

/// Support-edge cap meaning "no cap".
inline constexpr std::size_t kUnboundedCap = std::numeric_limits<std::size_t>::max();

/// An (a,b)-free coloring.
///
/// `classes` partition V(G) into nonempty independent sets. The first
/// support_edges.size() classes are the designated free classes and
/// support_edges[i] supports classes[i]. At most `a` classes are left
/// undesignated, and every vertex is an endpoint of at most `b` entries of
/// support_edges (counted with multiplicity).
struct FreeColoring {
  std::vector<VertexSet> classes;
  std::vector<Edge> support_edges;
  std::size_t a = 0;
  std::size_t b = kUnboundedCap;

  std::size_t class_count() const noexcept { return classes.size(); }
  std::size_t designated_count() const noexcept { return support_edges.size(); }
  /// Classes without a support edge.
  std::size_t non_free_count() const noexcept { return classes.size() - support_edges.size(); }
  /// Largest number of support edges meeting one vertex.
  std::size_t max_incidence(std::size_t order) const;
};

/// Violations of the FreeColoring invariants against `graph`; empty when valid.
std::vector<std::string> validate(const Graph& graph, const FreeColoring& coloring);
inline bool is_valid(const Graph& graph, const FreeColoring& coloring) {
  return validate(graph, coloring).empty();
}

/// Edges uv with (N(u) ∪ N(v)) ∩ F = ∅, ascending. Throws std::invalid_argument
/// when F is not independent.
std::vector<Edge> supp(const Graph& graph, const VertexSet& set);
bool supports(const Graph& graph, Edge e, const VertexSet& set);

/// F independent and supp(F) nonempty.
bool is_free_independent(const Graph& graph, const VertexSet& set);
/// Counts maximal independent sets containing F, stopping at `limit`. This is
/// the definition-level route for freeness (free iff the count reaches 2).
std::size_t count_maximal_extensions(const Graph& graph, const VertexSet& set, std::size_t limit);

/// Every vertex lies in a free independent set: for each v, G - N[v] has an edge.
bool is_free_graph(const Graph& graph);
/// Vertices whose remainder G - N[v] is nonempty but edgeless; these satisfy a
/// vertex-only reading of freeness without lying in any free set.
std::vector<Vertex> vertex_criterion_gaps(const Graph& graph);

/// Largest nonempty free independent set size, 0 when there is none. Computed
/// as the max over edges uv of alpha(G - (N(u) ∪ N(v))).
std::size_t max_free_size(const Graph& graph, const SearchLimits& limits = {});

struct FreeChromatic {
  NatOrInf value = NatOrInf::infinity();
  std::optional<FreeColoring> witness;
  std::uint64_t nodes = 0;
};

/// phi(G): fewest free independent classes partitioning V(G), infinity when G
/// is not free. Throws BudgetExhausted.
FreeChromatic free_chromatic_number(const Graph& graph, const SearchLimits& limits = {});

/// phi^a_b(G) by iterative deepening over the class count, starting at chi(G).
/// Throws BudgetExhausted.
FreeChromatic ab_free_chromatic_number(const Graph& graph, std::size_t a, std::size_t b,
                                       const SearchLimits& limits = {});

/// Calls `visit` for every valid (a,b)-free coloring with at most `max_classes`
/// classes, in canonical form (classes ordered by least member, designations
/// and support edges in every admissible combination). Stops early when
/// `visit` returns false. Returns the number of colorings visited. Throws
/// BudgetExhausted.
std::size_t enumerate_free_colorings(const Graph& graph, std::size_t a, std::size_t b,
                                     std::size_t max_classes,
                                     const std::function<bool(const FreeColoring&)>& visit,
                                     const SearchLimits& limits = {});

}  // namespace circlab
