#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "circlab/chromatic.hpp"
#include "circlab/families.hpp"
#include "circlab/free_chromatic.hpp"
#include "circlab/hom_search.hpp"

namespace circlab {

/// A construction produced something that fails validation. Carries the
/// offending coloring and the validator's complaints so the caller can report
/// it as a counterexample candidate.
class ConstructionFailure : public std::runtime_error {
 public:
  ConstructionFailure(const std::string& what, FreeColoring coloring,
                      std::vector<std::string> problems);
  const FreeColoring& coloring() const noexcept { return coloring_; }
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  FreeColoring coloring_;
  std::vector<std::string> problems_;
};

/// Block coloring from a circular witness c : G -> K_{n/d}, d >= 2. Block j
/// (0-based) collects colors j(d-1)+1 .. (j+1)(d-1) read in 1..n (color 0
/// plays n); the last block takes the remainder. Block j is supported by
/// the least edge with colors {j(d-1), (j+1)(d-1)+1} mod n. Empty blocks are
/// dropped. Result has a=0, b=2.
FreeColoring free_coloring_from_circular(const Graph& graph, const HomWitness& witness,
                                         std::size_t n, std::size_t d);

/// Chooses a minimum-span edge uv, gives every vertex of N(u) ∪ N(v) its own
/// class and colors the rest optimally. Requires a free graph.
FreeColoring free_coloring_via_edge(const Graph& graph, const SearchLimits& limits = {});

enum class GirthVariant {
  /// Four special classes: tree case when acyclic, else {u1},{u2},N(u1)-u2,N(u2)-u1.
  four,
  /// Two special classes N(u1), N(u2); needs a cycle and girth >= 7.
  two,
};

/// Girth-based construction on a shortest cycle u1 u2 ... (or, for trees,
/// around the second-to-last vertex of a longest path). Requires a free graph
/// with girth >= 5.
FreeColoring free_coloring_girth(const Graph& graph, GirthVariant variant = GirthVariant::four,
                                 const SearchLimits& limits = {});

/// Restricts a coloring of M(H) to H: classes are intersected with V(H),
/// support edges through the root are dropped (their classes become
/// undesignated) and base-twin edges v w' become v w. Output parameters are
/// (a+b, 2b). Requires level >= 1 and a valid input.
FreeColoring mycielski_pushdown(const MycielskiGraph& mg, const FreeColoring& coloring);

struct PipelineStage {
  std::size_t level = 0;
  FreeColoring coloring;
};

/// Block coloring of M^t(G) followed by t pushdowns down to G.
struct BlockPushdownResult {
  /// False when chi_c(M^t(G)) = chi(M^t(G)); then nothing else is filled in.
  bool applicable = false;
  Rational circular;
  std::size_t chromatic = 0;
  HomWitness witness;
  /// stages[0] lives on M^t(G), stages[t] on G.
  std::vector<PipelineStage> stages;
  /// Undesignated classes left on G.
  std::size_t p = 0;
  /// Support edges of the block coloring that meet a root of M^t(G).
  std::size_t root_incident = 0;
  std::size_t cap = 0;
  std::uint64_t nodes = 0;
};

/// Runs the pipeline with a root/twin-constrained witness at the exact chi_c.
/// Throws ConstructionFailure on any invalid intermediate coloring and
/// std::runtime_error if the constrained witness does not exist.
BlockPushdownResult block_pushdown_pipeline(const Graph& graph, std::size_t t,
                                            const SearchLimits& limits = {});

/// A shortest cycle as a vertex sequence, empty for forests.
std::vector<Vertex> shortest_cycle(const Graph& graph);
/// A longest path of a forest (a diameter path of its widest component).
std::vector<Vertex> longest_forest_path(const Graph& graph);

}  // namespace circlab
