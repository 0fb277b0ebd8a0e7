#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "circlab/graph.hpp"

namespace circlab {

namespace {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

class MaxIndependentSet {
 public:
  MaxIndependentSet(const Graph& graph, Mask within, const SearchLimits& limits)
      : counter_(limits.node_budget) {
    adj_.resize(graph.order());
    for (Vertex v = 0; v < graph.order(); ++v) adj_[v] = graph.row_mask(v) & within;
    best_ = greedy(within);
    best_size_ = static_cast<std::size_t>(std::popcount(best_));
    branch(within, 0, 0);
  }

  Mask best() const { return best_; }
  bool exhausted() const { return counter_.exhausted(); }
  std::uint64_t nodes() const { return counter_.used(); }

 private:
  // Minimum-residual-degree greedy; seeds the incumbent.
  Mask greedy(Mask candidates) const {
    Mask chosen = 0;
    while (candidates != 0) {
      Vertex pick = 0;
      int pick_degree = 65;
      for (Mask bits = candidates; bits != 0; bits &= bits - 1) {
        const auto v = static_cast<Vertex>(std::countr_zero(bits));
        const int d = std::popcount(adj_[v] & candidates);
        if (d < pick_degree) {
          pick = v;
          pick_degree = d;
        }
      }
      chosen |= bit(pick);
      candidates &= ~(adj_[pick] | bit(pick));
    }
    return chosen;
  }

  // Number of cliques in a greedy clique cover of `candidates`; an upper bound
  // on the independent vertices still obtainable.
  std::size_t clique_cover_bound(Mask candidates) const {
    std::size_t cliques = 0;
    while (candidates != 0) {
      const auto v = static_cast<Vertex>(std::countr_zero(candidates));
      Mask clique = bit(v);
      Mask extend = adj_[v] & candidates;
      while (extend != 0) {
        const auto w = static_cast<Vertex>(std::countr_zero(extend));
        clique |= bit(w);
        extend &= adj_[w];
      }
      candidates &= ~clique;
      ++cliques;
    }
    return cliques;
  }

  void branch(Mask candidates, Mask current, std::size_t size) {
    if (!counter_.charge()) return;
    // Vertices of residual degree <= 1 belong to some maximum solution.
    for (bool changed = true; changed;) {
      changed = false;
      for (Mask bits = candidates; bits != 0; bits &= bits - 1) {
        const auto v = static_cast<Vertex>(std::countr_zero(bits));
        if (std::popcount(adj_[v] & candidates) <= 1) {
          current |= bit(v);
          ++size;
          candidates &= ~(adj_[v] | bit(v));
          changed = true;
          break;
        }
      }
    }
    if (candidates == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = current;
      }
      return;
    }
    if (size + clique_cover_bound(candidates) <= best_size_) return;

    Vertex pivot = 0;
    int pivot_degree = -1;
    for (Mask bits = candidates; bits != 0; bits &= bits - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(bits));
      const int d = std::popcount(adj_[v] & candidates);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    branch(candidates & ~(adj_[pivot] | bit(pivot)), current | bit(pivot), size + 1);
    if (counter_.exhausted()) return;
    branch(candidates & ~bit(pivot), current, size);
  }

  std::vector<Mask> adj_;
  NodeCounter counter_;
  Mask best_ = 0;
  std::size_t best_size_ = 0;
};

}  // namespace

VertexSet maximum_independent_set(const Graph& graph, const VertexSet& within,
                                  const SearchLimits& limits) {
  require_searchable(graph, limits, "maximum_independent_set");
  if (within.universe() != graph.order()) {
    throw std::invalid_argument("maximum_independent_set: set universe differs from graph order");
  }
  MaxIndependentSet search(graph, within.mask(), limits);
  if (search.exhausted()) throw BudgetExhausted("maximum_independent_set", search.nodes());
  return VertexSet::from_mask(graph.order(), search.best());
}

VertexSet maximum_independent_set(const Graph& graph, const SearchLimits& limits) {
  return maximum_independent_set(graph, graph.vertices(), limits);
}

std::size_t independence_number(const Graph& graph, const SearchLimits& limits) {
  return maximum_independent_set(graph, limits).size();
}

std::size_t clique_number(const Graph& graph, const SearchLimits& limits) {
  return independence_number(complement(graph), limits);
}

}  // namespace circlab
