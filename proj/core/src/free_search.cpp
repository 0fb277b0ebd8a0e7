#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "circlab/chromatic.hpp"
#include "circlab/free_chromatic.hpp"

namespace circlab {

namespace {

using Mask = std::uint64_t;

struct EdgeInfo {
  Edge edge;
  Mask blocked;  // N(u) ∪ N(v)
};

// Canonical set-partition search: vertices are placed in index order, so
// classes appear ordered by least member. Each class tracks whether it still
// has a supporting edge; supp only shrinks as a class grows.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& graph, std::size_t a, std::size_t b, std::uint64_t budget)
      : n_(graph.order()), a_(a), b_(b), counter_(budget) {
    adj_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) adj_[v] = graph.row_mask(v);
    for (const Edge& e : graph.edges()) edges_.push_back({e, adj_[e.u] | adj_[e.v]});
    classes_.assign(n_, 0);
    incidence_.assign(n_, 0);
  }

  /// Looks for a coloring with exactly t classes.
  std::optional<FreeColoring> find(std::size_t t) {
    target_ = t;
    enumerate_ = false;
    result_.reset();
    place(0, 0, 0);
    return result_;
  }

  /// Visits every valid coloring with at most max_classes classes.
  std::size_t enumerate(std::size_t max_classes,
                        const std::function<bool(const FreeColoring&)>& visit) {
    target_ = max_classes;
    enumerate_ = true;
    visit_ = &visit;
    visited_ = 0;
    stopped_ = false;
    place(0, 0, 0);
    return visited_;
  }

  bool exhausted() const { return counter_.exhausted(); }
  std::uint64_t nodes() const { return counter_.used(); }

 private:
  bool has_support(Mask cls) const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [&](const EdgeInfo& e) { return (e.blocked & cls) == 0; });
  }

  bool done() const { return counter_.exhausted() || result_.has_value() || stopped_; }

  void place(Vertex v, std::size_t count, std::size_t non_free) {
    if (done() || !counter_.charge()) return;
    if (v == n_) {
      if (enumerate_ || count == target_) leaf(count, non_free);
      return;
    }
    if (!enumerate_ && count + (n_ - v) < target_) return;
    const Mask bit = Mask{1} << v;
    for (std::size_t c = 0; c < count && !done(); ++c) {
      if ((classes_[c] & adj_[v]) != 0) continue;
      const bool was_free = has_support(classes_[c]);
      classes_[c] |= bit;
      const bool now_free = has_support(classes_[c]);
      const std::size_t next_non_free = non_free + (was_free && !now_free ? 1 : 0);
      if (next_non_free <= a_) place(v + 1, count, next_non_free);
      classes_[c] &= ~bit;
    }
    if (count < target_ && !done()) {
      classes_[count] = bit;
      const std::size_t next_non_free = non_free + (has_support(bit) ? 0 : 1);
      if (next_non_free <= a_) place(v + 1, count + 1, next_non_free);
      classes_[count] = 0;
    }
  }

  // Chooses support edges (or leaves classes undesignated) under the cap.
  void leaf(std::size_t count, std::size_t non_free) {
    supports_.assign(count, {});
    for (std::size_t c = 0; c < count; ++c) {
      for (const EdgeInfo& e : edges_) {
        if ((e.blocked & classes_[c]) == 0) supports_[c].push_back(e.edge);
      }
    }
    order_.resize(count);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return supports_[x].size() < supports_[y].size();
    });
    chosen_.assign(count, std::nullopt);
    const std::size_t skips = a_ >= count ? count : a_;
    (void)non_free;
    assign(0, count, skips);
  }

  void assign(std::size_t index, std::size_t count, std::size_t skips_left) {
    if (done()) return;
    if (index == count) {
      emit(count);
      return;
    }
    const std::size_t c = order_[index];
    for (const Edge& e : supports_[c]) {
      if (done() || !counter_.charge()) return;
      if (b_ != kUnboundedCap && (incidence_[e.u] >= b_ || incidence_[e.v] >= b_)) continue;
      ++incidence_[e.u];
      ++incidence_[e.v];
      chosen_[c] = e;
      assign(index + 1, count, skips_left);
      chosen_[c].reset();
      --incidence_[e.u];
      --incidence_[e.v];
      // Without a binding cap every edge choice behaves the same.
      if (!enumerate_ && b_ >= count) break;
    }
    if (skips_left > 0 && !done()) assign(index + 1, count, skips_left - 1);
  }

  void emit(std::size_t count) {
    FreeColoring coloring;
    coloring.a = a_;
    coloring.b = b_;
    for (std::size_t c = 0; c < count; ++c) {
      if (chosen_[c]) {
        coloring.classes.push_back(VertexSet::from_mask(n_, classes_[c]));
        coloring.support_edges.push_back(*chosen_[c]);
      }
    }
    for (std::size_t c = 0; c < count; ++c) {
      if (!chosen_[c]) coloring.classes.push_back(VertexSet::from_mask(n_, classes_[c]));
    }
    if (enumerate_) {
      ++visited_;
      if (!(*visit_)(coloring)) stopped_ = true;
    } else {
      result_ = std::move(coloring);
    }
  }

  std::size_t n_;
  std::size_t a_;
  std::size_t b_;
  NodeCounter counter_;
  std::vector<Mask> adj_;
  std::vector<EdgeInfo> edges_;
  std::vector<Mask> classes_;
  std::vector<std::size_t> incidence_;
  std::vector<std::vector<Edge>> supports_;
  std::vector<std::size_t> order_;
  std::vector<std::optional<Edge>> chosen_;

  std::size_t target_ = 0;
  bool enumerate_ = false;
  const std::function<bool(const FreeColoring&)>* visit_ = nullptr;
  std::size_t visited_ = 0;
  bool stopped_ = false;
  std::optional<FreeColoring> result_;
};

}  // namespace

FreeChromatic ab_free_chromatic_number(const Graph& graph, std::size_t a, std::size_t b,
                                       const SearchLimits& limits) {
  if (b < 1) throw std::invalid_argument("ab_free_chromatic_number: need b >= 1");
  require_searchable(graph, limits, "ab_free_chromatic_number");
  FreeChromatic out;
  if (graph.order() == 0) {
    out.value = 0;
    out.witness = FreeColoring{{}, {}, a, b};
    return out;
  }
  const ChromaticNumber chi = chromatic_number(graph, limits);
  out.nodes = chi.nodes;
  for (std::size_t t = chi.value; t <= graph.order(); ++t) {
    PartitionSearch search(graph, a, b, limits.node_budget);
    auto found = search.find(t);
    out.nodes += search.nodes();
    if (search.exhausted()) {
      throw BudgetExhausted("ab_free_chromatic_number (t=" + std::to_string(t) + ")", out.nodes);
    }
    if (found) {
      out.value = t;
      out.witness = std::move(found);
      return out;
    }
  }
  return out;
}

FreeChromatic free_chromatic_number(const Graph& graph, const SearchLimits& limits) {
  require_searchable(graph, limits, "free_chromatic_number");
  if (!is_free_graph(graph)) return FreeChromatic{};
  return ab_free_chromatic_number(graph, 0, kUnboundedCap, limits);
}

std::size_t enumerate_free_colorings(const Graph& graph, std::size_t a, std::size_t b,
                                     std::size_t max_classes,
                                     const std::function<bool(const FreeColoring&)>& visit,
                                     const SearchLimits& limits) {
  if (b < 1) throw std::invalid_argument("enumerate_free_colorings: need b >= 1");
  require_searchable(graph, limits, "enumerate_free_colorings");
  PartitionSearch search(graph, a, b, limits.node_budget);
  const std::size_t visited = search.enumerate(std::min(max_classes, graph.order()), visit);
  if (search.exhausted()) throw BudgetExhausted("enumerate_free_colorings", search.nodes());
  return visited;
}

}  // namespace circlab
