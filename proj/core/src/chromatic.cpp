#include "circlab/chromatic.hpp"

#include <functional>
#include <stdexcept>

#include "hom_engine.hpp"

namespace circlab {

std::vector<Rational> stern_brocot_candidates(std::int64_t lower, std::int64_t upper,
                                              std::int64_t max_numerator) {
  if (upper != lower + 1 || lower < 0) {
    throw std::invalid_argument("stern_brocot_candidates: bounds must be consecutive integers");
  }
  struct Frac {
    std::int64_t p, q;
  };
  std::vector<Rational> out;
  std::function<void(Frac, Frac)> walk = [&](Frac left, Frac right) {
    const Frac mid{left.p + right.p, left.q + right.q};
    if (mid.p > max_numerator) return;
    walk(left, mid);
    out.emplace_back(mid.p, mid.q);
    walk(mid, right);
  };
  walk(Frac{lower, 1}, Frac{upper, 1});
  if (upper <= max_numerator) out.emplace_back(upper, 1);
  return out;
}

std::vector<VertexSet> Coloring::classes(std::size_t order) const {
  std::vector<VertexSet> out(k, VertexSet(order));
  for (Vertex v = 0; v < color.size(); ++v) out.at(color[v]).insert(v);
  return out;
}

bool is_proper_coloring(const Graph& graph, const Coloring& coloring) {
  if (coloring.color.size() != graph.order()) return false;
  for (std::size_t c : coloring.color) {
    if (c >= coloring.k) return false;
  }
  for (const Edge& e : graph.edges()) {
    if (coloring.color[e.u] == coloring.color[e.v]) return false;
  }
  return true;
}

SearchResult<Coloring> k_colorable(const Graph& graph, std::size_t k, const SearchLimits& limits) {
  require_searchable(graph, limits, "k_colorable");
  SearchResult<Coloring> out;
  if (k > kMaxSearchVertices) {
    // More colors than vertices the guard admits: the identity coloring works.
    out.status = SearchStatus::found;
    Coloring c{std::vector<std::size_t>(graph.order()), k};
    for (Vertex v = 0; v < graph.order(); ++v) c.color[v] = v;
    out.witness = std::move(c);
    return out;
  }
  std::vector<detail::Mask> target(k);
  for (std::size_t i = 0; i < k; ++i) {
    const detail::Mask all = k == 64 ? ~detail::Mask{0} : (detail::Mask{1} << k) - 1;
    target[i] = all & ~(detail::Mask{1} << i);
  }
  detail::HomProblem problem;
  problem.source = &graph;
  problem.target_adjacency = std::move(target);
  problem.target_order = k;
  problem.symmetry = detail::ValueSymmetry::interchangeable;
  problem.node_budget = limits.node_budget;
  auto raw = detail::solve(problem);
  out.status = raw.status;
  out.nodes = raw.nodes;
  if (raw.witness) out.witness = Coloring{std::move(raw.witness->mapping), k};
  return out;
}

ChromaticNumber chromatic_number(const Graph& graph, const SearchLimits& limits) {
  require_searchable(graph, limits, "chromatic_number");
  ChromaticNumber out;
  if (graph.order() == 0) return out;
  std::size_t k = graph.size() == 0 ? 1 : std::max<std::size_t>(2, clique_number(graph, limits));
  for (;; ++k) {
    auto attempt = k_colorable(graph, k, limits);
    out.nodes += attempt.nodes;
    if (attempt.exhausted()) {
      throw BudgetExhausted("chromatic_number (k=" + std::to_string(k) + ")", out.nodes);
    }
    if (attempt.found()) {
      out.value = k;
      out.witness = std::move(*attempt.witness);
      return out;
    }
  }
}

CircularChromaticNumber circular_chromatic_number(const Graph& graph, const SearchLimits& limits) {
  if (graph.size() == 0) throw std::invalid_argument("circular_chromatic_number: graph has no edges");
  require_searchable(graph, limits, "circular_chromatic_number");
  const ChromaticNumber chi = chromatic_number(graph, limits);
  CircularChromaticNumber out;
  out.chromatic = chi.value;
  out.nodes = chi.nodes;
  const auto chi_value = static_cast<std::int64_t>(chi.value);

  std::vector<Rational> candidates;
  for (const Rational& c :
       stern_brocot_candidates(chi_value - 1, chi_value, static_cast<std::int64_t>(graph.order()))) {
    if (c.numerator() >= 2 * c.denominator()) candidates.push_back(c);
  }
  // The last candidate is chi itself, witnessed by the optimal coloring.
  std::size_t feasible = candidates.size() - 1;
  out.value = candidates[feasible];
  out.witness.mapping.assign(chi.witness.color.begin(), chi.witness.color.end());

  const auto probe = [&](std::size_t index) {
    const Rational& c = candidates[index];
    const HomResult attempt = circular_hom(graph, static_cast<std::size_t>(c.numerator()),
                                           static_cast<std::size_t>(c.denominator()), limits);
    out.nodes += attempt.nodes;
    if (attempt.exhausted()) {
      throw BudgetExhausted("circular_chromatic_number (candidate " + c.to_string() + ")", out.nodes);
    }
    if (attempt.found()) {
      feasible = index;
      out.value = c;
      out.witness = *attempt.witness;
      return true;
    }
    ++out.candidates_refuted;
    return false;
  };

  // Feasibility is monotone in the candidate, so the largest one below chi
  // decides chi_c = chi on its own, and a bisection finds the rest.
  if (feasible == 0 || !probe(feasible - 1)) return out;
  std::size_t lo = 0;
  while (lo < feasible) {
    const std::size_t mid = lo + (feasible - lo) / 2;
    if (!probe(mid)) lo = mid + 1;
  }
  return out;
}

}  // namespace circlab
