#include "circlab/hom_search.hpp"

#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hom_engine.hpp"

namespace circlab {

namespace {

using detail::Mask;

HomResult convert(SearchResult<detail::HomSolution> raw) {
  HomResult out;
  out.status = raw.status;
  out.nodes = raw.nodes;
  if (raw.witness) out.witness = HomWitness{std::move(raw.witness->mapping)};
  return out;
}

void require_circular_parameters(std::size_t n, std::size_t d, std::string_view op) {
  if (d < 1 || n < 2 * d) throw std::invalid_argument(std::string(op) + ": need n >= 2d >= 2");
  if (std::gcd(n, d) != 1) throw std::invalid_argument(std::string(op) + ": need gcd(n,d) = 1");
  if (n > kMaxSearchVertices) {
    throw std::length_error(std::string(op) + ": n exceeds " + std::to_string(kMaxSearchVertices));
  }
}

}  // namespace

bool is_homomorphism(const Graph& g, const Graph& h, std::span<const Vertex> mapping) {
  if (mapping.size() != g.order()) return false;
  for (Vertex image : mapping) {
    if (image >= h.order()) return false;
  }
  for (const Edge& e : g.edges()) {
    if (mapping[e.u] == mapping[e.v] || !h.adjacent(mapping[e.u], mapping[e.v])) return false;
  }
  return true;
}

bool is_onto_edge_homomorphism(const Graph& g, const Graph& h, std::span<const Vertex> mapping) {
  if (!is_homomorphism(g, h, mapping)) return false;
  std::set<Edge> covered;
  for (const Edge& e : g.edges()) covered.insert(Edge::make(mapping[e.u], mapping[e.v]));
  return covered.size() == h.size();
}

HomWitness compose(const HomWitness& first, const HomWitness& second) {
  HomWitness out;
  out.mapping.reserve(first.mapping.size());
  for (Vertex v : first.mapping) out.mapping.push_back(second.mapping.at(v));
  return out;
}

HomResult exists_hom(const Graph& g, const Graph& h, const SearchLimits& limits) {
  require_searchable(g, limits, "exists_hom");
  detail::HomProblem problem;
  problem.source = &g;
  problem.target_adjacency = detail::adjacency_masks(h);
  problem.target_order = h.order();
  problem.node_budget = limits.node_budget;
  return convert(detail::solve(problem));
}

HomResult exists_onto_edge_hom(const Graph& g, const Graph& h, const SearchLimits& limits) {
  require_searchable(g, limits, "exists_onto_edge_hom");
  if (g.size() < h.size()) {
    return HomResult{SearchStatus::none, std::nullopt, 0};
  }
  const auto g_edges = g.edges();
  detail::HomProblem problem;
  problem.source = &g;
  problem.target_adjacency = detail::adjacency_masks(h);
  problem.target_order = h.order();
  problem.node_budget = limits.node_budget;
  problem.accept = [&](std::span<const int> assignment) {
    std::set<Edge> covered;
    for (const Edge& e : g_edges) {
      covered.insert(Edge::make(static_cast<Vertex>(assignment[e.u]),
                                static_cast<Vertex>(assignment[e.v])));
    }
    return covered.size() == h.size();
  };
  // Prune once the edges of G not yet fully mapped cannot cover what is left.
  problem.propagate = [&](Vertex, Vertex, std::span<Mask>, std::span<const int> assignment) {
    std::set<Edge> covered;
    std::size_t open = 0;
    for (const Edge& e : g_edges) {
      if (assignment[e.u] >= 0 && assignment[e.v] >= 0) {
        covered.insert(Edge::make(static_cast<Vertex>(assignment[e.u]),
                                  static_cast<Vertex>(assignment[e.v])));
      } else {
        ++open;
      }
    }
    return covered.size() + open >= h.size();
  };
  return convert(detail::solve(problem));
}

HomResult circular_hom(const Graph& g, std::size_t n, std::size_t d, const SearchLimits& limits) {
  require_circular_parameters(n, d, "circular_hom");
  require_searchable(g, limits, "circular_hom");
  detail::HomProblem problem;
  problem.source = &g;
  problem.target_adjacency = detail::circular_masks(n, d);
  problem.target_order = n;
  problem.symmetry = detail::ValueSymmetry::rotational;
  problem.node_budget = limits.node_budget;
  return convert(detail::solve(problem));
}

bool in_root_window(std::size_t color, std::size_t n, std::size_t d) {
  color %= n;
  return color <= d - 1 || color >= n - d + 1;
}

bool satisfies_root_twin_condition(const MycielskiGraph& mg, std::span<const Vertex> coloring,
                                   std::size_t n, std::size_t d) {
  if (mg.level() == 0 || coloring.size() != mg.graph().order()) return false;
  if (coloring[mg.root()] != 0) return false;
  for (Vertex v = 0; v < mg.base_order(); ++v) {
    if (!in_root_window(coloring[v], n, d) && coloring[v] != coloring[mg.twin(v)]) return false;
  }
  return true;
}

HomResult constrained_mycielski_hom(const MycielskiGraph& mg, std::size_t n, std::size_t d,
                                    const SearchLimits& limits) {
  if (mg.level() == 0) throw std::invalid_argument("constrained_mycielski_hom: need level >= 1");
  if (d < 2) throw std::invalid_argument("constrained_mycielski_hom: need d >= 2");
  require_circular_parameters(n, d, "constrained_mycielski_hom");
  const Graph& g = mg.graph();
  require_searchable(g, limits, "constrained_mycielski_hom");

  Mask window = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (in_root_window(c, n, d)) window |= Mask{1} << c;
  }
  const std::size_t base = mg.base_order();

  detail::HomProblem problem;
  problem.source = &g;
  problem.target_adjacency = detail::circular_masks(n, d);
  problem.target_order = n;
  problem.domains.assign(g.order(), n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1);
  problem.domains[mg.root()] = Mask{1};
  problem.node_budget = limits.node_budget;
  // c(v) in window OR c(v) = c(v'), propagated from whichever side is set first.
  problem.propagate = [=](Vertex var, Vertex value, std::span<Mask> domains,
                          std::span<const int> assignment) {
    if (var < base) {
      const Vertex twin = var + base;
      if (assignment[twin] < 0 && ((window >> value) & 1U) == 0) {
        domains[twin] &= Mask{1} << value;
        return domains[twin] != 0;
      }
    } else if (var < 2 * base) {
      const Vertex original = var - base;
      if (assignment[original] < 0) {
        domains[original] &= window | (Mask{1} << value);
        return domains[original] != 0;
      }
    }
    return true;
  };
  HomResult result = convert(detail::solve(problem));
  if (result.witness && !satisfies_root_twin_condition(mg, result.witness->mapping, n, d)) {
    throw std::logic_error("constrained_mycielski_hom: witness violates the twin condition");
  }
  return result;
}

}  // namespace circlab
