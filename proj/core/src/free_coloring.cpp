#include <algorithm>
#include <stdexcept>

#include "circlab/free_chromatic.hpp"

namespace circlab {

std::size_t FreeColoring::max_incidence(std::size_t order) const {
  std::vector<std::size_t> count(order, 0);
  std::size_t best = 0;
  for (const Edge& e : support_edges) {
    if (e.u < order) best = std::max(best, ++count[e.u]);
    if (e.v < order) best = std::max(best, ++count[e.v]);
  }
  return best;
}

std::vector<std::string> validate(const Graph& graph, const FreeColoring& coloring) {
  std::vector<std::string> problems;
  const std::size_t n = graph.order();
  VertexSet covered(n);
  for (std::size_t i = 0; i < coloring.classes.size(); ++i) {
    const VertexSet& cls = coloring.classes[i];
    auto tag = [i] { return "class " + std::to_string(i); };
    if (cls.universe() != n) {
      problems.push_back(tag() + " has the wrong universe");
      continue;
    }
    if (cls.empty()) problems.push_back(tag() + " is empty");
    if (cls.intersects(covered)) problems.push_back(tag() + " overlaps an earlier class");
    covered |= cls;
    if (!is_independent(graph, cls)) problems.push_back(tag() + " is not independent");
  }
  if (covered.size() != n) problems.push_back("classes do not cover every vertex");
  if (coloring.support_edges.size() > coloring.classes.size()) {
    problems.push_back("more support edges than classes");
  } else if (coloring.non_free_count() > coloring.a) {
    problems.push_back(std::to_string(coloring.non_free_count()) +
                       " undesignated classes exceed a=" + std::to_string(coloring.a));
  }
  for (std::size_t i = 0; i < coloring.support_edges.size() && i < coloring.classes.size(); ++i) {
    const Edge& e = coloring.support_edges[i];
    auto tag = [&] {
      return "support edge " + std::to_string(i) + " (" + std::to_string(e.u) + "," +
             std::to_string(e.v) + ")";
    };
    if (e.u >= n || e.v >= n || e.u >= e.v || !graph.adjacent(e.u, e.v)) {
      problems.push_back(tag() + " is not an edge");
    } else if (coloring.classes[i].universe() == n && !supports(graph, e, coloring.classes[i])) {
      problems.push_back(tag() + " does not support class " + std::to_string(i));
    }
  }
  if (coloring.b != kUnboundedCap && coloring.max_incidence(n) > coloring.b) {
    problems.push_back("a vertex meets " + std::to_string(coloring.max_incidence(n)) +
                       " support edges, cap b=" + std::to_string(coloring.b));
  }
  return problems;
}

bool supports(const Graph& graph, Edge e, const VertexSet& set) {
  return !graph.neighbors(e.u).intersects(set) && !graph.neighbors(e.v).intersects(set);
}

std::vector<Edge> supp(const Graph& graph, const VertexSet& set) {
  if (!is_independent(graph, set)) throw std::invalid_argument("supp: set is not independent");
  std::vector<Edge> out;
  for (const Edge& e : graph.edges()) {
    if (supports(graph, e, set)) out.push_back(e);
  }
  return out;
}

bool is_free_independent(const Graph& graph, const VertexSet& set) {
  if (!is_independent(graph, set)) {
    throw std::invalid_argument("is_free_independent: set is not independent");
  }
  for (const Edge& e : graph.edges()) {
    if (supports(graph, e, set)) return true;
  }
  return false;
}

namespace {

// Bron-Kerbosch over non-adjacency: r independent, p candidates compatible
// with r, x already-explored compatible vertices.
void extend_maximal(const Graph& graph, const VertexSet& r, VertexSet p, VertexSet x,
                    std::size_t limit, std::size_t& found) {
  if (found >= limit) return;
  if (p.empty() && x.empty()) {
    ++found;
    return;
  }
  for (Vertex v : p.members()) {
    if (found >= limit) return;
    VertexSet next_r = r;
    next_r.insert(v);
    extend_maximal(graph, next_r, p - closed_neighborhood(graph, v), x - graph.neighbors(v), limit,
                   found);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::size_t count_maximal_extensions(const Graph& graph, const VertexSet& set, std::size_t limit) {
  if (!is_independent(graph, set)) {
    throw std::invalid_argument("count_maximal_extensions: set is not independent");
  }
  VertexSet blocked = set;
  set.for_each([&](Vertex v) { blocked |= graph.neighbors(v); });
  std::size_t found = 0;
  extend_maximal(graph, set, graph.vertices() - blocked, VertexSet(graph.order()), limit, found);
  return found;
}

bool is_free_graph(const Graph& graph) {
  for (Vertex v = 0; v < graph.order(); ++v) {
    const VertexSet rest = graph.vertices() - closed_neighborhood(graph, v);
    bool has_edge = false;
    rest.for_each([&](Vertex u) {
      if (!has_edge && graph.neighbors(u).intersects(rest)) has_edge = true;
    });
    if (!has_edge) return false;
  }
  return true;
}

std::vector<Vertex> vertex_criterion_gaps(const Graph& graph) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.order(); ++v) {
    const VertexSet rest = graph.vertices() - closed_neighborhood(graph, v);
    bool has_edge = false;
    rest.for_each([&](Vertex u) {
      if (graph.neighbors(u).intersects(rest)) has_edge = true;
    });
    if (!rest.empty() && !has_edge) out.push_back(v);
  }
  return out;
}

std::size_t max_free_size(const Graph& graph, const SearchLimits& limits) {
  require_searchable(graph, limits, "max_free_size");
  std::size_t best = 0;
  for (const Edge& e : graph.edges()) {
    const VertexSet allowed = graph.vertices() - (graph.neighbors(e.u) | graph.neighbors(e.v));
    if (allowed.size() <= best) continue;
    best = std::max(best, maximum_independent_set(graph, allowed, limits).size());
  }
  return best;
}

}  // namespace circlab
