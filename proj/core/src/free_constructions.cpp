#include "circlab/free_constructions.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace circlab {

ConstructionFailure::ConstructionFailure(const std::string& what, FreeColoring coloring,
                                         std::vector<std::string> problems)
    : std::runtime_error(what + (problems.empty() ? "" : ": " + problems.front())),
      coloring_(std::move(coloring)),
      problems_(std::move(problems)) {}

namespace {

std::optional<Edge> least_support(const Graph& graph, const VertexSet& cls) {
  for (const Edge& e : graph.edges()) {
    if (supports(graph, e, cls)) return e;
  }
  return std::nullopt;
}

// Designates every class with its least supporting edge and validates.
FreeColoring designate_all(const Graph& graph, std::vector<VertexSet> classes,
                           const std::string& what) {
  FreeColoring out;
  out.a = 0;
  out.b = kUnboundedCap;
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto e = least_support(graph, classes[i]);
    if (!e) {
      problems.push_back("class " + std::to_string(i) + " has no supporting edge");
      e = Edge{};
    }
    out.support_edges.push_back(*e);
  }
  out.classes = std::move(classes);
  if (problems.empty()) problems = validate(graph, out);
  if (!problems.empty()) throw ConstructionFailure(what, std::move(out), std::move(problems));
  return out;
}

// Optimal coloring of G[rest], appended as classes of the full graph.
void color_rest(const Graph& graph, const VertexSet& rest, const SearchLimits& limits,
                std::vector<VertexSet>& classes) {
  if (rest.empty()) return;
  const std::vector<Vertex> ids = rest.members();
  const Graph sub = induced_subgraph(graph, rest);
  const ChromaticNumber chi = chromatic_number(sub, limits);
  std::vector<VertexSet> blocks(chi.value, VertexSet(graph.order()));
  for (Vertex v = 0; v < sub.order(); ++v) blocks[chi.witness.color[v]].insert(ids[v]);
  for (auto& b : blocks) {
    if (!b.empty()) classes.push_back(std::move(b));
  }
}

void push_nonempty(std::vector<VertexSet>& classes, VertexSet set) {
  if (!set.empty()) classes.push_back(std::move(set));
}

void require_free_graph(const Graph& graph, const char* op) {
  if (!is_free_graph(graph)) throw std::invalid_argument(std::string(op) + ": graph is not free");
}

std::vector<std::size_t> bfs_parents(const Graph& graph, Vertex root, std::vector<std::size_t>& dist) {
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(graph.order(), unseen);
  dist.assign(graph.order(), unseen);
  std::deque<Vertex> queue{root};
  dist[root] = 0;
  parent[root] = root;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    graph.neighbors(x).for_each([&](Vertex y) {
      if (dist[y] == unseen) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push_back(y);
      }
    });
  }
  return parent;
}

std::vector<Vertex> path_to_root(const std::vector<std::size_t>& parent, Vertex v) {
  std::vector<Vertex> out{v};
  while (parent[v] != v) {
    v = parent[v];
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<Vertex> shortest_cycle(const Graph& graph) {
  std::vector<Vertex> best;
  std::vector<std::size_t> dist;
  for (Vertex r = 0; r < graph.order(); ++r) {
    const auto parent = bfs_parents(graph, r, dist);
    for (const Edge& e : graph.edges()) {
      if (dist[e.u] == std::numeric_limits<std::size_t>::max()) continue;
      if (parent[e.u] == e.v || parent[e.v] == e.u) continue;
      const std::size_t length = dist[e.u] + dist[e.v] + 1;
      if (!best.empty() && length >= best.size()) continue;
      auto left = path_to_root(parent, e.u);
      auto right = path_to_root(parent, e.v);
      // Only r may be shared, otherwise this closes a shorter cycle elsewhere.
      VertexSet seen(graph.order());
      bool disjoint = true;
      for (std::size_t i = 0; i + 1 < left.size(); ++i) seen.insert(left[i]);
      for (std::size_t i = 0; i + 1 < right.size(); ++i) {
        if (seen.contains(right[i])) disjoint = false;
      }
      if (!disjoint) continue;
      // r ... u then v ... (back towards r)
      std::vector<Vertex> cycle(left.rbegin(), left.rend());
      cycle.insert(cycle.end(), right.begin(), right.end() - 1);
      best = std::move(cycle);
    }
  }
  return best;
}

std::vector<Vertex> longest_forest_path(const Graph& graph) {
  if (!is_forest(graph)) throw std::invalid_argument("longest_forest_path: graph has a cycle");
  std::vector<Vertex> best;
  VertexSet done(graph.order());
  std::vector<std::size_t> dist;
  for (Vertex s = 0; s < graph.order(); ++s) {
    if (done.contains(s)) continue;
    bfs_parents(graph, s, dist);
    Vertex far = s;
    for (Vertex v = 0; v < graph.order(); ++v) {
      if (dist[v] != std::numeric_limits<std::size_t>::max()) {
        done.insert(v);
        if (dist[v] > dist[far]) far = v;
      }
    }
    const auto parent = bfs_parents(graph, far, dist);
    Vertex end = far;
    for (Vertex v = 0; v < graph.order(); ++v) {
      if (dist[v] != std::numeric_limits<std::size_t>::max() && dist[v] > dist[end]) end = v;
    }
    auto path = path_to_root(parent, end);
    if (path.size() > best.size()) best = std::move(path);
  }
  return best;
}

FreeColoring free_coloring_from_circular(const Graph& graph, const HomWitness& witness,
                                         std::size_t n, std::size_t d) {
  if (d < 2) throw std::invalid_argument("free_coloring_from_circular: need d >= 2");
  if (!is_homomorphism(graph, circular_complete(static_cast<int>(n), static_cast<int>(d)),
                       witness.mapping)) {
    throw std::invalid_argument("free_coloring_from_circular: witness is not a homomorphism");
  }
  const std::size_t width = d - 1;
  const std::size_t blocks = (n + width - 1) / width;
  std::vector<VertexSet> classes(blocks, VertexSet(graph.order()));
  for (Vertex v = 0; v < graph.order(); ++v) {
    const std::size_t c = witness.mapping[v] == 0 ? n : witness.mapping[v];
    classes[(c - 1) / width].insert(v);
  }
  FreeColoring out;
  out.a = 0;
  out.b = 2;
  std::vector<std::string> problems;
  for (std::size_t j = 0; j < blocks; ++j) {
    if (classes[j].empty()) continue;
    const std::size_t x = (j * width) % n;
    const std::size_t y = ((j + 1) * width + 1) % n;
    std::optional<Edge> chosen;
    for (const Edge& e : graph.edges()) {
      const std::size_t cu = witness.mapping[e.u];
      const std::size_t cv = witness.mapping[e.v];
      if ((cu == x && cv == y) || (cu == y && cv == x)) {
        chosen = e;
        break;
      }
    }
    if (!chosen) {
      problems.push_back("no edge with colors {" + std::to_string(x) + "," + std::to_string(y) +
                         "} for block " + std::to_string(j));
      continue;
    }
    out.classes.push_back(classes[j]);
    out.support_edges.push_back(*chosen);
  }
  if (problems.empty()) problems = validate(graph, out);
  if (!problems.empty()) {
    throw ConstructionFailure("free_coloring_from_circular", std::move(out), std::move(problems));
  }
  return out;
}

FreeColoring free_coloring_via_edge(const Graph& graph, const SearchLimits& limits) {
  require_free_graph(graph, "free_coloring_via_edge");
  const Edge e = min_span_edge(graph);
  const VertexSet span = graph.neighbors(e.u) | graph.neighbors(e.v);
  std::vector<VertexSet> classes;
  color_rest(graph, graph.vertices() - span, limits, classes);
  span.for_each([&](Vertex v) { classes.push_back(VertexSet(graph.order(), {v})); });
  return designate_all(graph, std::move(classes), "free_coloring_via_edge");
}

FreeColoring free_coloring_girth(const Graph& graph, GirthVariant variant,
                                 const SearchLimits& limits) {
  require_free_graph(graph, "free_coloring_girth");
  const NatOrInf g = girth(graph);
  if (g < NatOrInf(5)) throw std::invalid_argument("free_coloring_girth: girth below 5");
  std::vector<VertexSet> classes;
  VertexSet special(graph.order());
  auto take = [&](VertexSet set) {
    special |= set;
    push_nonempty(classes, std::move(set));
  };
  if (g.is_infinite()) {
    if (variant == GirthVariant::two) {
      throw std::invalid_argument("free_coloring_girth: two-class variant needs a cycle");
    }
    const auto path = longest_forest_path(graph);
    if (path.size() < 2) throw std::invalid_argument("free_coloring_girth: no edges");
    const Vertex hub = path[path.size() - 2];
    color_rest(graph, graph.vertices() - closed_neighborhood(graph, hub), limits, classes);
    take(VertexSet(graph.order(), {hub}));
    take(graph.neighbors(hub));
    return designate_all(graph, std::move(classes), "free_coloring_girth (tree)");
  }
  const auto cycle = shortest_cycle(graph);
  const Vertex u1 = cycle[0];
  const Vertex u2 = cycle[1];
  if (variant == GirthVariant::two) {
    if (g < NatOrInf(7)) throw std::invalid_argument("free_coloring_girth: two-class variant needs girth >= 7");
    take(graph.neighbors(u1));
    take(graph.neighbors(u2));
  } else {
    take(VertexSet(graph.order(), {u1}));
    take(VertexSet(graph.order(), {u2}));
    take(graph.neighbors(u1) - VertexSet(graph.order(), {u2}));
    take(graph.neighbors(u2) - VertexSet(graph.order(), {u1}));
  }
  color_rest(graph, graph.vertices() - special, limits, classes);
  return designate_all(graph, std::move(classes), "free_coloring_girth");
}

FreeColoring mycielski_pushdown(const MycielskiGraph& mg, const FreeColoring& coloring) {
  if (mg.level() == 0) throw std::invalid_argument("mycielski_pushdown: level 0 graph");
  if (auto problems = validate(mg.graph(), coloring); !problems.empty()) {
    throw std::invalid_argument("mycielski_pushdown: input coloring invalid: " + problems.front());
  }
  const std::size_t base = mg.base_order();
  const Vertex z = mg.root();
  const Graph& h = mg.base()->graph();
  VertexSet keep(mg.graph().order());
  for (Vertex v = 0; v < base; ++v) keep.insert(v);
  auto restrict = [&](const VertexSet& cls) {
    VertexSet out(base);
    (cls & keep).for_each([&](Vertex v) { out.insert(v); });
    return out;
  };

  FreeColoring out;
  const bool unbounded = coloring.b == kUnboundedCap;
  out.b = unbounded ? kUnboundedCap : 2 * coloring.b;
  out.a = unbounded || coloring.a > kUnboundedCap - coloring.b ? kUnboundedCap
                                                                : coloring.a + coloring.b;
  std::vector<VertexSet> demoted;
  for (std::size_t i = 0; i < coloring.classes.size(); ++i) {
    VertexSet u = restrict(coloring.classes[i]);
    if (u.empty()) continue;
    if (i >= coloring.designated_count()) {
      demoted.push_back(std::move(u));
      continue;
    }
    const Edge e = coloring.support_edges[i];
    if (e.touches(z)) {
      demoted.push_back(std::move(u));
      continue;
    }
    // Twins are independent, so at most one endpoint is a twin.
    const Vertex a = e.u < base ? e.u : mg.twin(e.u);
    const Vertex b = e.v < base ? e.v : mg.twin(e.v);
    out.classes.push_back(std::move(u));
    out.support_edges.push_back(Edge::make(a, b));
  }
  for (auto& u : demoted) out.classes.push_back(std::move(u));
  if (auto problems = validate(h, out); !problems.empty()) {
    throw ConstructionFailure("mycielski_pushdown", std::move(out), std::move(problems));
  }
  return out;
}

BlockPushdownResult block_pushdown_pipeline(const Graph& graph, std::size_t t,
                                            const SearchLimits& limits) {
  if (t == 0) throw std::invalid_argument("block_pushdown_pipeline: need t >= 1");
  const MycielskiGraph top = iterated_mycielskian(graph, t);
  BlockPushdownResult out;
  const CircularChromaticNumber cc = circular_chromatic_number(top.graph(), limits);
  out.circular = cc.value;
  out.chromatic = cc.chromatic;
  out.nodes = cc.nodes;
  if (cc.d() == 1) return out;
  out.applicable = true;

  const HomResult constrained = constrained_mycielski_hom(top, cc.n(), cc.d(), limits);
  out.nodes += constrained.nodes;
  if (constrained.exhausted()) {
    throw BudgetExhausted("block_pushdown_pipeline (constrained witness)", out.nodes);
  }
  if (!constrained.found()) {
    throw std::runtime_error("block_pushdown_pipeline: no root-constrained witness at " +
                             cc.value.to_string());
  }
  out.witness = *constrained.witness;

  FreeColoring current = free_coloring_from_circular(top.graph(), out.witness, cc.n(), cc.d());
  for (const Edge& e : current.support_edges) {
    if (top.roots().contains(e.u) || top.roots().contains(e.v)) ++out.root_incident;
  }
  out.stages.push_back({t, current});
  const MycielskiGraph* level = &top;
  while (level->level() > 0) {
    current = mycielski_pushdown(*level, current);
    level = level->base().get();
    out.stages.push_back({level->level(), current});
  }
  out.p = current.non_free_count();
  out.cap = current.b;
  return out;
}

}  // namespace circlab
