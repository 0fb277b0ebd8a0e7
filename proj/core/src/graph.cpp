#include "circlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace circlab {

namespace {

std::size_t words_for(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet set(universe);
  for (std::size_t w = 0; w < set.words_.size(); ++w) set.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0) set.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return set;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw std::length_error("VertexSet::from_mask: universe exceeds 64");
  VertexSet set(universe);
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  if (!set.words_.empty()) set.words_[0] = mask;
  return set;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw std::out_of_range("VertexSet::insert: vertex out of range");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) throw std::out_of_range("VertexSet::erase: vertex out of range");
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::size() const noexcept {
  std::size_t count = 0;
  for (auto w : words_) count += static_cast<std::size_t>(__builtin_popcountll(w));
  return count;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<Vertex> VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
  }
  return std::nullopt;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw std::invalid_argument("VertexSet: mismatched universes");
  }
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t theirs = w < other.words_.size() ? other.words_[w] : 0;
    if ((words_[w] & ~theirs) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::strong_ordering operator<=>(const VertexSet& lhs, const VertexSet& rhs) {
  const auto a = lhs.members();
  const auto b = rhs.members();
  if (auto cmp = std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
      cmp != 0) {
    return cmp;
  }
  return lhs.universe() <=> rhs.universe();
}

// --------------------------------------------------------------- FamilySpec

std::string_view family_keyword(Family family) {
  switch (family) {
    case Family::kneser: return "kneser";
    case Family::gen_kneser: return "gen-kneser";
    case Family::schrijver: return "schrijver";
    case Family::circular: return "circular";
    case Family::complete: return "complete";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::mycielski: return "mycielski";
    case Family::product: return "product";
  }
  return "unknown";
}

std::optional<Family> parse_family_keyword(std::string_view keyword) {
  for (Family f : {Family::kneser, Family::gen_kneser, Family::schrijver, Family::circular,
                   Family::complete, Family::cycle, Family::path, Family::mycielski,
                   Family::product}) {
    if (family_keyword(f) == keyword) return f;
  }
  if (keyword == "gen_kneser") return Family::gen_kneser;
  return std::nullopt;
}

namespace {

std::string joined(const std::vector<long long>& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(params[i]);
  }
  return out;
}

}  // namespace

std::string FamilySpec::name() const {
  switch (family) {
    case Family::kneser: return "KG(" + joined(params) + ")";
    case Family::gen_kneser: return "KG(" + joined(params) + ")";
    case Family::schrijver: return "SG(" + joined(params) + ")";
    case Family::circular: return "K(" + joined(params) + ")";
    case Family::complete: return "K" + joined(params);
    case Family::cycle: return "C" + joined(params);
    case Family::path: return "P" + joined(params);
    case Family::mycielski: {
      const std::string base = operands.empty() ? "?" : operands.front().name();
      const long long t = params.empty() ? 1 : params.front();
      if (t == 0) return base;
      return (t == 1 ? std::string("M(") : "M^" + std::to_string(t) + "(") + base + ")";
    }
    case Family::product: {
      if (operands.size() != 2) return "product";
      return operands[0].name() + "x" + operands[1].name();
    }
  }
  return "graph";
}

// -------------------------------------------------------------------- Graph

Graph::Graph(std::size_t order, std::span<const Edge> edges, std::vector<std::string> labels,
             std::optional<FamilySpec> provenance)
    : rows_(order, VertexSet(order)), labels_(std::move(labels)), provenance_(std::move(provenance)) {
  if (order > kMaxConstructedVertices) {
    throw std::length_error("graph exceeds construction guard of " +
                            std::to_string(kMaxConstructedVertices) + " vertices");
  }
  for (const Edge& e : edges) {
    if (e.u >= order || e.v >= order) throw std::out_of_range("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (!rows_[e.u].contains(e.v)) {
      rows_[e.u].insert(e.v);
      rows_[e.v].insert(e.u);
      ++edge_count_;
    }
  }
  if (!labels_.empty()) {
    if (labels_.size() != order) throw std::invalid_argument("label count differs from vertex count");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw std::invalid_argument("duplicate vertex labels");
  }
}

Graph::Graph(std::size_t order, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(order, [&] {
        std::vector<Edge> list;
        for (auto [a, b] : edges) list.push_back(Edge{a, b});
        return list;
      }()) {}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& row : rows_) best = std::max(best, row.size());
  return best;
}

std::size_t Graph::min_degree() const noexcept {
  if (rows_.empty()) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& row : rows_) best = std::min(best, row.size());
  return best;
}

std::uint64_t Graph::row_mask(Vertex v) const {
  if (order() > 64) throw std::length_error("row_mask requires at most 64 vertices");
  return rows_.at(v).mask();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    rows_[u].for_each([&](Vertex v) {
      if (u < v) out.push_back(Edge{u, v});
    });
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  require_vertex(*this, v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::with_provenance(std::optional<FamilySpec> spec) const {
  Graph copy = *this;
  copy.provenance_ = std::move(spec);
  return copy;
}

Graph Graph::without_labels() const {
  Graph copy = *this;
  copy.labels_.clear();
  return copy;
}

// ---------------------------------------------------------------- operations

void require_searchable(const Graph& graph, const SearchLimits& limits, std::string_view op) {
  const std::size_t cap = std::min(limits.max_vertices, kMaxSearchVertices);
  if (graph.order() > cap) {
    throw std::length_error(std::string(op) + ": graph has " + std::to_string(graph.order()) +
                            " vertices, search guard is " + std::to_string(cap));
  }
}

void require_vertex(const Graph& graph, Vertex v) {
  if (v >= graph.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(graph.order()));
  }
}

VertexSet neighborhood(const Graph& graph, Vertex v) {
  require_vertex(graph, v);
  return graph.neighbors(v);
}

VertexSet closed_neighborhood(const Graph& graph, Vertex v) {
  VertexSet set = neighborhood(graph, v);
  set.insert(v);
  return set;
}

NatOrInf girth(const Graph& graph) {
  const std::size_t n = graph.order();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[root] = 0;
    parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      graph.neighbors(u).for_each([&](Vertex w) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  return best == std::numeric_limits<std::size_t>::max() ? NatOrInf::infinity() : NatOrInf(best);
}

namespace {

std::size_t component_count(const Graph& graph) {
  const std::size_t n = graph.order();
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : graph.edges()) {
    const auto a = find(e.u);
    const auto b = find(e.v);
    if (a != b) {
      root[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace

bool is_forest(const Graph& graph) {
  return graph.size() + component_count(graph) == graph.order();
}

bool is_connected(const Graph& graph) { return graph.order() <= 1 || component_count(graph) == 1; }

std::size_t edge_span(const Graph& graph, Edge e) {
  require_vertex(graph, e.u);
  require_vertex(graph, e.v);
  if (!graph.adjacent(e.u, e.v)) {
    throw std::invalid_argument("edge_span: (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                ") is not an edge");
  }
  return (graph.neighbors(e.u) | graph.neighbors(e.v)).size();
}

Edge min_span_edge(const Graph& graph) {
  const auto edges = graph.edges();
  if (edges.empty()) throw std::invalid_argument("min_edge_span: graph has no edges");
  Edge best = edges.front();
  std::size_t best_span = edge_span(graph, best);
  for (const Edge& e : edges) {
    const std::size_t span = edge_span(graph, e);
    if (span < best_span) {
      best = e;
      best_span = span;
    }
  }
  return best;
}

std::size_t min_edge_span(const Graph& graph) { return edge_span(graph, min_span_edge(graph)); }

bool is_independent(const Graph& graph, const VertexSet& set) {
  bool independent = true;
  set.for_each([&](Vertex v) {
    require_vertex(graph, v);
    if (graph.neighbors(v).intersects(set)) independent = false;
  });
  return independent;
}

Graph complement(const Graph& graph) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < graph.order(); ++u) {
    for (Vertex v = u + 1; v < graph.order(); ++v) {
      if (!graph.adjacent(u, v)) edges.push_back(Edge{u, v});
    }
  }
  return Graph(graph.order(), edges, graph.labels());
}

Graph induced_subgraph(const Graph& graph, const VertexSet& keep) {
  std::vector<std::size_t> index(graph.order(), std::numeric_limits<std::size_t>::max());
  std::vector<std::string> labels;
  std::size_t next = 0;
  keep.for_each([&](Vertex v) {
    require_vertex(graph, v);
    index[v] = next++;
    if (graph.has_labels()) labels.push_back(graph.labels()[v]);
  });
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    if (keep.contains(e.u) && keep.contains(e.v)) edges.push_back(Edge{index[e.u], index[e.v]});
  }
  return Graph(next, edges, std::move(labels));
}

Graph delete_edge(const Graph& graph, Edge e) {
  std::vector<Edge> edges = graph.edges();
  std::erase(edges, e);
  return Graph(graph.order(), edges, graph.labels());
}

Graph categorical_product(const Graph& g, const Graph& h) {
  const std::size_t order = g.order() * h.order();
  if (g.order() != 0 && order / g.order() != h.order()) throw std::length_error("product overflow");
  if (order > kMaxConstructedVertices) {
    throw std::length_error("categorical_product: result exceeds construction guard");
  }
  const auto id = [&](Vertex a, Vertex b) { return a * h.order() + b; };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    for (const Edge& f : h.edges()) {
      edges.push_back(Edge::make(id(e.u, f.u), id(e.v, f.v)));
      edges.push_back(Edge::make(id(e.u, f.v), id(e.v, f.u)));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(order);
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = 0; b < h.order(); ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  }
  std::optional<FamilySpec> spec;
  if (g.provenance() && h.provenance()) {
    spec = FamilySpec{Family::product, {}, {*g.provenance(), *h.provenance()}};
  }
  return Graph(order, edges, std::move(labels), std::move(spec));
}

}  // namespace circlab
