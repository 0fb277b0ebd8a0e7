#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circlab/extended.hpp"
#include "circlab/limits.hpp"

namespace circlab {

using Vertex = std::size_t;

/// Dynamic bitset over the vertex range [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);
  /// Builds a set from the low `universe` bits of `mask` (universe <= 64).
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  std::optional<Vertex> first() const noexcept;
  std::vector<Vertex> members() const;
  /// Low word of the set; only meaningful when universe <= 64.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  bool intersects(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
  friend VertexSet operator|(VertexSet lhs, const VertexSet& rhs) { return lhs |= rhs; }
  friend VertexSet operator-(VertexSet lhs, const VertexSet& rhs) { return lhs -= rhs; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        fn(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
      }
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Orders by sorted member list (lexicographic), so sorting is reproducible.
  friend std::strong_ordering operator<=>(const VertexSet& lhs, const VertexSet& rhs);

 private:
  void check_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }
  bool touches(Vertex w) const noexcept { return u == w || v == w; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Generator provenance carried on graphs built by the family constructors.
enum class Family { kneser, gen_kneser, schrijver, circular, complete, cycle, path, mycielski, product };

struct FamilySpec {
  Family family = Family::complete;
  std::vector<long long> params;
  std::vector<FamilySpec> operands;  // base graph (mycielski) or factors (product)

  /// Compact display name such as "KG(5,2)", "M^2(K2)" or "K2xK3".
  std::string name() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view family_keyword(Family family);
std::optional<Family> parse_family_keyword(std::string_view keyword);

/// Immutable simple graph with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  /// Validates: endpoints in range, no loops, labels unique and one per vertex.
  /// Repeated edges collapse.
  Graph(std::size_t order, std::span<const Edge> edges, std::vector<std::string> labels = {},
        std::optional<FamilySpec> provenance = std::nullopt);
  Graph(std::size_t order, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
  std::size_t degree(Vertex v) const { return rows_.at(v).size(); }
  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;
  /// Adjacency row as a machine word; requires order() <= 64.
  std::uint64_t row_mask(Vertex v) const;

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }
  /// Edges in ascending (u, v) order.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Display label of v, or its decimal index when the graph is unlabeled.
  std::string label(Vertex v) const;

  const std::optional<FamilySpec>& provenance() const noexcept { return provenance_; }
  Graph with_provenance(std::optional<FamilySpec> spec) const;
  Graph without_labels() const;

  /// Same vertex count and adjacency (labels and provenance ignored).
  bool same_adjacency(const Graph& other) const noexcept { return rows_ == other.rows_; }

 private:
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
  std::optional<FamilySpec> provenance_;
};

/// Throws std::length_error when the graph exceeds the search guard.
void require_searchable(const Graph& graph, const SearchLimits& limits, std::string_view op);
void require_vertex(const Graph& graph, Vertex v);

VertexSet neighborhood(const Graph& graph, Vertex v);
VertexSet closed_neighborhood(const Graph& graph, Vertex v);

/// Length of a shortest cycle; infinity for forests.
NatOrInf girth(const Graph& graph);
bool is_forest(const Graph& graph);
bool is_connected(const Graph& graph);

/// d(e) = |N(u) ∪ N(v)|; u and v are counted since each is in the other's
/// neighborhood.
std::size_t edge_span(const Graph& graph, Edge e);
/// Minimum edge span; throws std::invalid_argument on an edgeless graph.
std::size_t min_edge_span(const Graph& graph);
/// Least edge (in edge order) achieving min_edge_span.
Edge min_span_edge(const Graph& graph);

bool is_independent(const Graph& graph, const VertexSet& set);

Graph complement(const Graph& graph);
/// Induced subgraph on `keep`; vertices renumbered in ascending order and
/// labels carried over.
Graph induced_subgraph(const Graph& graph, const VertexSet& keep);
Graph delete_edge(const Graph& graph, Edge e);

/// Tensor (categorical) product: (u,x)~(v,y) iff u~v in G and x~y in H.
/// Vertex (u,x) gets id u*|V(H)|+x.
Graph categorical_product(const Graph& g, const Graph& h);

/// Exact independence number by branch and bound (greedy clique-cover bound,
/// branching on the vertex of maximum residual degree). Throws
/// BudgetExhausted.
std::size_t independence_number(const Graph& graph, const SearchLimits& limits = {});
/// A maximum independent set restricted to `within`.
VertexSet maximum_independent_set(const Graph& graph, const VertexSet& within,
                                  const SearchLimits& limits = {});
VertexSet maximum_independent_set(const Graph& graph, const SearchLimits& limits = {});
std::size_t clique_number(const Graph& graph, const SearchLimits& limits = {});

}  // namespace circlab
