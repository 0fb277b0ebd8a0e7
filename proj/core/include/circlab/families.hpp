#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "circlab/graph.hpp"

namespace circlab {

/// n-subsets of [m] as bitmasks (bit i-1 for element i), in colex order,
/// which is ascending numeric order of the masks. Requires m <= 62.
std::vector<std::uint64_t> colex_subsets(int m, int n);
/// "{1,3}" style label of a subset mask.
std::string subset_label(std::uint64_t mask);
/// Cyclically 2-stable: 2 <= |x-y| <= m-2 for distinct members.
bool is_two_stable(std::uint64_t mask, int m);

/// KG(m,n): n-subsets of [m], adjacent when disjoint. Requires m >= n >= 1.
Graph kneser(int m, int n);
/// KG(m,n,s): n-subsets adjacent when they share at most s elements.
/// Requires m >= n > s >= 0.
Graph generalized_kneser(int m, int n, int s);
/// SG(m,n): subgraph of KG(m,n) induced by the 2-stable subsets. Requires m >= 2n.
Graph schrijver(int m, int n);
/// K_{n/d}: i~j iff d <= |i-j| <= n-d. Requires n >= 2d >= 2.
Graph circular_complete(int n, int d);

enum class StandardKind { complete, cycle, path };
Graph standard(StandardKind kind, int n);
inline Graph complete_graph(int n) { return standard(StandardKind::complete, n); }
inline Graph cycle_graph(int n) { return standard(StandardKind::cycle, n); }
inline Graph path_graph(int n) { return standard(StandardKind::path, n); }

/// M^t(G) with the bookkeeping needed to walk back down the tower.
///
/// Vertex layout at every level: the base graph keeps ids 0..b-1, the twin of
/// base vertex i is b+i and the root is 2b, where b = base_order().
class MycielskiGraph {
 public:
  /// Level-0 wrapper: the graph itself with an empty roots set.
  explicit MycielskiGraph(Graph base);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t level() const noexcept { return level_; }
  /// Order of the graph one level down (M^{t-1}(G)); equals order() at level 0.
  std::size_t base_order() const noexcept { return base_order_; }
  /// The wrapper one level down; null at level 0.
  const std::shared_ptr<const MycielskiGraph>& base() const noexcept { return base_; }
  const Graph& original() const;

  Vertex root() const;
  bool is_base_vertex(Vertex v) const noexcept { return level_ == 0 || v < base_order_; }
  bool is_twin(Vertex v) const noexcept {
    return level_ > 0 && v >= base_order_ && v < 2 * base_order_;
  }
  /// Twin of a base vertex, or the base vertex of a twin.
  Vertex twin(Vertex v) const;
  /// Roots of M^t(G): the root, its twins, twins of twins and so on
  /// (the vertex set of M^{t-1}(point)); 2^t - 1 vertices.
  const VertexSet& roots() const noexcept { return roots_; }

  friend MycielskiGraph mycielskian(const MycielskiGraph& g);

 private:
  MycielskiGraph() = default;

  Graph graph_;
  std::size_t level_ = 0;
  std::size_t base_order_ = 0;
  VertexSet roots_;
  std::shared_ptr<const MycielskiGraph> base_;
};

MycielskiGraph mycielskian(const MycielskiGraph& g);
MycielskiGraph mycielskian(const Graph& g);
MycielskiGraph iterated_mycielskian(const Graph& g, std::size_t t);

/// Builds a graph from a FamilySpec (the inverse of provenance).
Graph build_family(const FamilySpec& spec);

/// Parses the display names FamilySpec::name() produces: "K4", "C5", "P4",
/// "KG(5,2)", "KG(6,3,1)", "SG(6,2)", "K(7,3)", "M(K2)", "M^2(K3)", "K2xK3".
/// Products associate to the left. Throws std::invalid_argument.
FamilySpec parse_family_name(std::string_view text);
inline Graph build_family(std::string_view name) { return build_family(parse_family_name(name)); }

}  // namespace circlab
