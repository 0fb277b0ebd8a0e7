#include "circlab/families.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace circlab {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

// Counts n-subsets of [m] without overflow, saturating at the construction guard.
std::size_t bounded_binomial(int m, int n) {
  if (n < 0 || n > m) return 0;
  n = std::min(n, m - n);
  unsigned long long value = 1;
  for (int i = 1; i <= n; ++i) {
    value = value * static_cast<unsigned long long>(m - n + i) / static_cast<unsigned long long>(i);
    if (value > kMaxConstructedVertices) return kMaxConstructedVertices + 1;
  }
  return static_cast<std::size_t>(value);
}

std::vector<std::string> subset_labels(const std::vector<std::uint64_t>& subsets) {
  std::vector<std::string> labels;
  labels.reserve(subsets.size());
  for (auto mask : subsets) labels.push_back(subset_label(mask));
  return labels;
}

Graph subset_graph(const std::vector<std::uint64_t>& subsets, int max_shared, FamilySpec spec) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      if (std::popcount(subsets[i] & subsets[j]) <= max_shared) edges.push_back(Edge{i, j});
    }
  }
  return Graph(subsets.size(), edges, subset_labels(subsets), std::move(spec));
}

}  // namespace

std::vector<std::uint64_t> colex_subsets(int m, int n) {
  require(m >= 0 && m <= 62, "subsets: m must lie in [0, 62]");
  require(n >= 0 && n <= m, "subsets: need 0 <= n <= m");
  if (bounded_binomial(m, n) > kMaxConstructedVertices) {
    throw std::length_error("C(" + std::to_string(m) + "," + std::to_string(n) +
                            ") exceeds the construction guard");
  }
  std::vector<std::uint64_t> out;
  if (n == 0) return {0};
  const std::uint64_t limit = std::uint64_t{1} << m;
  // Gosper's hack enumerates equal-popcount masks in increasing order.
  for (std::uint64_t x = (std::uint64_t{1} << n) - 1; x < limit;) {
    out.push_back(x);
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

std::string subset_label(std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if ((mask >> i) & 1U) {
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

bool is_two_stable(std::uint64_t mask, int m) {
  if (m < 2) return std::popcount(mask) <= 1;
  if ((mask & (mask >> 1)) != 0) return false;
  const bool wraps = (mask & 1U) && ((mask >> (m - 1)) & 1U);
  return !(wraps && std::popcount(mask) > 1);
}

Graph kneser(int m, int n) {
  require(m >= n && n >= 1, "kneser: need m >= n >= 1");
  return subset_graph(colex_subsets(m, n), 0, FamilySpec{Family::kneser, {m, n}, {}});
}

Graph generalized_kneser(int m, int n, int s) {
  require(m >= n && n > s && s >= 0, "generalized_kneser: need m >= n > s >= 0");
  return subset_graph(colex_subsets(m, n), s, FamilySpec{Family::gen_kneser, {m, n, s}, {}});
}

Graph schrijver(int m, int n) {
  require(n >= 1 && m >= 2 * n, "schrijver: need m >= 2n and n >= 1");
  const auto all = colex_subsets(m, n);
  const Graph full = subset_graph(all, 0, FamilySpec{Family::kneser, {m, n}, {}});
  VertexSet keep(full.order());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (is_two_stable(all[i], m)) keep.insert(i);
  }
  return induced_subgraph(full, keep).with_provenance(FamilySpec{Family::schrijver, {m, n}, {}});
}

Graph circular_complete(int n, int d) {
  require(d >= 1 && n >= 2 * d, "circular_complete: need n >= 2d >= 2");
  require(static_cast<std::size_t>(n) <= kMaxConstructedVertices, "circular_complete: n too large");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int gap = j - i;
      if (gap >= d && gap <= n - d) {
        edges.push_back(Edge{static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  return Graph(static_cast<std::size_t>(n), edges, {}, FamilySpec{Family::circular, {n, d}, {}});
}

Graph standard(StandardKind kind, int n) {
  require(n >= 1, "standard graph: need n >= 1");
  require(static_cast<std::size_t>(n) <= kMaxConstructedVertices, "standard graph: n too large");
  const auto order = static_cast<std::size_t>(n);
  std::vector<Edge> edges;
  switch (kind) {
    case StandardKind::complete:
      for (Vertex u = 0; u < order; ++u) {
        for (Vertex v = u + 1; v < order; ++v) edges.push_back(Edge{u, v});
      }
      return Graph(order, edges, {}, FamilySpec{Family::complete, {n}, {}});
    case StandardKind::cycle:
      require(n >= 3, "cycle: need n >= 3");
      for (Vertex u = 0; u < order; ++u) edges.push_back(Edge::make(u, (u + 1) % order));
      return Graph(order, edges, {}, FamilySpec{Family::cycle, {n}, {}});
    case StandardKind::path:
      for (Vertex u = 0; u + 1 < order; ++u) edges.push_back(Edge{u, u + 1});
      return Graph(order, edges, {}, FamilySpec{Family::path, {n}, {}});
  }
  throw std::invalid_argument("standard: unknown kind");
}

// ----------------------------------------------------------------- Mycielski

MycielskiGraph::MycielskiGraph(Graph base)
    : graph_(std::move(base)), level_(0), base_order_(graph_.order()), roots_(graph_.order()) {}

const Graph& MycielskiGraph::original() const {
  const MycielskiGraph* g = this;
  while (g->base_) g = g->base_.get();
  return g->graph_;
}

Vertex MycielskiGraph::root() const {
  if (level_ == 0) throw std::logic_error("MycielskiGraph::root: level 0 has no root");
  return 2 * base_order_;
}

Vertex MycielskiGraph::twin(Vertex v) const {
  if (level_ == 0) throw std::logic_error("MycielskiGraph::twin: level 0 has no twins");
  if (v < base_order_) return v + base_order_;
  if (v < 2 * base_order_) return v - base_order_;
  throw std::invalid_argument("MycielskiGraph::twin: the root has no twin");
}

MycielskiGraph mycielskian(const MycielskiGraph& g) {
  const Graph& base = g.graph();
  const std::size_t n = base.order();
  if (2 * n + 1 > kMaxConstructedVertices) {
    throw std::length_error("mycielskian: result exceeds construction guard");
  }
  std::vector<Edge> edges = base.edges();
  for (const Edge& e : base.edges()) {
    edges.push_back(Edge{e.u, e.v + n});
    edges.push_back(Edge{e.v, e.u + n});
  }
  for (Vertex i = 0; i < n; ++i) edges.push_back(Edge{n + i, 2 * n});

  std::vector<std::string> labels;
  if (base.has_labels()) {
    // Primes and root numbers grow until unique; the base may itself carry
    // Mycielski labels.
    labels = base.labels();
    std::unordered_set<std::string> taken(labels.begin(), labels.end());
    for (Vertex i = 0; i < n; ++i) {
      std::string twin = base.labels()[i] + "'";
      while (taken.contains(twin)) twin += "'";
      taken.insert(twin);
      labels.push_back(std::move(twin));
    }
    std::size_t k = g.level() + 1;
    while (taken.contains("z" + std::to_string(k))) ++k;
    labels.push_back("z" + std::to_string(k));
  }
  std::optional<FamilySpec> spec;
  if (base.provenance()) {
    const FamilySpec& inner = *base.provenance();
    if (inner.family == Family::mycielski && !inner.params.empty()) {
      spec = FamilySpec{Family::mycielski, {inner.params.front() + 1}, inner.operands};
    } else {
      spec = FamilySpec{Family::mycielski, {1}, {inner}};
    }
  }

  MycielskiGraph out;
  out.graph_ = Graph(2 * n + 1, edges, std::move(labels), std::move(spec));
  out.level_ = g.level() + 1;
  out.base_order_ = n;
  out.roots_ = VertexSet(2 * n + 1);
  g.roots().for_each([&](Vertex r) {
    out.roots_.insert(r);
    out.roots_.insert(r + n);
  });
  out.roots_.insert(2 * n);
  out.base_ = std::make_shared<const MycielskiGraph>(g);
  return out;
}

MycielskiGraph mycielskian(const Graph& g) { return mycielskian(MycielskiGraph(g)); }

MycielskiGraph iterated_mycielskian(const Graph& g, std::size_t t) {
  MycielskiGraph current(g);
  for (std::size_t i = 0; i < t; ++i) current = mycielskian(current);
  return current;
}

Graph build_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arg = [&](std::size_t i) {
    if (i >= p.size()) throw std::invalid_argument("family spec: missing parameter");
    return static_cast<int>(p[i]);
  };
  auto arity = [&](std::size_t count) {
    if (p.size() != count) {
      throw std::invalid_argument(std::string(family_keyword(spec.family)) + " expects " +
                                  std::to_string(count) + " parameter(s)");
    }
  };
  switch (spec.family) {
    case Family::kneser: arity(2); return kneser(arg(0), arg(1));
    case Family::gen_kneser: arity(3); return generalized_kneser(arg(0), arg(1), arg(2));
    case Family::schrijver: arity(2); return schrijver(arg(0), arg(1));
    case Family::circular: arity(2); return circular_complete(arg(0), arg(1));
    case Family::complete: arity(1); return complete_graph(arg(0));
    case Family::cycle: arity(1); return cycle_graph(arg(0));
    case Family::path: arity(1); return path_graph(arg(0));
    case Family::mycielski: {
      arity(1);
      if (spec.operands.size() != 1) throw std::invalid_argument("mycielski expects one base graph");
      if (arg(0) < 0) throw std::invalid_argument("mycielski: t must be >= 0");
      return iterated_mycielskian(build_family(spec.operands.front()), static_cast<std::size_t>(arg(0)))
          .graph();
    }
    case Family::product:
      if (spec.operands.size() != 2) throw std::invalid_argument("product expects two factors");
      return categorical_product(build_family(spec.operands[0]), build_family(spec.operands[1]));
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace circlab

namespace circlab {

namespace {

class NameParser {
 public:
  explicit NameParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec spec = product();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("graph name '" + std::string(text_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  long long number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }
  std::vector<long long> numbers() {
    expect('(');
    std::vector<long long> out{number()};
    while (peek(',')) {
      ++pos_;
      out.push_back(number());
    }
    expect(')');
    return out;
  }

  FamilySpec product() {
    FamilySpec left = term();
    while (peek('x')) {
      ++pos_;
      FamilySpec right = term();
      left = FamilySpec{Family::product, {}, {std::move(left), std::move(right)}};
    }
    return left;
  }

  FamilySpec term() {
    if (accept("M^")) {
      const long long t = number();
      expect('(');
      FamilySpec base = product();
      expect(')');
      return FamilySpec{Family::mycielski, {t}, {std::move(base)}};
    }
    if (accept("M(")) {
      FamilySpec base = product();
      expect(')');
      return FamilySpec{Family::mycielski, {1}, {std::move(base)}};
    }
    if (accept("KG")) {
      auto params = numbers();
      if (params.size() == 2) return FamilySpec{Family::kneser, params, {}};
      if (params.size() == 3) return FamilySpec{Family::gen_kneser, params, {}};
      fail("KG takes 2 or 3 parameters");
    }
    if (accept("SG")) return FamilySpec{Family::schrijver, numbers(), {}};
    if (accept("K(")) {
      --pos_;
      return FamilySpec{Family::circular, numbers(), {}};
    }
    if (accept("K")) return FamilySpec{Family::complete, {number()}, {}};
    if (accept("C")) return FamilySpec{Family::cycle, {number()}, {}};
    if (accept("P")) return FamilySpec{Family::path, {number()}, {}};
    if (accept("(")) {
      FamilySpec inner = product();
      expect(')');
      return inner;
    }
    fail("unknown graph family");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_family_name(std::string_view text) { return NameParser(text).parse(); }

}  // namespace circlab
