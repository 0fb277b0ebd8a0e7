#include "brute.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace circlab::brute {
namespace {

bool independent(const Graph& g, std::uint64_t set) {
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (!((set >> u) & 1U)) continue;
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (((set >> v) & 1U) && g.adjacent(u, v)) return false;
    }
  }
  return true;
}

std::uint64_t nbr_mask(const Graph& g, std::size_t v) {
  std::uint64_t m = 0;
  for (std::size_t w = 0; w < g.order(); ++w) {
    if (g.adjacent(v, w)) m |= std::uint64_t{1} << w;
  }
  return m;
}

void partitions(std::size_t v, std::size_t n, std::vector<std::uint64_t>& blocks,
                const std::function<void(const std::vector<std::uint64_t>&)>& visit) {
  if (v == n) {
    visit(blocks);
    return;
  }
  const std::uint64_t bit = std::uint64_t{1} << v;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i] |= bit;
    partitions(v + 1, n, blocks, visit);
    blocks[i] &= ~bit;
  }
  blocks.push_back(bit);
  partitions(v + 1, n, blocks, visit);
  blocks.pop_back();
}

// Tries every designated subset of size `need` and every support pick.
bool designations_fit(const Graph& g, const std::vector<std::vector<Edge>>& supports,
                      std::size_t need, std::size_t b) {
  const std::size_t t = supports.size();
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> inc(g.order(), 0);
  std::function<bool(std::size_t)> pick = [&](std::size_t i) -> bool {
    if (i == chosen.size()) return true;
    for (const Edge& e : supports[chosen[i]]) {
      if (inc[e.u] + 1 > b || inc[e.v] + 1 > b) continue;
      ++inc[e.u];
      ++inc[e.v];
      const bool ok = pick(i + 1);
      --inc[e.u];
      --inc[e.v];
      if (ok) return true;
    }
    return false;
  };
  std::function<bool(std::size_t)> choose = [&](std::size_t start) -> bool {
    if (chosen.size() == need) return pick(0);
    for (std::size_t c = start; c < t; ++c) {
      chosen.push_back(c);
      if (choose(c + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return choose(0);
}

}  // namespace

std::size_t alpha(const Graph& g) {
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size > best && independent(g, s)) best = size;
  }
  return best;
}

std::size_t omega(const Graph& g) {
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    bool clique = true;
    for (std::size_t u = 0; u < g.order() && clique; ++u) {
      for (std::size_t v = u + 1; v < g.order() && clique; ++v) {
        if (((s >> u) & 1U) && ((s >> v) & 1U) && !g.adjacent(u, v)) clique = false;
      }
    }
    if (clique) best = size;
  }
  return best;
}

bool hom_exists(const Graph& g, std::size_t target_order, const Adjacency& target_adj) {
  std::vector<std::size_t> image(g.order());
  std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
    if (v == g.order()) return true;
    for (std::size_t c = 0; c < target_order; ++c) {
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        if (g.adjacent(u, v) && !target_adj(image[u], c)) ok = false;
      }
      if (!ok) continue;
      image[v] = c;
      if (rec(v + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

bool hom_exists(const Graph& g, const Graph& h) {
  return hom_exists(g, h.order(), [&](std::size_t x, std::size_t y) { return h.adjacent(x, y); });
}

std::size_t chi(const Graph& g) {
  for (std::size_t k = 1;; ++k) {
    if (hom_exists(g, k, [](std::size_t x, std::size_t y) { return x != y; })) return k;
  }
}

std::pair<std::size_t, std::size_t> chi_c(const Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> fractions;
  for (std::size_t n = 2; n <= g.order(); ++n) {
    for (std::size_t d = 1; 2 * d <= n; ++d) {
      if (std::gcd(n, d) == 1) fractions.emplace_back(n, d);
    }
  }
  std::sort(fractions.begin(), fractions.end(),
            [](const auto& x, const auto& y) { return x.first * y.second < y.first * x.second; });
  for (const auto& [n, d] : fractions) {
    const auto adj = [n = n, d = d](std::size_t x, std::size_t y) {
      const std::size_t diff = x > y ? x - y : y - x;
      return diff >= d && diff <= n - d;
    };
    if (hom_exists(g, n, adj)) return {n, d};
  }
  return {0, 1};
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<std::size_t> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : a.edges()) {
      if (!b.adjacent(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::vector<Edge> support(const Graph& g, std::uint64_t set) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (((nbr_mask(g, e.u) | nbr_mask(g, e.v)) & set) == 0) out.push_back(e);
  }
  return out;
}

std::optional<std::size_t> phi_ab(const Graph& g, std::size_t a, std::size_t b) {
  std::optional<std::size_t> best;
  std::vector<std::uint64_t> blocks;
  partitions(0, g.order(), blocks, [&](const std::vector<std::uint64_t>& part) {
    const std::size_t t = part.size();
    if (best && t >= *best) return;
    for (auto block : part) {
      if (!independent(g, block)) return;
    }
    std::vector<std::vector<Edge>> supports;
    for (auto block : part) supports.push_back(support(g, block));
    const std::size_t need = t > a ? t - a : 0;
    if (designations_fit(g, supports, need, b)) best = t;
  });
  return best;
}

std::optional<std::size_t> phi(const Graph& g) { return phi_ab(g, 0, g.order() * g.order()); }

std::size_t alpha_bar(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> maximal;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if (!independent(g, s)) continue;
    bool is_max = true;
    for (std::size_t v = 0; v < n && is_max; ++v) {
      if (!((s >> v) & 1U) && independent(g, s | (std::uint64_t{1} << v))) is_max = false;
    }
    if (is_max) maximal.push_back(s);
  }
  std::size_t best = 0;
  for (std::uint64_t f = 1; f < (std::uint64_t{1} << n); ++f) {
    if (!independent(g, f)) continue;
    const auto count = std::count_if(maximal.begin(), maximal.end(),
                                     [&](std::uint64_t m) { return (m & f) == f; });
    if (count >= 2) best = std::max(best, static_cast<std::size_t>(std::popcount(f)));
  }
  return best;
}

std::vector<std::pair<std::int64_t, std::int64_t>> farey_between(std::int64_t lower,
                                                                 std::int64_t upper,
                                                                 std::int64_t max_num) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t p = 1; p <= max_num; ++p) {
    for (std::int64_t q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      if (p > lower * q && p <= upper * q) out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first * y.second < y.first * x.second; });
  return out;
}

Graph random_graph(std::size_t n, double p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back(Edge{u, v});
    }
  }
  return Graph(n, edges);
}

}  // namespace circlab::brute
