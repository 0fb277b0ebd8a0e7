#include "circlab/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "circlab/families.hpp"

namespace circlab {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

BigCount pow2(std::int64_t e) { return BigCount(1) << static_cast<unsigned>(e); }

}  // namespace

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

std::int64_t kneser_chi(std::int64_t m, std::int64_t n) {
  require(n >= 1 && m >= 2 * n - 1, "kneser_chi: need n >= 1 and m >= 2n-1");
  return m - 2 * n + 2;
}

BigCount ekr_bound(std::int64_t m, std::int64_t n) {
  require(n >= 1 && m >= 2 * n, "ekr_bound: need m >= 2n >= 2");
  return binomial(m - 1, n - 1);
}

BigCount hilton_milner_free_bound(std::int64_t m, std::int64_t n) {
  require(n >= 1 && m > 2 * n, "hilton_milner_free_bound: need m > 2n >= 2");
  return binomial(m - 1, n - 1) - binomial(m - n - 1, n - 1);
}

BigRational hilton_phi_lower_bound(std::int64_t m, std::int64_t n, std::int64_t a) {
  require(a >= 0, "hilton_phi_lower_bound: need a >= 0");
  const BigCount denominator = hilton_milner_free_bound(m, n);
  require(denominator > 0, "hilton_phi_lower_bound: zero free bound");
  return BigRational(binomial(m, n) - a * binomial(m - 1, n - 1), denominator);
}

bool frankl_domain(std::int64_t m, std::int64_t n, std::int64_t s) noexcept {
  return s >= 0 && n > s && m >= (s + 2) * (n - s);
}

BigCount frankl_bound(std::int64_t m, std::int64_t n, std::int64_t s) {
  require(frankl_domain(m, n, s), "frankl_bound: need n > s >= 0 and m >= (s+2)(n-s)");
  return binomial(m - s - 1, n - s - 1);
}

BigCount genkneser_free_bound(std::int64_t m, std::int64_t n, std::int64_t s) {
  require(s >= 0 && n > s && m >= n, "genkneser_free_bound: need m >= n > s >= 0");
  return binomial(2 * n, s + 2) * binomial(m - s - 2, n - s - 2);
}

BigCount genkneser_chi_upper(std::int64_t m, std::int64_t s, std::int64_t t) {
  require(s >= 0 && m > s && t >= 0, "genkneser_chi_upper: need m > s >= 0 and t >= 0");
  return binomial(m, s + 1) + t;
}

BigCount schrijver_count(std::int64_t m, std::int64_t n) {
  require(n >= 1 && m >= 2 * n, "schrijver_count: need m >= 2n >= 2");
  const BigCount scaled = binomial(m - n - 1, n - 1) * m;
  if (scaled % n != 0) throw std::logic_error("schrijver_count: count is not integral");
  return scaled / n;
}

BigCount k_value(std::int64_t t, KVariant variant) {
  require(t >= 0, "k_value: need t >= 0");
  const BigCount first = pow2(t + 1) - 2;
  const BigCount second = pow2(t) + (variant == KVariant::proof ? 2 : 3);
  return std::min(first, second);
}

BigCount mycielski_threshold(std::int64_t n, std::int64_t t) {
  require(n >= 1 && t >= 0, "mycielski_threshold: need n >= 1 and t >= 0");
  const BigCount k = k_value(t, KVariant::statement);
  const std::int64_t correction = std::min<std::int64_t>(0, 2 * n - t - 3);
  return BigCount(2 * n * n * (n - 1)) + k * n - correction;
}

FinalInequality final_inequality_check(std::int64_t m, std::int64_t n, std::int64_t t,
                                       KVariant variant) {
  require(n >= 2 && m >= 2 * n && t >= 0, "final_inequality_check: need m >= 2n, n >= 2, t >= 0");
  FinalInequality out;
  out.k = k_value(t, variant);
  const BigCount numerator = binomial(m, n) - out.k * binomial(m - 1, n - 1);
  const BigCount denominator = 2 * BigCount(m - 2 * n + 2 + t);
  out.rhs = BigRational(numerator, denominator);
  const BigCount star = n * binomial(m - 2, n - 2);
  const BigCount free_bound = binomial(m - 1, n - 1) - binomial(m - n - 1, n - 1);
  out.main = star * denominator <= numerator;
  out.double_counting = free_bound <= star;
  out.needed = free_bound * denominator <= numerator;
  return out;
}

Coloring genkneser_greedy_coloring(int m, int n, int s) {
  if (!(m >= n && n > s && s >= 0)) {
    throw std::invalid_argument("genkneser_greedy_coloring: need m >= n > s >= 0");
  }
  const auto palette = colex_subsets(m, s + 1);
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < palette.size(); ++i) index.emplace(palette[i], i);
  const auto vertices = colex_subsets(m, n);
  Coloring out{std::vector<std::size_t>(vertices.size()), palette.size()};
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    std::uint64_t least = 0;
    std::uint64_t rest = vertices[v];
    for (int i = 0; i <= s; ++i) {
      const std::uint64_t low = rest & (~rest + 1);
      least |= low;
      rest ^= low;
    }
    out.color[v] = index.at(least);
  }
  if (!is_proper_coloring(generalized_kneser(m, n, s), out)) {
    throw std::logic_error("genkneser_greedy_coloring: coloring is not proper");
  }
  return out;
}

std::string to_string(const BigCount& value) { return value.str(); }

std::string to_string(const BigRational& value) {
  const BigCount num = boost::multiprecision::numerator(value);
  const BigCount den = boost::multiprecision::denominator(value);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace circlab
