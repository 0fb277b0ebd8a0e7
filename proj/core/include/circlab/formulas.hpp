#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "circlab/chromatic.hpp"

namespace circlab {

using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact C(n,k); 0 when k < 0, n < 0 or k > n.
BigCount binomial(std::int64_t n, std::int64_t k);

/// m - 2n + 2. Requires n >= 1 and m >= 2n - 1.
std::int64_t kneser_chi(std::int64_t m, std::int64_t n);

/// C(m-1, n-1). Requires m >= 2n >= 2.
BigCount ekr_bound(std::int64_t m, std::int64_t n);
/// C(m-1,n-1) - C(m-n-1,n-1). Requires m > 2n >= 2.
BigCount hilton_milner_free_bound(std::int64_t m, std::int64_t n);
/// Lower bound (C(m,n) - a C(m-1,n-1)) / (C(m-1,n-1) - C(m-n-1,n-1)) on
/// phi^a_b(KG(m,n)). Requires m > 2n >= 2.
BigRational hilton_phi_lower_bound(std::int64_t m, std::int64_t n, std::int64_t a);

/// C(m-s-1, n-s-1). Throws std::domain_error unless n > s >= 0 and
/// m >= (s+2)(n-s).
BigCount frankl_bound(std::int64_t m, std::int64_t n, std::int64_t s);
bool frankl_domain(std::int64_t m, std::int64_t n, std::int64_t s) noexcept;

/// C(2n, s+2) C(m-s-2, n-s-2). Requires m >= n > s >= 0.
BigCount genkneser_free_bound(std::int64_t m, std::int64_t n, std::int64_t s);
/// C(m, s+1) + t. Requires m > s >= 0, t >= 0.
BigCount genkneser_chi_upper(std::int64_t m, std::int64_t s, std::int64_t t);

/// C(m-n-1, n-1) m / n. Requires m >= 2n >= 2; throws std::logic_error if the
/// division is not exact.
BigCount schrijver_count(std::int64_t m, std::int64_t n);

/// 2n^2(n-1) + min{2^{t+1}-2, 2^t+3} n - min{0, 2n-t-3}. Requires n >= 1, t >= 0.
BigCount mycielski_threshold(std::int64_t n, std::int64_t t);

/// Which k the final inequality uses.
enum class KVariant {
  proof,      // min{2^{t+1}-2, 2^t+2}
  statement,  // min{2^{t+1}-2, 2^t+3}
};
BigCount k_value(std::int64_t t, KVariant variant);

struct FinalInequality {
  /// n C(m-2,n-2) <= (C(m,n) - k C(m-1,n-1)) / (2(m-2n+2+t))
  bool main = false;
  /// C(m-1,n-1) - C(m-n-1,n-1) <= n C(m-2,n-2)
  bool double_counting = false;
  /// C(m-1,n-1) - C(m-n-1,n-1) <= (C(m,n) - k C(m-1,n-1)) / (2(m-2n+2+t)),
  /// the inequality the two above combine into.
  bool needed = false;
  BigCount k;
  BigRational rhs;
};

/// Exact evaluation with the division cleared. Requires m >= 2n, n >= 2, t >= 0.
FinalInequality final_inequality_check(std::int64_t m, std::int64_t n, std::int64_t t,
                                       KVariant variant);

/// Colors each n-subset by its lexicographically least (s+1)-subset. Colors
/// are indices into colex_subsets(m, s+1), so at most C(m,s+1) are used.
/// Vertex order matches generalized_kneser(m, n, s). Validated proper.
Coloring genkneser_greedy_coloring(int m, int n, int s);

/// Decimal rendering of exact values.
std::string to_string(const BigCount& value);
std::string to_string(const BigRational& value);

}  // namespace circlab
