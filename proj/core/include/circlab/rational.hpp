#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace circlab {

/// Exact non-negative fraction kept in lowest terms.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t numerator, std::int64_t denominator = 1)  // NOLINT
      : num_(numerator), den_(denominator) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t numerator() const noexcept { return num_; }
  constexpr std::int64_t denominator() const noexcept { return den_; }
  constexpr bool is_integer() const noexcept { return den_ == 1; }

  /// Least integer >= this value.
  constexpr std::int64_t ceil() const noexcept {
    return num_ >= 0 ? (num_ + den_ - 1) / den_ : -((-num_) / den_);
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend constexpr Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend constexpr Rational operator/(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Fractions p/q with lower < p/q <= upper and p <= max_numerator, in strictly
/// ascending order, by in-order traversal of the Stern-Brocot subtree between
/// the Farey neighbours lower and upper (integers k-1 and k). A subtree is cut
/// as soon as its root's numerator exceeds the cap, since every descendant has
/// a larger numerator.
std::vector<Rational> stern_brocot_candidates(std::int64_t lower, std::int64_t upper,
                                              std::int64_t max_numerator);

}  // namespace circlab
