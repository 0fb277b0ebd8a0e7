#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace circlab {

/// A natural number or infinity. Infinity compares greater than every finite
/// value and equal to itself.
class NatOrInf {
 public:
  constexpr NatOrInf(std::size_t value) noexcept : value_(value) {}  // NOLINT
  static constexpr NatOrInf infinity() noexcept { return NatOrInf(); }

  constexpr bool is_finite() const noexcept { return value_.has_value(); }
  constexpr bool is_infinite() const noexcept { return !value_.has_value(); }

  std::size_t value() const {
    if (!value_) throw std::logic_error("NatOrInf::value on infinity");
    return *value_;
  }

  std::string to_string() const {
    return value_ ? std::to_string(*value_) : std::string("inf");
  }

  friend constexpr bool operator==(const NatOrInf&, const NatOrInf&) = default;
  friend constexpr std::strong_ordering operator<=>(const NatOrInf& lhs,
                                                    const NatOrInf& rhs) noexcept {
    if (lhs.is_infinite() || rhs.is_infinite()) {
      return static_cast<int>(lhs.is_infinite()) <=> static_cast<int>(rhs.is_infinite());
    }
    return *lhs.value_ <=> *rhs.value_;
  }

 private:
  constexpr NatOrInf() noexcept = default;
  std::optional<std::size_t> value_;
};

}  // namespace circlab
