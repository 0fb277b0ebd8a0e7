#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace circlab {

/// Hard cap on vertices for any graph constructor.
inline constexpr std::size_t kMaxConstructedVertices = 5000;

/// Search kernels keep one machine word per adjacency row.
inline constexpr std::size_t kMaxSearchVertices = 64;

/// Per-call limits for exponential searches.
///
/// `max_vertices` guards the input size (clamped to kMaxSearchVertices);
/// `node_budget` bounds the number of assignments/branch nodes one call may
/// explore before it gives up with an exhausted status.
struct SearchLimits {
  std::size_t max_vertices = kMaxSearchVertices;
  std::uint64_t node_budget = 50'000'000;
};

/// Thrown by exact invariants when the node budget runs out. Never converted
/// into an approximate value.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, std::uint64_t nodes)
      : std::runtime_error(what + ": node budget exhausted after " +
                           std::to_string(nodes) + " nodes"),
        nodes_(nodes) {}

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) noexcept : budget_(budget) {}

  /// Records one node; false once the budget is exceeded.
  bool charge() noexcept { return ++used_ <= budget_; }
  bool exhausted() const noexcept { return used_ > budget_; }
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
};

}  // namespace circlab
