#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

namespace circlab {

/// Three-way outcome of an existence search. `none` is a proof of
/// non-existence; `exhausted` means the node budget ran out first.
enum class SearchStatus { found, none, exhausted };

inline std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "FOUND";
    case SearchStatus::none: return "NONE";
    case SearchStatus::exhausted: return "EXHAUSTED";
  }
  return "?";
}

template <class Witness>
struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;

  bool found() const noexcept { return status == SearchStatus::found; }
  bool refuted() const noexcept { return status == SearchStatus::none; }
  bool exhausted() const noexcept { return status == SearchStatus::exhausted; }
};

}  // namespace circlab
