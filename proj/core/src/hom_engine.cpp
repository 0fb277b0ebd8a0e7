#include "hom_engine.hpp"

#include <bit>
#include <stdexcept>

namespace circlab::detail {

namespace {

inline Mask low_bits(std::size_t count) {
  return count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1;
}

class Solver {
 public:
  explicit Solver(const HomProblem& problem)
      : problem_(problem),
        source_(*problem.source),
        n_(source_.order()),
        counter_(problem.node_budget),
        assignment_(n_, -1),
        domains_((n_ + 1) * n_, 0) {
    neighbors_.resize(n_);
    degree_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      neighbors_[v] = source_.neighbors(v).members();
      degree_[v] = neighbors_[v].size();
    }
    const Mask all = low_bits(problem.target_order);
    for (Vertex v = 0; v < n_; ++v) {
      domains_[v] = problem.domains.empty() ? all : (problem.domains[v] & all);
    }
  }

  SearchResult<HomSolution> run() {
    SearchResult<HomSolution> result;
    const Outcome outcome = search(0, -1);
    result.nodes = counter_.used();
    if (outcome == Outcome::found) {
      result.status = SearchStatus::found;
      HomSolution solution;
      solution.mapping.reserve(n_);
      for (int value : assignment_) solution.mapping.push_back(static_cast<Vertex>(value));
      result.witness = std::move(solution);
    } else {
      result.status = outcome == Outcome::exhausted ? SearchStatus::exhausted : SearchStatus::none;
    }
    return result;
  }

 private:
  enum class Outcome { found, none, exhausted };

  std::span<Mask> level(std::size_t depth) { return {domains_.data() + depth * n_, n_}; }

  // Smallest domain first, then larger source degree, then lower index.
  std::optional<Vertex> select(std::span<const Mask> domains) const {
    std::optional<Vertex> best;
    int best_size = 65;
    for (Vertex v = 0; v < n_; ++v) {
      if (assignment_[v] >= 0) continue;
      const int size = std::popcount(domains[v]);
      if (!best || size < best_size || (size == best_size && degree_[v] > degree_[*best])) {
        best = v;
        best_size = size;
      }
    }
    return best;
  }

  Outcome search(std::size_t depth, int max_used) {
    auto current = level(depth);
    const auto var = select(current);
    if (!var) {
      if (!problem_.accept || problem_.accept(assignment_)) return Outcome::found;
      return Outcome::none;
    }
    Mask values = current[*var];
    switch (problem_.symmetry) {
      case ValueSymmetry::interchangeable:
        values &= low_bits(static_cast<std::size_t>(max_used + 2));
        break;
      case ValueSymmetry::rotational:
        if (depth == 0) values &= Mask{1};
        if (depth == 1) values &= low_bits(problem_.target_order / 2 + 1);
        break;
      case ValueSymmetry::none:
        break;
    }
    for (; values != 0; values &= values - 1) {
      if (!counter_.charge()) return Outcome::exhausted;
      const auto value = static_cast<Vertex>(std::countr_zero(values));
      auto next = level(depth + 1);
      std::copy(current.begin(), current.end(), next.begin());
      next[*var] = Mask{1} << value;
      assignment_[*var] = static_cast<int>(value);

      bool consistent = true;
      const Mask allowed = problem_.target_adjacency[value];
      for (Vertex w : neighbors_[*var]) {
        if (assignment_[w] >= 0) continue;
        next[w] &= allowed;
        if (next[w] == 0) {
          consistent = false;
          break;
        }
      }
      if (consistent && problem_.propagate) {
        consistent = problem_.propagate(*var, value, next, assignment_);
      }
      if (consistent) consistent = arc_consistent(*var, next);
      if (consistent) {
        const int used = std::max(max_used, static_cast<int>(value));
        const Outcome outcome = search(depth + 1, used);
        if (outcome != Outcome::none) return outcome;
      }
      assignment_[*var] = -1;
    }
    return Outcome::none;
  }

  // AC-3 over unassigned vertices, seeded with the neighbours of `var`.
  bool arc_consistent(Vertex var, std::span<Mask> domains) {
    queue_.clear();
    std::fill(queued_.begin(), queued_.end(), false);
    for (Vertex w : neighbors_[var]) {
      if (assignment_[w] < 0) {
        queue_.push_back(w);
        queued_[w] = true;
      }
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex x = queue_[head];
      queued_[x] = false;
      const Mask dx = domains[x];
      for (Vertex w : neighbors_[x]) {
        if (assignment_[w] >= 0) continue;
        Mask kept = 0;
        for (Mask vals = domains[w]; vals != 0; vals &= vals - 1) {
          const auto a = static_cast<std::size_t>(std::countr_zero(vals));
          if (problem_.target_adjacency[a] & dx) kept |= vals & (~vals + 1);
        }
        if (kept == domains[w]) continue;
        if (kept == 0) return false;
        domains[w] = kept;
        if (!queued_[w]) {
          queue_.push_back(w);
          queued_[w] = true;
        }
      }
    }
    return true;
  }

  const HomProblem& problem_;
  const Graph& source_;
  std::size_t n_;
  NodeCounter counter_;
  std::vector<int> assignment_;
  std::vector<Mask> domains_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::size_t> degree_;
  std::vector<Vertex> queue_;
  std::vector<bool> queued_ = std::vector<bool>(n_, false);
};

}  // namespace

SearchResult<HomSolution> solve(const HomProblem& problem) {
  if (problem.source == nullptr) throw std::invalid_argument("hom search: no source graph");
  if (problem.target_order > 64) {
    throw std::length_error("hom search: target has more than 64 vertices");
  }
  if (problem.target_adjacency.size() != problem.target_order) {
    throw std::invalid_argument("hom search: target adjacency size mismatch");
  }
  if (!problem.domains.empty() && problem.domains.size() != problem.source->order()) {
    throw std::invalid_argument("hom search: domain count differs from source order");
  }
  if (problem.source->order() == 0) {
    SearchResult<HomSolution> empty;
    empty.status = SearchStatus::found;
    empty.witness = HomSolution{};
    return empty;
  }
  Solver solver(problem);
  return solver.run();
}

std::vector<Mask> adjacency_masks(const Graph& target) {
  if (target.order() > 64) throw std::length_error("hom search: target has more than 64 vertices");
  std::vector<Mask> masks(target.order());
  for (Vertex v = 0; v < target.order(); ++v) masks[v] = target.row_mask(v);
  return masks;
}

std::vector<Mask> circular_masks(std::size_t n, std::size_t d) {
  if (n > 64) throw std::length_error("circular target has more than 64 vertices");
  std::vector<Mask> masks(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      if (gap >= d && gap <= n - d) masks[i] |= Mask{1} << j;
    }
  }
  return masks;
}

}  // namespace circlab::detail
