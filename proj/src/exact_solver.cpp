#include "covering/exact_solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "covering/graph.hpp"

namespace covering {
namespace {

using Block = std::uint64_t;

class Search {
 public:
  Search(const HammingSpace& space, unsigned radius, SolveBudget budget, Index guard)
      : space_(space),
        total_(space.checked_size(guard)),
        blocks_((total_ + 63) / 64),
        volume_(ball_volume(space, radius).convert_to<std::uint64_t>()),
        budget_(budget),
        start_(std::chrono::steady_clock::now()) {
    const auto weights = radix_weights(space);
    balls_.assign(total_ * blocks_, 0);
    members_.resize(total_);
    max_member_.resize(total_);
    for (Index c = 0; c < total_; ++c) {
      Block* row = &balls_[c * blocks_];
      for_each_in_ball_index(space, weights, c, radius, [&](Index i) {
        row[i >> 6] |= Block{1} << (i & 63);
        members_[c].push_back(i);
      });
      std::sort(members_[c].begin(), members_[c].end());
      max_member_[c] = members_[c].back();
    }
  }

  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

  /// Smallest covering size below `incumbent` reachable with 0^n fixed, or
  /// `incumbent` if none. `best` receives the improving code.
  std::uint64_t minimize(std::uint64_t incumbent, std::vector<Index>& best) {
    best_size_ = incumbent;
    best_ = &best;
    std::vector<Block> covered(blocks_, 0);
    std::vector<Index> chosen{0};
    apply(covered, 0);
    branch(covered, chosen);
    return best_size_;
  }

  /// Lexicographically smallest covering code of exactly `size` words that
  /// contains 0^n; empty if the budget ran out first.
  std::vector<Index> smallest_of_size(std::uint64_t size) {
    target_ = size;
    std::vector<Block> covered(blocks_, 0);
    std::vector<Index> chosen{0};
    apply(covered, 0);
    found_.clear();
    lex(covered, chosen);
    return found_;
  }

 private:
  void apply(std::vector<Block>& covered, Index c) const {
    const Block* row = &balls_[c * blocks_];
    for (std::size_t b = 0; b < blocks_; ++b) covered[b] |= row[b];
  }

  std::uint64_t uncovered_count(const std::vector<Block>& covered) const {
    std::uint64_t n = 0;
    for (Block b : covered) n += static_cast<std::uint64_t>(std::popcount(b));
    return total_ - n;
  }

  Index first_uncovered(const std::vector<Block>& covered) const {
    for (std::size_t b = 0; b < blocks_; ++b) {
      if (~covered[b] != 0) return b * 64 + static_cast<Index>(std::countr_zero(~covered[b]));
    }
    return total_;
  }

  bool tick() {
    ++nodes_;
    if (nodes_ > budget_.nodes) exhausted_ = true;
    if ((nodes_ & 1023) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.time_seconds) exhausted_ = true;
    }
    return !exhausted_;
  }

  void branch(const std::vector<Block>& covered, std::vector<Index>& chosen) {
    if (!tick()) return;
    const std::uint64_t missing = uncovered_count(covered);
    if (missing == 0) {
      if (chosen.size() < best_size_) {
        best_size_ = chosen.size();
        *best_ = chosen;
      }
      return;
    }
    if (chosen.size() + (missing + volume_ - 1) / volume_ >= best_size_) return;
    const Index w = first_uncovered(covered);
    std::vector<Block> next(blocks_);
    for (Index c : members_[w]) {
      next = covered;
      apply(next, c);
      chosen.push_back(c);
      branch(next, chosen);
      chosen.pop_back();
      if (exhausted_) return;
    }
  }

  bool lex(const std::vector<Block>& covered, std::vector<Index>& chosen) {
    if (!tick()) return false;
    const std::uint64_t missing = uncovered_count(covered);
    if (missing == 0) {
      found_ = chosen;
      return true;
    }
    if (chosen.size() >= target_) return false;
    if (chosen.size() + (missing + volume_ - 1) / volume_ > target_) return false;
    // Later codewords all exceed chosen.back(); one of them must cover w.
    const Index w = first_uncovered(covered);
    const Index last = max_member_[w];
    std::vector<Block> next(blocks_);
    for (Index c = chosen.back() + 1; c <= last; ++c) {
      next = covered;
      apply(next, c);
      chosen.push_back(c);
      const bool done = lex(next, chosen);
      chosen.pop_back();
      if (done) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  HammingSpace space_;
  Index total_;
  std::size_t blocks_;
  std::uint64_t volume_;
  SolveBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Block> balls_;
  std::vector<std::vector<Index>> members_;
  std::vector<Index> max_member_;

  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::uint64_t best_size_ = 0;
  std::vector<Index>* best_ = nullptr;
  std::uint64_t target_ = 0;
  std::vector<Index> found_;
};

}  // namespace

SolveResult minimal_covering_code(const HammingSpace& space, unsigned radius, SolveBudget budget, Index guard) {
  Search search(space, radius, budget, guard);

  Code greedy = greedy_covering_code(space, radius, guard);
  std::vector<Index> best = greedy.indices();
  const std::uint64_t size = search.minimize(best.size(), best);

  SolveResult result{.optimal_size = size, .code = Code::from_indices(space, best), .density = {}};
  if (search.exhausted()) {
    result.status = SolveStatus::budget_exceeded;
  } else {
    std::vector<Index> smallest = search.smallest_of_size(size);
    if (!smallest.empty()) result.code = Code::from_indices(space, std::move(smallest));
  }
  result.density = density(result.code, radius);
  result.nodes = search.nodes();
  return result;
}

DensityValue mu(const HammingSpace& space, unsigned radius, SolveBudget budget, Index guard) {
  SolveResult r = minimal_covering_code(space, radius, budget, guard);
  if (r.status != SolveStatus::optimal) {
    throw BudgetExceeded("solver budget exhausted before proving optimality (best size " +
                         std::to_string(r.optimal_size) + ")");
  }
  return r.density;
}

}  // namespace covering
