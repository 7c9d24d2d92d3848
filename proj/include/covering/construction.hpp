#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covering/code.hpp"
#include "covering/exact_solver.hpp"
#include "covering/graph.hpp"

namespace covering {

/// A (+) B = {(a, b) : a in A, b in B}.
Code direct_sum(const Code& a, const Code& b);

/// How a space that is not split further gets its covering code.
///   automatic: exact solver when q^n <= exact_guard, greedy otherwise
///   trivial:   the whole space
enum class BasePolicy { automatic, trivial, exact, greedy };

std::string to_string(BasePolicy p);
BasePolicy parse_base_policy(const std::string& text);

struct ConstructionOptions {
  BasePolicy base_policy = BasePolicy::automatic;
  std::uint64_t seed = 0;
  std::uint64_t max_trials = 100;
  Index graph_guard = kDefaultEnumerationGuard;
  Index exact_guard = kDefaultExactGuard;
  SolveBudget exact_budget{.time_seconds = 5.0, .nodes = 200'000};
};

/// One recursion level, outermost first.
///
/// A split level covers [q]^n as (X (+) [q]^r) u (N_bar (+) K2) with
/// r = floor(n/y), r' = n - r, X and N_bar living in [q]^{r'} and K2 the
/// code built for [q]^r by the next level. A base level records the code
/// chosen for a space that is not split; `method` says which.
struct TraceLevel {
  bool split = false;
  unsigned n = 0;
  unsigned r = 0;
  unsigned r_prime = 0;
  std::uint64_t x_size = 0;
  std::uint64_t n_bar_size = 0;
  std::uint64_t k2_size = 0;
  std::uint64_t level_size = 0;
  std::uint64_t x_budget = 0;
  std::uint64_t n_bar_threshold = 0;
  std::uint64_t trials = 0;
  std::string method;
  bool optimal = false;
};

struct ConstructionTrace {
  unsigned q = 0;
  unsigned radius = 0;
  double x = 0.0;
  double y = 0.0;
  std::uint64_t seed = 0;
  BasePolicy base_policy = BasePolicy::automatic;
  std::vector<TraceLevel> levels;
  std::uint64_t total_size = 0;
  DensityValue density;
};

struct ConstructionResult {
  Code code;
  ConstructionTrace trace;
};

/// Thrown when neither random trials nor the greedy fallback reach the
/// undominated-vertex threshold at some level.
class ConstructionFailure : public std::runtime_error {
 public:
  ConstructionFailure(const std::string& what, ConstructionTrace partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const ConstructionTrace& partial_trace() const noexcept { return partial_; }

 private:
  ConstructionTrace partial_;
};

/// Recursive covering code construction for [q]^n of radius R.
///
/// Requires x > R ln y (e^{-x} y^R < 1), y > 1 and n >= 1. Spaces with
/// n <= R get the single zero word. Otherwise, with r = floor(n/y): if r == 0
/// the base policy applies; else X comes from dominating_partial on the
/// distance-R graph of [q]^{r'} (greedy with the same size budget if every
/// trial misses), and K2 from recursing on [q]^r.
ConstructionResult ksv_construct(const HammingSpace& space, unsigned radius, double x, double y,
                                 const ConstructionOptions& options = {});

}  // namespace covering
