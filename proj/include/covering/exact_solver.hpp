#pragma once

#include <cstdint>

#include "covering/code.hpp"

namespace covering {

/// Largest q^n the exact solver accepts unless the caller raises it.
inline constexpr Index kDefaultExactGuard = Index{1} << 12;

enum class SolveStatus { optimal, budget_exceeded };

struct SolveBudget {
  double time_seconds = 60.0;
  std::uint64_t nodes = 100'000'000;
};

/// optimal_size is the proven minimum when status is optimal; otherwise it is
/// the size of the best code found.
struct SolveResult {
  std::uint64_t optimal_size = 0;
  Code code;
  DensityValue density;
  SolveStatus status = SolveStatus::optimal;
  std::uint64_t nodes = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimum covering code of radius R by branch and bound.
///
/// The search fixes 0^n as a codeword (every covering code has a translate
/// containing it), branches on the smallest uncovered word w over the
/// codewords that could cover it, i.e. Ball(w, R), and prunes with
/// |partial| + ceil(uncovered / V_q(n,R)) >= incumbent. Once the minimum size
/// k is known, a second search walks k-subsets in lexicographic order and
/// returns the first covering one, so ties are broken deterministically.
SolveResult minimal_covering_code(const HammingSpace& space, unsigned radius, SolveBudget budget = {},
                                  Index guard = kDefaultExactGuard);

/// mu_q(n,R). Throws BudgetExceeded if optimality was not proven.
DensityValue mu(const HammingSpace& space, unsigned radius, SolveBudget budget = {},
                Index guard = kDefaultExactGuard);

}  // namespace covering
