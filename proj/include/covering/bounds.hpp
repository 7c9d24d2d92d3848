#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "covering/errors.hpp"

namespace covering::bounds {

/// Parameters of the asymptotic density bounds. Natural logarithms throughout.
struct BoundParams {
  unsigned R = 1;
  double x = 0.0;
  double y = 2.0;
  std::optional<unsigned> R1;
  std::optional<double> mu_star_R1;
};

/// t = e^{-x} y^R, evaluated as exp(R ln y - x). The bounds need t < 1.
double feasibility(const BoundParams& p);

/// x (y/(y-1))^R (1 + 1/(e^x y^{-R} - 1)). Throws InfeasibleError unless
/// y > 1, x > 0 and t < 1.
double theorem1_bound(const BoundParams& p);

/// The same bound in the form a/(1-b) with a = x (y/(y-1))^R, b = t.
double theorem1_bound_closed(const BoundParams& p);

/// x C(R,R1)^{-1} y^{R1} (y/(y-1))^{R-R1} (1 + 1/(e^x y^{-R} - 1)) mu*(R1).
/// R1 = 0 (with mu* = 1) is accepted and reproduces theorem1_bound exactly.
/// A missing mu_star_R1 defaults to 1 for R1 = 0 and to the optimized
/// theorem1 bound for R1 otherwise.
double theorem15_bound(const BoundParams& p);

/// e^{(1.8 + ln ln R)/ln R} R ln R, valid for R >= 6.
double corollary_bound_new(unsigned R);

/// e (R ln R + ln R + ln ln R + 2), doubled for q >= 3; valid for R >= 3.
double corollary_bound_ksv(unsigned q, unsigned R);

/// The (x, y) used for the R >= 6 corollary: y = R ln R + 1, x = R ln y + 2 ln R.
BoundParams corollary_params(unsigned R);

struct ChainStep {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

struct ChainReport {
  unsigned R = 0;
  std::vector<ChainStep> steps;
  bool holds() const;
  /// Name of the first failing step, empty when all hold.
  std::string first_failure() const;
};

/// Evaluates each inequality of the R >= 6 corollary's derivation at R:
///   feasibility   t = R^-2 < 1
///   quoted        (R ln(R ln R + 1) + 2 ln R)(1 + 1/(R^2-1)) < R(ln R + ln ln R + 0.8)
///   power         (y/(y-1))^R <= e^{1/ln R}
///   theorem       theorem1 bound <= e^{1/ln R} x (1 + 1/(R^2-1))
///   exponential   1 + (ln ln R + 0.8)/ln R <= e^{(ln ln R + 0.8)/ln R}
///   corollary     theorem1 bound <= corollary_bound_new(R)
/// R must be at least 2; below 6 the report is informational.
ChainReport corollary2_chain_check(unsigned R);

struct OptimumPoint {
  double x = 0.0;
  double y = 0.0;
  double bound = 0.0;
};

/// Minimizes theorem1_bound over {y > 1, x > R ln y} with nested
/// golden-section searches: outer over ln(y-1), inner over x - R ln y.
/// `region_scale` stretches both search brackets.
OptimumPoint optimize_theorem1(unsigned R, double region_scale = 1.0);

/// a / (1 - b). Throws UsageError unless 0 <= b < 1.
double limit_lemma_bound(double a, double b);

/// s_n = a_n + b_n s_{floor(n/y)} for n >= y, and s_n = s_base for n < y.
struct RecurrenceSpec {
  std::function<double(std::uint64_t)> a_seq;
  std::function<double(std::uint64_t)> b_seq;
  double y = 2.0;
  double s_base = 0.0;
  double a = 0.0;
  double b = 0.0;
};

/// s_1..s_N (element i holds s_{i+1}).
std::vector<double> simulate_recurrence(const RecurrenceSpec& spec, std::uint64_t N);

/// Number of times n -> floor(n/y) applies before the index drops below y.
/// Equals floor(log_y n) for integer y.
unsigned recursion_depth(std::uint64_t n, double y);

/// b^{depth(n)} (|s_base| + a/(1-b)) for constant a_n = a, b_n = b.
double telescoped_error_bound(const RecurrenceSpec& spec, std::uint64_t n);

/// The sequences a_n = x V(n)/V(r'), b_n = e^{-x + V(r')/q^{r'}} V(n)/V(r)
/// with r = floor(n/y), r' = n - r, limits a = x (y/(y-1))^R, b = e^{-x} y^R.
RecurrenceSpec construction_recurrence(unsigned q, unsigned R, double x, double y, double s_base = 1.0);

/// V_q(n,R) in floating point via log-sum, for large n.
double log_ball_volume(unsigned q, std::uint64_t n, unsigned R);

struct TableRow {
  unsigned R = 0;
  double t_feas = 0.0;
  OptimumPoint opt;
  std::optional<double> cor_new;
  std::optional<double> cor_ksv_q2;
  std::optional<double> cor_ksv_q3;
  std::optional<double> ratio_new_over_ksv2;
};

TableRow table_row(unsigned R);

/// CSV with header R,t_feas,x_opt,y_opt,bound_opt,cor_new,cor_ksv_q2,cor_ksv_q3,ratio_new_over_ksv2.
/// Reals use 17 significant digits; inapplicable cells are empty.
std::string bounds_table_csv(unsigned R_min, unsigned R_max);

/// 17 significant digits, independent of the C locale.
std::string format_real(double v);

}  // namespace covering::bounds
