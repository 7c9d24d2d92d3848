#include <doctest.h>

#include <cmath>
#include <random>

#include "covering/bounds.hpp"

using namespace covering;
using namespace covering::bounds;

namespace {

// Reference values from 40-digit evaluation of the closed forms (mpmath).
constexpr double kFourLnFour = 5.545177444479562475;       // R=1, y=2, x=ln 4
constexpr double kTwoLevelExample = 7.393569925972749967;  // (8/3) ln 16
constexpr double kTheorem1AtCorollaryR6 = 32.21334194386763042;
constexpr double kCorollaryNewR6 = 40.65190604506528433;
constexpr double kCorollaryNewR100 = 948.4581704747034912;
constexpr double kCorollaryKsvR6 = 41.11541084550610376;

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

}  // namespace

TEST_CASE("feasibility") {
  for (unsigned R : {2u, 6u, 17u, 400u}) {
    const BoundParams p = corollary_params(R);
    CHECK(rel_close(feasibility(p), 1.0 / (double(R) * R), 1e-11));
  }
  CHECK(rel_close(feasibility(corollary_params(6)), 1.0 / 36, 1e-13));
  BoundParams edge{.R = 3, .x = 3 * std::log(2.5), .y = 2.5};
  CHECK(feasibility(edge) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(theorem1_bound(edge), InfeasibleError);
}

TEST_CASE("theorem1_bound values") {
  const BoundParams p{.R = 1, .x = std::log(4.0), .y = 2.0};
  CHECK(rel_close(theorem1_bound(p), kFourLnFour, 1e-14));
  CHECK(rel_close(theorem1_bound_closed(p), kFourLnFour, 1e-14));
  CHECK(rel_close(theorem1_bound(corollary_params(6)), kTheorem1AtCorollaryR6, 1e-13));
  CHECK(theorem1_bound(corollary_params(6)) <= corollary_bound_new(6));
  CHECK_THROWS_AS(theorem1_bound({.R = 2, .x = 1.0, .y = 0.5}), InfeasibleError);
  CHECK_THROWS_AS(theorem1_bound({.R = 2, .x = -1.0, .y = 1.5}), InfeasibleError);
}

TEST_CASE("theorem1_bound approaches its leading term as x grows") {
  const double y = 3.0;
  const unsigned R = 4;
  double prev = INFINITY;
  for (double x = 10; x <= 200; x += 10) {
    const double lead = x * std::pow(y / (y - 1), R);
    const double ratio = theorem1_bound({.R = R, .x = x, .y = y}) / lead;
    CHECK(ratio >= 1.0);
    CHECK(ratio - 1.0 <= prev);
    prev = ratio - 1.0;
  }
  CHECK(prev < 1e-60);
}

TEST_CASE("theorem1_bound increases toward the feasibility boundary") {
  const unsigned R = 5;
  const double y = 4.0;
  const double edge = R * std::log(y);
  double prev = 0.0;
  for (double gap = 2.0; gap > 1e-9; gap /= 3) {
    const double v = theorem1_bound({.R = R, .x = edge + gap, .y = y});
    if (gap < 1.0) CHECK(v > prev);
    prev = v;
  }
  CHECK(prev > 1e9);
}

TEST_CASE("two algebraic forms agree") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const unsigned R = 1 + rng() % 60;
    const double y = 1.0 + std::exp(-6 + 12 * u(rng));
    const double x = R * std::log(y) + std::exp(-8 + 12 * u(rng));
    const BoundParams p{.R = R, .x = x, .y = y};
    CHECK(rel_close(theorem1_bound(p), theorem1_bound_closed(p), 1e-12));
  }
}

TEST_CASE("theorem15_bound") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const unsigned R = 1 + rng() % 40;
    const double y = 1.01 + (rng() % 10000) / 100.0;
    const double x = R * std::log(y) + 0.01 + (rng() % 1000) / 100.0;
    const double t1 = theorem1_bound({.R = R, .x = x, .y = y});
    CHECK(theorem15_bound({.R = R, .x = x, .y = y, .R1 = 0, .mu_star_R1 = 1.0}) == t1);
    CHECK(theorem15_bound({.R = R, .x = x, .y = y, .R1 = 0}) == t1);
  }
  const BoundParams ex{.R = 2, .x = std::log(16.0), .y = 2.0, .R1 = 1, .mu_star_R1 = 1.0};
  CHECK(rel_close(theorem15_bound(ex), kTwoLevelExample, 1e-14));
  BoundParams doubled = ex;
  doubled.mu_star_R1 = 2.0;
  CHECK(theorem15_bound(doubled) == 2.0 * theorem15_bound(ex));
  BoundParams defaulted = ex;
  defaulted.mu_star_R1.reset();
  CHECK(rel_close(theorem15_bound(defaulted), kTwoLevelExample * optimize_theorem1(1).bound, 1e-14));
  BoundParams bad = ex;
  bad.R1 = 2;
  CHECK_THROWS_AS(theorem15_bound(bad), UsageError);
  bad.R1 = 1;
  bad.mu_star_R1 = 0.5;
  CHECK_THROWS_AS(theorem15_bound(bad), UsageError);
}

TEST_CASE("corollary bounds") {
  CHECK(rel_close(corollary_bound_new(6), kCorollaryNewR6, 1e-14));
  CHECK(rel_close(corollary_bound_new(100), kCorollaryNewR100, 1e-14));
  CHECK(rel_close(corollary_bound_ksv(2, 6), kCorollaryKsvR6, 1e-14));
  CHECK(corollary_bound_ksv(3, 6) == 2.0 * corollary_bound_ksv(2, 6));
  CHECK(corollary_bound_ksv(7, 9) == corollary_bound_ksv(3, 9));
  CHECK(corollary_bound_new(6) < corollary_bound_ksv(2, 6));
  CHECK_THROWS_AS(corollary_bound_new(5), UsageError);
  CHECK_THROWS_AS(corollary_bound_ksv(2, 2), UsageError);
  for (unsigned R = 6; R < 10000; ++R) REQUIRE(corollary_bound_new(R + 1) > corollary_bound_new(R));
}

TEST_CASE("corollary chain check") {
  const ChainReport r6 = corollary2_chain_check(6);
  CHECK(r6.holds());
  CHECK(r6.first_failure().empty());
  CHECK(r6.steps.size() == 6);
  CHECK(corollary2_chain_check(10000).holds());

  // Below the stated range: direct evaluation gives 14.824 > 14.427 for the quoted step.
  const ChainReport r5 = corollary2_chain_check(5);
  CHECK_FALSE(r5.holds());
  CHECK(r5.first_failure() == "quoted");
  for (const ChainStep& s : r5.steps) {
    if (s.name == "quoted") {
      CHECK(s.lhs == doctest::Approx(14.82411108770667).epsilon(1e-13));
      CHECK(s.rhs == doctest::Approx(14.42661453880605).epsilon(1e-13));
    } else {
      CHECK(s.holds);
    }
  }
  CHECK_THROWS_AS(corollary2_chain_check(1), UsageError);
}

TEST_CASE("optimizer") {
  const OptimumPoint r6 = optimize_theorem1(6);
  CHECK(r6.bound <= theorem1_bound(corollary_params(6)));
  CHECK(r6.bound <= kCorollaryNewR6);
  CHECK(r6.bound == theorem1_bound({.R = 6, .x = r6.x, .y = r6.y}));
  CHECK(r6.x > 6 * std::log(r6.y));

  const OptimumPoint r1 = optimize_theorem1(1);
  CHECK(r1.bound <= kFourLnFour);

  for (unsigned R : {1u, 3u, 6u, 25u, 200u}) {
    const OptimumPoint a = optimize_theorem1(R);
    const OptimumPoint b = optimize_theorem1(R, 2.0);
    CHECK(rel_close(a.bound, b.bound, 1e-6));
  }
}

TEST_CASE("optimizer beats random feasible samples") {
  std::mt19937_64 rng(77);
  for (unsigned R : {1u, 2u, 6u, 13u, 50u}) {
    const double best = optimize_theorem1(R).bound;
    for (int i = 0; i < 500; ++i) {
      const double y = 1.0 + std::exp(-4 + 10 * (rng() % 10000) / 10000.0);
      const double x = R * std::log(y) + std::exp(-5 + 8 * (rng() % 10000) / 10000.0);
      CHECK(best <= theorem1_bound({.R = R, .x = x, .y = y}));
    }
  }
}

TEST_CASE("limit lemma") {
  CHECK(limit_lemma_bound(1.0, 0.0) == 1.0);
  CHECK(limit_lemma_bound(0.0, 0.9) == 0.0);
  const BoundParams p{.R = 3, .x = 7.0, .y = 4.0};
  const double a = p.x * std::pow(p.y / (p.y - 1), p.R);
  const double b = std::exp(-p.x) * std::pow(p.y, p.R);
  CHECK(rel_close(limit_lemma_bound(a, b), theorem1_bound(p), 1e-13));
  CHECK_THROWS_AS(limit_lemma_bound(1.0, 1.0), UsageError);
  CHECK_THROWS_AS(limit_lemma_bound(1.0, -0.1), UsageError);
}

TEST_CASE("recurrence simulation") {
  RecurrenceSpec spec{.a_seq = [](std::uint64_t) { return 1.0; }, .b_seq = [](std::uint64_t) { return 0.5; },
                      .y = 2.0, .s_base = 0.0, .a = 1.0, .b = 0.5};
  const auto s = simulate_recurrence(spec, 1024);
  CHECK(std::abs(s.back() - 2.0) <= std::ldexp(1.0, -10) * 2);
  CHECK(recursion_depth(1024, 2.0) == 10);
  CHECK(telescoped_error_bound(spec, 1024) == std::ldexp(1.0, -9));

  RecurrenceSpec zero_b{.a_seq = [](std::uint64_t n) { return 1.0 / n; }, .b_seq = [](std::uint64_t) { return 0.0; },
                        .y = 3.0, .s_base = 5.0};
  const auto z = simulate_recurrence(zero_b, 100);
  CHECK(z[0] == 5.0);
  CHECK(z[1] == 5.0);
  for (std::uint64_t n = 3; n <= 100; ++n) CHECK(z[n - 1] == 1.0 / n);
  CHECK_THROWS_AS(simulate_recurrence(zero_b, 0), UsageError);
}

TEST_CASE("recursion depth equals floor(log_y n) for integer y") {
  for (unsigned y = 2; y <= 7; ++y) {
    for (std::uint64_t n = 1; n < 5000; n += 7) {
      unsigned expect = 0;
      for (std::uint64_t p = y; p <= n; p *= y) ++expect;
      CHECK(recursion_depth(n, y) == expect);
    }
  }
}

TEST_CASE("log_ball_volume") {
  CHECK(std::exp(log_ball_volume(3, 4, 2)) == doctest::Approx(33.0).epsilon(1e-12));
  CHECK(std::exp(log_ball_volume(2, 5, 9)) == doctest::Approx(32.0).epsilon(1e-12));
  CHECK(std::exp(log_ball_volume(2, 0, 3)) == doctest::Approx(1.0));
}

TEST_CASE("bounds table") {
  const std::string csv = bounds_table_csv(5, 6);
  CHECK(csv.rfind("R,t_feas,x_opt,y_opt,bound_opt,cor_new,cor_ksv_q2,cor_ksv_q3,ratio_new_over_ksv2\n", 0) == 0);
  CHECK(csv.find("\n5,") != std::string::npos);
  CHECK(csv.find(",40.651906045065282,41.115410845506105,") != std::string::npos);
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(2.0) == "2");
  CHECK_THROWS_AS(bounds_table_csv(0, 3), UsageError);
}
