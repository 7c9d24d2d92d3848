#include "covering/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace covering::bounds {
namespace {

/// ln(y/(y-1)); stays accurate both for y near 1 and for large y.
double log_y_ratio(double y) { return std::log1p(1.0 / (y - 1.0)); }

/// x - R ln y, the margin that must be positive.
double margin(const BoundParams& p) { return p.x - p.R * std::log(p.y); }

void require_feasible(const BoundParams& p) {
  if (!(p.y > 1.0)) throw InfeasibleError("requires y > 1");
  if (!(p.x > 0.0)) throw InfeasibleError("requires x > 0");
  if (!(margin(p) > 0.0)) throw InfeasibleError("requires x > R*ln(y) (e^-x y^R < 1)");
}

double binomial_real(unsigned n, unsigned k) {
  k = std::min(k, n - k);
  double c = 1.0;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c < 0x1p53 ? std::round(c) : c;
}

struct Extremum {
  double arg;
  double value;
};

template <class F>
Extremum golden_section(F&& f, double lo, double hi, double rel_tol, int max_iter = 400) {
  constexpr double inv_phi = 0.6180339887498948482;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter && (hi - lo) > rel_tol * std::max(1.0, std::abs(lo) + std::abs(hi)); ++i) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc < fd ? Extremum{c, fc} : Extremum{d, fd};
}

constexpr double kTolerance = 1e-10;

}  // namespace

double feasibility(const BoundParams& p) { return std::exp(p.R * std::log(p.y) - p.x); }

double theorem1_bound(const BoundParams& p) {
  require_feasible(p);
  const double power = std::exp(p.R * log_y_ratio(p.y));
  return p.x * power * (1.0 + 1.0 / std::expm1(margin(p)));
}

double theorem1_bound_closed(const BoundParams& p) {
  require_feasible(p);
  const double a = p.x * std::exp(p.R * log_y_ratio(p.y));
  const double b = feasibility(p);
  return a / (1.0 - b);
}

double theorem15_bound(const BoundParams& p) {
  require_feasible(p);
  const unsigned r1 = p.R1.value_or(0);
  if (r1 >= p.R) throw UsageError("theorem15_bound requires R1 < R");
  double mu = 1.0;
  if (p.mu_star_R1) {
    mu = *p.mu_star_R1;
  } else if (r1 > 0) {
    mu = optimize_theorem1(r1).bound;
  }
  if (!(mu >= 1.0)) throw UsageError("mu*(R1) must be at least 1");
  const double exponent = r1 * std::log(p.y) + (p.R - r1) * log_y_ratio(p.y);
  return p.x / binomial_real(p.R, r1) * std::exp(exponent) * (1.0 + 1.0 / std::expm1(margin(p))) * mu;
}

double corollary_bound_new(unsigned R) {
  if (R < 6) throw UsageError("corollary_bound_new is stated for R >= 6, got R = " + std::to_string(R));
  const double lr = std::log(static_cast<double>(R));
  return std::exp((1.8 + std::log(lr)) / lr) * R * lr;
}

double corollary_bound_ksv(unsigned q, unsigned R) {
  if (R < 3) throw UsageError("corollary_bound_ksv is stated for R >= 3, got R = " + std::to_string(R));
  if (q < 2) throw UsageError("alphabet size q must be at least 2");
  const double lr = std::log(static_cast<double>(R));
  const double base = std::exp(1.0) * (R * lr + lr + std::log(lr) + 2.0);
  return q == 2 ? base : 2.0 * base;
}

BoundParams corollary_params(unsigned R) {
  const double lr = std::log(static_cast<double>(R));
  BoundParams p;
  p.R = R;
  p.y = R * lr + 1.0;
  p.x = R * std::log(p.y) + 2.0 * lr;
  return p;
}

bool ChainReport::holds() const {
  return std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.holds; });
}

std::string ChainReport::first_failure() const {
  for (const ChainStep& s : steps)
    if (!s.holds) return s.name;
  return {};
}

ChainReport corollary2_chain_check(unsigned R) {
  if (R < 2) throw UsageError("corollary2_chain_check needs R >= 2");
  const double r = R;
  const double lr = std::log(r);
  const double llr = std::log(lr);
  const BoundParams p = corollary_params(R);
  const double correction = 1.0 + 1.0 / (r * r - 1.0);
  ChainReport report{.R = R};
  auto add = [&](std::string name, double lhs, double rhs, bool holds) {
    report.steps.push_back({std::move(name), lhs, rhs, holds});
  };

  const double t = feasibility(p);
  const double target = 1.0 / (r * r);
  // R ln y - x cancels; its rounding error is a few ulps of x
  const double slack = 8.0 * std::numeric_limits<double>::epsilon() * p.x;
  add("feasibility", t, target, t < 1.0 && std::abs(t - target) <= slack * target);

  const double quoted_lhs = (r * std::log(r * lr + 1.0) + 2.0 * lr) * correction;
  const double quoted_rhs = r * (lr + llr + 0.8);
  add("quoted", quoted_lhs, quoted_rhs, quoted_lhs < quoted_rhs);

  const double power = std::exp(r * log_y_ratio(p.y));
  const double e_inv_log = std::exp(1.0 / lr);
  add("power", power, e_inv_log, power <= e_inv_log);

  const double bound = t < 1.0 ? theorem1_bound(p) : std::numeric_limits<double>::infinity();
  add("theorem", bound, e_inv_log * p.x * correction, bound <= e_inv_log * p.x * correction);

  const double eps = (llr + 0.8) / lr;
  add("exponential", 1.0 + eps, std::exp(eps), 1.0 + eps <= std::exp(eps));

  const double cor = std::exp((1.8 + llr) / lr) * r * lr;
  add("corollary", bound, cor, bound <= cor);
  return report;
}

OptimumPoint optimize_theorem1(unsigned R, double region_scale) {
  if (R < 1) throw UsageError("optimize_theorem1 requires R >= 1");
  const double r = R;
  const double log_scale = std::log(r + 2.0);
  const double outer_lo = std::log(1e-6);
  const double outer_hi = std::log(region_scale * (10.0 * r * log_scale + 10.0) - 1.0);
  const double inner_lo = 1e-9;
  const double inner_hi = region_scale * 20.0 * log_scale;

  auto inner = [&](double log_y_minus_1) {
    const double y = 1.0 + std::exp(log_y_minus_1);
    const double ln_y = std::log(y);
    const double power = std::exp(r * log_y_ratio(y));
    auto h = [&](double s) { return (s + r * ln_y) * power * (1.0 + 1.0 / std::expm1(s)); };
    const Extremum best = golden_section(h, inner_lo, inner_hi, kTolerance);
    return std::pair{best, y};
  };
  auto outer_value = [&](double v) { return inner(v).first.value; };

  // coarse scan, then refine around the three best local minima
  constexpr int kGrid = 48;
  std::vector<double> grid(kGrid + 1), values(kGrid + 1);
  for (int i = 0; i <= kGrid; ++i) {
    grid[i] = outer_lo + (outer_hi - outer_lo) * i / kGrid;
    values[i] = outer_value(grid[i]);
  }
  std::vector<int> seeds;
  for (int i = 0; i <= kGrid; ++i) {
    const bool left_ok = i == 0 || values[i] <= values[i - 1];
    const bool right_ok = i == kGrid || values[i] <= values[i + 1];
    if (left_ok && right_ok) seeds.push_back(i);
  }
  std::sort(seeds.begin(), seeds.end(), [&](int a, int b) { return values[a] < values[b]; });
  if (seeds.size() > 3) seeds.resize(3);

  OptimumPoint best{.bound = std::numeric_limits<double>::infinity()};
  for (int i : seeds) {
    const double lo = grid[std::max(i - 1, 0)];
    const double hi = grid[std::min(i + 1, kGrid)];
    const Extremum e = golden_section(outer_value, lo, hi, kTolerance);
    const auto [in, y] = inner(e.arg);
    BoundParams p{.R = R, .x = in.arg + r * std::log(y), .y = y};
    const double value = theorem1_bound(p);
    if (value < best.bound) best = {p.x, p.y, value};
  }
  return best;
}

double limit_lemma_bound(double a, double b) {
  if (!(b >= 0.0 && b < 1.0)) throw UsageError("limit_lemma_bound requires 0 <= b < 1");
  return a / (1.0 - b);
}

namespace {

std::uint64_t floor_div(std::uint64_t n, double y) {
  return static_cast<std::uint64_t>(std::floor(static_cast<double>(n) / y));
}

}  // namespace

std::vector<double> simulate_recurrence(const RecurrenceSpec& spec, std::uint64_t N) {
  if (N < 1) throw UsageError("simulate_recurrence requires N >= 1");
  if (!(spec.y > 1.0)) throw UsageError("simulate_recurrence requires y > 1");
  std::vector<double> s(N);
  for (std::uint64_t n = 1; n <= N; ++n) {
    if (static_cast<double>(n) < spec.y) {
      s[n - 1] = spec.s_base;
    } else {
      s[n - 1] = spec.a_seq(n) + spec.b_seq(n) * s[floor_div(n, spec.y) - 1];
    }
  }
  return s;
}

unsigned recursion_depth(std::uint64_t n, double y) {
  unsigned depth = 0;
  while (n >= 1 && static_cast<double>(n) >= y) {
    n = floor_div(n, y);
    ++depth;
  }
  return depth;
}

double telescoped_error_bound(const RecurrenceSpec& spec, std::uint64_t n) {
  const double limit = limit_lemma_bound(spec.a, spec.b);
  return std::pow(spec.b, recursion_depth(n, spec.y)) * (std::abs(spec.s_base) + std::abs(limit));
}

double log_ball_volume(unsigned q, std::uint64_t n, unsigned R) {
  const double nn = static_cast<double>(n);
  const double lq1 = std::log(static_cast<double>(q - 1));
  const std::uint64_t top = std::min<std::uint64_t>(R, n);
  std::vector<double> terms;
  for (std::uint64_t i = 0; i <= top; ++i) {
    const double ii = static_cast<double>(i);
    terms.push_back(ii * lq1 + std::lgamma(nn + 1) - std::lgamma(ii + 1) - std::lgamma(nn - ii + 1));
  }
  const double peak = *std::max_element(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - peak);
  return peak + std::log(sum);
}

RecurrenceSpec construction_recurrence(unsigned q, unsigned R, double x, double y, double s_base) {
  const BoundParams p{.R = R, .x = x, .y = y};
  require_feasible(p);
  RecurrenceSpec spec;
  spec.y = y;
  spec.s_base = s_base;
  spec.a = x * std::exp(R * log_y_ratio(y));
  spec.b = feasibility(p);
  spec.a_seq = [=](std::uint64_t n) {
    const std::uint64_t r_prime = n - floor_div(n, y);
    return x * std::exp(log_ball_volume(q, n, R) - log_ball_volume(q, r_prime, R));
  };
  spec.b_seq = [=](std::uint64_t n) {
    const std::uint64_t r = floor_div(n, y);
    const std::uint64_t r_prime = n - r;
    const double fill = std::exp(log_ball_volume(q, r_prime, R) - static_cast<double>(r_prime) * std::log(q));
    return std::exp(-x + fill + log_ball_volume(q, n, R) - log_ball_volume(q, r, R));
  };
  return spec;
}

TableRow table_row(unsigned R) {
  TableRow row{.R = R, .opt = optimize_theorem1(R)};
  row.t_feas = feasibility({.R = R, .x = row.opt.x, .y = row.opt.y});
  if (R >= 6) row.cor_new = corollary_bound_new(R);
  if (R >= 3) {
    row.cor_ksv_q2 = corollary_bound_ksv(2, R);
    row.cor_ksv_q3 = corollary_bound_ksv(3, R);
  }
  if (row.cor_new && row.cor_ksv_q2) row.ratio_new_over_ksv2 = *row.cor_new / *row.cor_ksv_q2;
  return row;
}

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string bounds_table_csv(unsigned R_min, unsigned R_max) {
  if (R_min < 1 || R_max < R_min) throw UsageError("bounds table needs 1 <= R-min <= R-max");
  auto cell = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
  std::ostringstream out;
  out << "R,t_feas,x_opt,y_opt,bound_opt,cor_new,cor_ksv_q2,cor_ksv_q3,ratio_new_over_ksv2\n";
  for (unsigned R = R_min; R <= R_max; ++R) {
    const TableRow row = table_row(R);
    out << row.R << ',' << format_real(row.t_feas) << ',' << format_real(row.opt.x) << ','
        << format_real(row.opt.y) << ',' << format_real(row.opt.bound) << ',' << cell(row.cor_new) << ','
        << cell(row.cor_ksv_q2) << ',' << cell(row.cor_ksv_q3) << ',' << cell(row.ratio_new_over_ksv2) << '\n';
  }
  return out.str();
}

}  // namespace covering::bounds
