#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>

#include "covering/bounds.hpp"
#include "covering/construction.hpp"
#include "covering/exact_solver.hpp"
#include "covering/serialization.hpp"

namespace covering::cli {
namespace {

using nlohmann::json;
namespace b = covering::bounds;

struct ConstructArgs {
  unsigned q = 2, n = 1, R = 1;
  double x = 0, y = 2;
  std::uint64_t seed = 0;
  std::string base_policy = "auto";
  std::string out, trace;
};

struct VerifyArgs {
  std::string code;
  unsigned R = 0;
  std::optional<std::uint64_t> sampled;
  std::uint64_t seed = 0;
  std::optional<Index> guard;
};

struct SolveArgs {
  unsigned q = 2, n = 1, R = 1;
  double time_budget = 60.0;
  std::uint64_t node_budget = 100'000'000;
  std::optional<Index> guard;
  std::string out;
};

struct EvalArgs {
  unsigned R = 1;
  double x = 0, y = 2;
  std::optional<unsigned> R1;
  std::optional<double> mu;
  std::string format = "text";
};

struct RangeArgs {
  unsigned R_min = 1, R_max = 1;
  std::string format;
  std::string out;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

Index effective_guard(const std::optional<Index>& flag, Index fallback, std::ostream& err) {
  if (!flag) return fallback;
  if (*flag > fallback) err << "warning: enumeration guard raised to " << *flag << " (default " << fallback << ")\n";
  return *flag;
}

int do_construct(const ConstructArgs& a, std::ostream& out) {
  ConstructionOptions opts;
  opts.seed = a.seed;
  opts.base_policy = parse_base_policy(a.base_policy);
  const ConstructionResult result = ksv_construct(HammingSpace(a.q, a.n), a.R, a.x, a.y, opts);
  write_code_file(a.out, result.code);
  const std::string trace_path = a.trace.empty() ? a.out + ".trace.json" : a.trace;
  write_text_file(trace_path, canonical_dump(trace_to_json(result.trace)));

  out << "size " << result.code.size() << "\n";
  out << "density " << result.trace.density.exact_string() << " ~ " << b::format_real(result.trace.density.approx)
      << "\n";
  // finite-n densities are reported next to the asymptotic bound, not compared with it
  out << "asymptotic_bound " << b::format_real(b::theorem1_bound({.R = a.R, .x = a.x, .y = a.y})) << "\n";
  out << "code " << a.out << "\ntrace " << trace_path << "\n";
  return kOk;
}

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const Code code = read_code_file(a.code);
  CoverVerdict v;
  if (a.sampled) {
    v = verify_covering_sampled(code, a.R, *a.sampled, a.seed);
  } else {
    v = verify_covering(code, a.R, effective_guard(a.guard, kDefaultEnumerationGuard, err));
  }
  switch (v.status) {
    case CoverStatus::covered: out << "covered\n"; return kOk;
    case CoverStatus::no_counterexample: out << "no-counterexample (" << *a.sampled << " samples)\n"; return kOk;
    case CoverStatus::uncovered: out << "uncovered " << format_word(code.space(), *v.witness) << "\n"; return kNotCovered;
  }
  return kNotCovered;
}

int do_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const SolveResult r = minimal_covering_code(HammingSpace(a.q, a.n), a.R, {a.time_budget, a.node_budget},
                                              effective_guard(a.guard, kDefaultExactGuard, err));
  emit(canonical_dump(solve_result_to_json(r, a.R)), a.out, out);
  return kOk;
}

int do_eval(const EvalArgs& a, std::ostream& out) {
  b::BoundParams p{.R = a.R, .x = a.x, .y = a.y, .R1 = a.R1, .mu_star_R1 = a.mu};
  json j;
  j["R"] = a.R;
  j["x"] = a.x;
  j["y"] = a.y;
  j["t"] = b::feasibility(p);
  j["theorem1"] = b::theorem1_bound(p);
  j["theorem1_closed"] = b::theorem1_bound_closed(p);
  if (a.R1) {
    j["R1"] = *a.R1;
    j["theorem15"] = b::theorem15_bound(p);
  }
  if (a.R >= 6) j["corollary_new"] = b::corollary_bound_new(a.R);
  if (a.R >= 3) {
    j["corollary_ksv_q2"] = b::corollary_bound_ksv(2, a.R);
    j["corollary_ksv_q3"] = b::corollary_bound_ksv(3, a.R);
  }
  if (a.format == "json") {
    out << canonical_dump(j);
    return kOk;
  }
  for (const char* key : {"t", "theorem1", "theorem1_closed", "theorem15", "corollary_new", "corollary_ksv_q2",
                          "corollary_ksv_q3"}) {
    if (j.contains(key)) out << key << " = " << b::format_real(j[key].get<double>()) << "\n";
  }
  return kOk;
}

int do_check(const RangeArgs& a, std::ostream& out) {
  if (a.R_min < 2 || a.R_max < a.R_min) throw UsageError("check-corollary needs 2 <= R-min <= R-max");
  unsigned failures = 0;
  json failed = json::array();
  for (unsigned R = a.R_min; R <= a.R_max; ++R) {
    const b::ChainReport rep = b::corollary2_chain_check(R);
    if (rep.holds()) continue;
    ++failures;
    for (const b::ChainStep& s : rep.steps) {
      if (s.holds) continue;
      if (a.format == "json") {
        failed.push_back({{"R", R}, {"step", s.name}, {"lhs", s.lhs}, {"rhs", s.rhs}});
      } else {
        out << "R=" << R << " fails " << s.name << ": " << b::format_real(s.lhs) << " vs " << b::format_real(s.rhs)
            << "\n";
      }
    }
  }
  const unsigned checked = a.R_max - a.R_min + 1;
  if (a.format == "json") {
    out << canonical_dump({{"R_min", a.R_min}, {"R_max", a.R_max}, {"checked", checked}, {"failing", failed},
                           {"holds", failures == 0}});
  } else {
    out << "checked R in [" << a.R_min << ", " << a.R_max << "]: "
        << (failures == 0 ? "all steps hold" : std::to_string(failures) + " value(s) of R fail") << "\n";
  }
  return failures == 0 ? kOk : kNotCovered;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering codes in Hamming space: construction, verification, exact search and density bounds",
               "covering"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a covering code with the recursive construction");
  construct->add_option("--q", ca.q, "Alphabet size")->required()->check(CLI::Range(2u, 1u << 16));
  construct->add_option("--n", ca.n, "Word length")->required()->check(CLI::Range(1u, 63u));
  construct->add_option("--R", ca.R, "Covering radius")->required();
  construct->add_option("--x", ca.x, "Domination parameter x > R ln y")->required();
  construct->add_option("--y", ca.y, "Split parameter y > 1")->required();
  construct->add_option("--seed", ca.seed, "Random seed");
  construct->add_option("--base-policy", ca.base_policy, "auto|trivial|exact|greedy")
      ->check(CLI::IsMember({"auto", "trivial", "exact", "greedy"}));
  construct->add_option("--out", ca.out, "Code file to write")->required();
  construct->add_option("--trace", ca.trace, "Trace file (default: <out>.trace.json)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check that a code file covers its space");
  verify->add_option("--code", va.code, "Code file")->required();
  verify->add_option("--R", va.R, "Covering radius")->required();
  verify->add_option("--sampled", va.sampled, "Check this many random words instead of the whole space")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", va.seed, "Seed for --sampled");
  verify->add_option("--guard", va.guard, "Largest q^n scanned exhaustively (default 2^26)");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Find a minimum covering code by branch and bound");
  solve->add_option("--q", sa.q, "Alphabet size")->required()->check(CLI::Range(2u, 1u << 16));
  solve->add_option("--n", sa.n, "Word length")->required()->check(CLI::Range(0u, 63u));
  solve->add_option("--R", sa.R, "Covering radius")->required();
  solve->add_option("--time-budget", sa.time_budget, "Seconds")->check(CLI::NonNegativeNumber);
  solve->add_option("--node-budget", sa.node_budget, "Search nodes");
  solve->add_option("--guard", sa.guard, "Largest q^n accepted (default 2^12)");
  solve->add_option("--out", sa.out, "Write the JSON result here instead of stdout");

  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate and compare density bounds");
  bounds_cmd->require_subcommand(1);

  EvalArgs ea;
  auto* eval = bounds_cmd->add_subcommand("eval", "Evaluate every applicable bound at (R, x, y)");
  eval->add_option("--R", ea.R, "Radius")->required()->check(CLI::PositiveNumber);
  eval->add_option("--x", ea.x, "x")->required();
  eval->add_option("--y", ea.y, "y")->required();
  eval->add_option("--R1", ea.R1, "Inner radius for the two-level bound");
  eval->add_option("--mu", ea.mu, "Asymptotic density value for radius R1");
  eval->add_option("--format", ea.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  RangeArgs ta;
  ta.format = "csv";
  auto* table = bounds_cmd->add_subcommand("table", "Optimized and closed-form bounds for a range of R");
  table->add_option("--R-min", ta.R_min, "First R")->required()->check(CLI::PositiveNumber);
  table->add_option("--R-max", ta.R_max, "Last R")->required()->check(CLI::PositiveNumber);
  table->add_option("--format", ta.format, "csv")->check(CLI::IsMember({"csv"}));
  table->add_option("--out", ta.out, "Write the CSV here instead of stdout");

  RangeArgs ka;
  ka.format = "text";
  auto* check = bounds_cmd->add_subcommand("check-corollary", "Check each step of the R >= 6 corollary chain");
  check->add_option("--R-min", ka.R_min, "First R")->required();
  check->add_option("--R-max", ka.R_max, "Last R")->required();
  check->add_option("--format", ka.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*construct) return do_construct(ca, out);
    if (*verify) return do_verify(va, out, err);
    if (*solve) return do_solve(sa, out, err);
    if (*eval) return do_eval(ea, out);
    if (*table) {
      if (ta.R_max < ta.R_min) throw UsageError("bounds table needs R-min <= R-max");
      emit(b::bounds_table_csv(ta.R_min, ta.R_max), ta.out, out);
      return kOk;
    }
    if (*check) return do_check(ka, out);
  } catch (const InfeasibleError& e) {
    err << "infeasible parameters: " << e.what() << "\n";
    return kInfeasible;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConstructionFailure& e) {
    err << "construction failed: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace covering::cli
