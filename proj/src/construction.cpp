#include "covering/construction.hpp"

#include <cmath>
#include <numeric>

#include "covering/random.hpp"

namespace covering {

Code direct_sum(const Code& a, const Code& b) {
  if (a.space().q() != b.space().q()) throw UsageError("direct_sum: alphabet sizes differ");
  std::vector<Word> out;
  out.reserve(a.size() * b.size());
  for (const Word& u : a.words())
    for (const Word& v : b.words()) out.push_back(u.concat(v));
  return Code(HammingSpace(a.space().q(), a.space().n() + b.space().n()), std::move(out));
}

std::string to_string(BasePolicy p) {
  switch (p) {
    case BasePolicy::automatic: return "auto";
    case BasePolicy::trivial: return "trivial";
    case BasePolicy::exact: return "exact";
    case BasePolicy::greedy: return "greedy";
  }
  return "auto";
}

BasePolicy parse_base_policy(const std::string& text) {
  if (text == "auto") return BasePolicy::automatic;
  if (text == "trivial") return BasePolicy::trivial;
  if (text == "exact") return BasePolicy::exact;
  if (text == "greedy") return BasePolicy::greedy;
  throw UsageError("unknown base policy \"" + text + "\" (expected auto|trivial|exact|greedy)");
}

namespace {

class Builder {
 public:
  Builder(unsigned radius, double x, double y, const ConstructionOptions& options, ConstructionTrace& trace)
      : radius_(radius), x_(x), y_(y), options_(options), trace_(trace) {}

  /// Sorted indices of a covering code of [q]^n.
  std::vector<Index> build(const HammingSpace& space) {
    const unsigned n = space.n();
    if (n <= radius_) {
      trace_.levels.push_back({.n = n, .level_size = 1, .method = "zero-word", .optimal = true});
      return {0};
    }
    const auto r = static_cast<unsigned>(std::floor(n / y_));
    if (r == 0 || r >= n) return base(space);

    const unsigned r_prime = n - r;
    const HammingSpace head(space.q(), r_prime);
    const RegularGraphView graph = hamming_graph_view(head, radius_, options_.graph_guard);

    TraceLevel level{.split = true, .n = n, .r = r, .r_prime = r_prime};
    level.x_budget = domination_size_budget(graph, x_);
    level.n_bar_threshold = undominated_threshold(graph, x_);
    const std::uint64_t level_seed = splitmix(options_.seed, n);

    DominationResult dom;
    try {
      dom = dominating_partial(graph, x_, level_seed, options_.max_trials);
      level.method = "random";
    } catch (const DominationFailure&) {
      dom = greedy_dominating_partial(graph, level.x_budget);
      level.method = "greedy";
      if (dom.N_bar.size() > level.n_bar_threshold) {
        trace_.levels.push_back(level);
        throw ConstructionFailure("level n=" + std::to_string(n) + ": undominated set of size " +
                                      std::to_string(dom.N_bar.size()) + " exceeds threshold " +
                                      std::to_string(level.n_bar_threshold) + " after random and greedy attempts",
                                  trace_);
      }
    }
    level.trials = dom.trials_used;
    level.x_size = dom.X.size();
    level.n_bar_size = dom.N_bar.size();

    const std::size_t slot = trace_.levels.size();
    trace_.levels.push_back(level);

    const HammingSpace tail(space.q(), r);
    const std::vector<Index> k2 = build(tail);
    const Index tail_size = tail.checked_size(~Index{0} >> 1);

    // X (+) [q]^r and N_bar (+) K2 differ in the first block, so they are disjoint.
    std::vector<Index> out;
    out.reserve(dom.X.size() * tail_size + dom.N_bar.size() * k2.size());
    for (Vertex h : dom.X)
      for (Index t = 0; t < tail_size; ++t) out.push_back(h * tail_size + t);
    for (Vertex h : dom.N_bar)
      for (Index t : k2) out.push_back(h * tail_size + t);
    std::sort(out.begin(), out.end());

    trace_.levels[slot].k2_size = k2.size();
    trace_.levels[slot].level_size = out.size();
    return out;
  }

 private:
  static std::uint64_t splitmix(std::uint64_t seed, std::uint64_t n) { return splitmix64(seed ^ splitmix64(n)); }

  std::vector<Index> base(const HammingSpace& space) {
    TraceLevel level{.n = space.n()};
    BasePolicy policy = options_.base_policy;
    if (policy == BasePolicy::automatic) {
      policy = space.size() <= options_.exact_guard ? BasePolicy::exact : BasePolicy::greedy;
    }
    std::vector<Index> out;
    switch (policy) {
      case BasePolicy::trivial: {
        const Index total = space.checked_size(options_.graph_guard);
        out.resize(total);
        std::iota(out.begin(), out.end(), Index{0});
        level.method = "whole-space";
        break;
      }
      case BasePolicy::exact: {
        SolveResult solved = minimal_covering_code(space, radius_, options_.exact_budget, options_.exact_guard);
        out = solved.code.indices();
        level.method = "exact";
        level.optimal = solved.status == SolveStatus::optimal;
        break;
      }
      default:
        out = greedy_covering_code(space, radius_, options_.graph_guard).indices();
        level.method = "greedy";
        break;
    }
    level.level_size = out.size();
    trace_.levels.push_back(level);
    return out;
  }

  unsigned radius_;
  double x_;
  double y_;
  const ConstructionOptions& options_;
  ConstructionTrace& trace_;
};

}  // namespace

ConstructionResult ksv_construct(const HammingSpace& space, unsigned radius, double x, double y,
                                 const ConstructionOptions& options) {
  if (space.n() < 1) throw UsageError("ksv_construct requires n >= 1");
  if (!(y > 1.0)) throw InfeasibleError("requires y > 1");
  if (!(x > radius * std::log(y))) throw InfeasibleError("requires x > R*ln(y) (e^-x y^R < 1)");
  if (!space.indexable()) throw GuardError("space too large to index words with 64 bits");

  ConstructionTrace trace{.q = space.q(), .radius = radius, .x = x, .y = y, .seed = options.seed,
                          .base_policy = options.base_policy};
  Builder builder(radius, x, y, options, trace);
  std::vector<Index> indices = builder.build(space);

  ConstructionResult result{Code::from_indices(space, std::move(indices)), std::move(trace)};
  result.trace.total_size = result.code.size();
  result.trace.density = density(result.code, radius);
  return result;
}

}  // namespace covering
