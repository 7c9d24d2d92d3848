#include "covering/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "covering/random.hpp"

namespace covering {

RegularGraphView::RegularGraphView(Index m, Index d, NeighborFn neighbors)
    : m_(m), d_(d), neighbors_(std::move(neighbors)) {
  if (m > 0 && d >= m) throw UsageError("degree must be below the vertex count");
}

std::vector<Vertex> RegularGraphView::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(d_);
  for_each_neighbor(v, [&](Vertex u) { out.push_back(u); });
  return out;
}

RegularGraphView hamming_graph_view(const HammingSpace& space, unsigned radius, Index guard) {
  const Index m = space.checked_size(guard);
  const Index d = ball_volume(space, radius).convert_to<Index>() - 1;
  auto weights = radix_weights(space);
  return RegularGraphView(m, d, [space, radius, weights = std::move(weights)](Vertex v, const RegularGraphView::Sink& sink) {
    for_each_in_ball_index(space, weights, v, radius, [&](Index u) {
      if (u != v) sink(u);
    });
  });
}

RegularGraphView complete_graph(Index m) {
  return RegularGraphView(m, m == 0 ? 0 : m - 1, [m](Vertex v, const RegularGraphView::Sink& sink) {
    for (Vertex u = 0; u < m; ++u)
      if (u != v) sink(u);
  });
}

RegularGraphView empty_graph(Index m) {
  return RegularGraphView(m, 0, [](Vertex, const RegularGraphView::Sink&) {});
}

RegularGraphView graph_from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  const Index m = adjacency.size();
  const Index d = m == 0 ? 0 : adjacency.front().size();
  for (Vertex v = 0; v < m; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    if (list.size() != d) throw UsageError("graph is not regular");
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) throw UsageError("repeated edge");
    for (Vertex u : list) {
      if (u >= m || u == v) throw UsageError("edge endpoint out of range or self-loop");
    }
  }
  for (Vertex v = 0; v < m; ++v) {
    for (Vertex u : adjacency[v]) {
      if (!std::binary_search(adjacency[u].begin(), adjacency[u].end(), v)) throw UsageError("graph is not symmetric");
    }
  }
  return RegularGraphView(m, d, [adj = std::move(adjacency)](Vertex v, const RegularGraphView::Sink& sink) {
    for (Vertex u : adj[v]) sink(u);
  });
}

std::uint64_t domination_size_budget(const RegularGraphView& g, double x) {
  const long double s = std::floor(static_cast<long double>(x) * g.m() / (g.d() + 1));
  if (s >= static_cast<long double>(g.m())) return g.m();
  return static_cast<std::uint64_t>(s);
}

std::uint64_t undominated_threshold(const RegularGraphView& g, double x) {
  if (g.m() == 0) return 0;
  const long double m = g.m();
  const long double t = std::ceil(std::exp(-static_cast<long double>(x) + (g.d() + 1) / m) * m);
  return static_cast<std::uint64_t>(t);
}

std::vector<Vertex> undominated(const RegularGraphView& g, std::span<const Vertex> X) {
  std::vector<char> dominated(g.m(), 0);
  for (Vertex v : X) {
    dominated[v] = 1;
    g.for_each_neighbor(v, [&](Vertex u) { dominated[u] = 1; });
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.m(); ++v)
    if (!dominated[v]) out.push_back(v);
  return out;
}

DominationResult dominating_partial(const RegularGraphView& g, double x, std::uint64_t seed, std::uint64_t max_trials) {
  if (!(x > 0.0)) throw UsageError("dominating_partial requires x > 0");
  if (max_trials == 0) throw UsageError("dominating_partial requires at least one trial");
  const std::uint64_t size = domination_size_budget(g, x);
  const std::uint64_t threshold = undominated_threshold(g, x);
  if (size == 0 && threshold < g.m()) {
    throw UsageError("x m/(d+1) < 1 leaves X empty, yet the threshold demands domination");
  }

  std::vector<Vertex> pool(g.m());
  DominationResult best;
  best.x_used = x;
  bool have_best = false;
  for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
    Rng rng = derived_rng(seed, trial);
    std::iota(pool.begin(), pool.end(), Vertex{0});
    for (std::uint64_t i = 0; i < size; ++i) {
      std::swap(pool[i], pool[i + uniform_below(rng, g.m() - i)]);
    }
    std::vector<Vertex> X(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(X.begin(), X.end());
    std::vector<Vertex> rest = undominated(g, X);
    if (!have_best || rest.size() < best.N_bar.size()) {
      best.X = std::move(X);
      best.N_bar = std::move(rest);
      have_best = true;
    }
    best.trials_used = trial + 1;
    if (best.N_bar.size() <= threshold) return best;
  }
  throw DominationFailure("no trial out of " + std::to_string(max_trials) + " left at most " +
                              std::to_string(threshold) + " vertices undominated (best: " +
                              std::to_string(best.N_bar.size()) + ")",
                          std::move(best));
}

DominationResult greedy_dominating_partial(const RegularGraphView& g, std::uint64_t size_budget) {
  const Index m = g.m();
  // gain[v] = number of undominated vertices in v's closed neighborhood
  std::vector<std::uint64_t> gain(m, g.d() + 1);
  std::vector<char> dominated(m, 0);
  std::uint64_t remaining = m;

  DominationResult result;
  result.greedy = true;
  auto mark = [&](Vertex u) {
    if (dominated[u]) return;
    dominated[u] = 1;
    --remaining;
    --gain[u];
    g.for_each_neighbor(u, [&](Vertex w) { --gain[w]; });
  };
  for (std::uint64_t step = 0; step < size_budget && remaining > 0; ++step) {
    const Vertex pick = static_cast<Vertex>(std::max_element(gain.begin(), gain.end()) - gain.begin());
    result.X.push_back(pick);
    mark(pick);
    g.for_each_neighbor(pick, mark);
  }
  std::sort(result.X.begin(), result.X.end());
  for (Vertex v = 0; v < m; ++v)
    if (!dominated[v]) result.N_bar.push_back(v);
  return result;
}

Code greedy_covering_code(const HammingSpace& space, unsigned radius, Index guard) {
  const RegularGraphView g = hamming_graph_view(space, radius, guard);
  DominationResult r = greedy_dominating_partial(g, g.m());
  return Code::from_indices(space, std::move(r.X));
}

}  // namespace covering
