#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "covering/graph.hpp"
#include "oracles.hpp"

using namespace covering;

namespace {

/// V \ (X u N(X)) on the distance-R graph of [q]^n, straight from distances.
std::vector<Vertex> oracle_undominated(unsigned q, unsigned n, unsigned R, const std::vector<Vertex>& X) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < oracle::power(q, n); ++v) {
    bool hit = false;
    for (Vertex u : X) hit = hit || oracle::distance(u, v, q, n) <= R;
    if (!hit) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("hamming_graph_view sizes") {
  const auto g = hamming_graph_view(HammingSpace(2, 3), 1);
  CHECK(g.m() == 8);
  CHECK(g.d() == 3);
  const auto k4 = hamming_graph_view(HammingSpace(2, 2), 2);
  CHECK(k4.m() == 4);
  CHECK(k4.d() == 3);
  CHECK(hamming_graph_view(HammingSpace(3, 4), 0).d() == 0);
  CHECK_THROWS_AS(hamming_graph_view(HammingSpace(2, 27), 1), GuardError);
}

TEST_CASE("hamming graphs are regular, symmetric and loop-free") {
  for (auto [q, n, R] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 5, 1}, {3, 3, 2}, {4, 3, 1}}) {
    const auto g = hamming_graph_view(HammingSpace(q, n), R);
    std::vector<std::set<Vertex>> adj(g.m());
    for (Vertex v = 0; v < g.m(); ++v) {
      const auto nb = g.neighbors(v);
      adj[v] = {nb.begin(), nb.end()};
      CHECK(nb.size() == g.d());
      CHECK(adj[v].size() == nb.size());
      CHECK_FALSE(adj[v].count(v));
      for (Vertex u : nb) CHECK(oracle::distance(u, v, q, n) <= R);
    }
    for (Vertex v = 0; v < g.m(); ++v)
      for (Vertex u : adj[v]) CHECK(adj[u].count(v));
  }
}

TEST_CASE("graph_from_adjacency validates its input") {
  const auto cycle = graph_from_adjacency({{1, 3}, {0, 2}, {1, 3}, {2, 0}});
  CHECK(cycle.d() == 2);
  CHECK_THROWS_AS(graph_from_adjacency({{1}, {0, 2}, {1}}), UsageError);
  CHECK_THROWS_AS(graph_from_adjacency({{1}, {2}, {0}}), UsageError);
  CHECK_THROWS_AS(graph_from_adjacency({{0}, {1}}), UsageError);
}

TEST_CASE("dominating_partial on a complete graph picks one vertex") {
  const auto g = complete_graph(10);
  const DominationResult r = dominating_partial(g, 1.5, 4);
  CHECK(r.X.size() == 1);
  CHECK(r.N_bar.empty());
  CHECK(undominated_threshold(g, 1.5) == static_cast<std::uint64_t>(std::ceil(std::exp(-0.5) * 10)));
}

TEST_CASE("dominating_partial on an empty graph meets its vacuous threshold") {
  const auto g = empty_graph(100);
  CHECK(domination_size_budget(g, 0.01) == 1);
  CHECK(undominated_threshold(g, 0.01) == 100);
  const DominationResult r = dominating_partial(g, 0.01, 0);
  CHECK(r.X.size() <= 1);
  CHECK(r.N_bar.size() == 99);
  CHECK(r.trials_used == 1);
}

TEST_CASE("dominating_partial on the 8-cube with radius 1") {
  const auto g = hamming_graph_view(HammingSpace(2, 8), 1);
  CHECK(domination_size_budget(g, 3.0) == 85);
  CHECK(undominated_threshold(g, 3.0) == 14);  // ceil(e^{-3 + 9/256} 256) = ceil(13.2)
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DominationResult r = dominating_partial(g, 3.0, seed);
    CHECK(r.X.size() <= 85);
    CHECK(r.N_bar.size() <= 14);
    CHECK(r.N_bar == oracle_undominated(2, 8, 1, r.X));
  }
}

TEST_CASE("dominating_partial is deterministic per seed") {
  const auto g = hamming_graph_view(HammingSpace(3, 5), 1);
  const DominationResult a = dominating_partial(g, 2.0, 17);
  const DominationResult b = dominating_partial(g, 2.0, 17);
  CHECK(a.X == b.X);
  CHECK(a.N_bar == b.N_bar);
  CHECK(a.trials_used == b.trials_used);
  CHECK(dominating_partial(g, 2.0, 18).X != a.X);
}

TEST_CASE("dominating_partial failure carries the best attempt") {
  const auto g = hamming_graph_view(HammingSpace(2, 8), 1);
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    try {
      dominating_partial(g, 3.0, seed, 1);
    } catch (const DominationFailure& e) {
      ++failures;
      CHECK(e.best().N_bar.size() > undominated_threshold(g, 3.0));
      CHECK(e.best().N_bar == oracle_undominated(2, 8, 1, e.best().X));
      CHECK(e.best().trials_used == 1);
    }
  }
  CHECK(failures > 0);
  CHECK(failures < 200);
  CHECK_THROWS_AS(dominating_partial(g, 0.0, 1), UsageError);
  CHECK_THROWS_AS(dominating_partial(g, 1.0, 1, 0), UsageError);
}

TEST_CASE("greedy_dominating_partial examples") {
  const auto complete = complete_graph(7);
  CHECK(greedy_dominating_partial(complete, 1).N_bar.empty());
  const auto empty = empty_graph(30);
  const DominationResult e = greedy_dominating_partial(empty, 4);
  CHECK(e.N_bar.size() == 26);
  CHECK(e.X == std::vector<Vertex>{0, 1, 2, 3});
  const auto cube = hamming_graph_view(HammingSpace(2, 4), 1);
  const DominationResult c = greedy_dominating_partial(cube, 4);
  CHECK(c.X.size() == 4);
  CHECK(c.N_bar.empty());
  CHECK(c.N_bar == oracle_undominated(2, 4, 1, c.X));
}

TEST_CASE("greedy leaves no more undominated vertices than the best random trial") {
  std::mt19937_64 rng(2024);
  int instances = 0;
  while (instances < 24) {
    const unsigned q = 2 + rng() % 2;
    const unsigned n = 3 + rng() % (q == 2 ? 8 : 5);
    const unsigned R = 1 + rng() % 2;
    const double x = 1.0 + (rng() % 400) / 100.0;
    const auto g = hamming_graph_view(HammingSpace(q, n), R);
    const std::uint64_t budget = domination_size_budget(g, x);
    std::size_t best_random = g.m();
    try {
      best_random = dominating_partial(g, x, rng(), 100).N_bar.size();
    } catch (const DominationFailure& f) {
      best_random = f.best().N_bar.size();
    }
    const DominationResult greedy = greedy_dominating_partial(g, budget);
    CHECK(greedy.X.size() <= budget);
    CHECK(greedy.N_bar.size() <= best_random);
    CHECK(greedy.N_bar == undominated(g, greedy.X));
    ++instances;
  }
}

TEST_CASE("greedy_covering_code covers") {
  for (auto [q, n, R] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 6, 1}, {3, 4, 1}, {2, 9, 2}}) {
    const Code c = greedy_covering_code(HammingSpace(q, n), R);
    CHECK(verify_covering(c, R).ok());
  }
}
