#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "covering/code.hpp"
#include "covering/hamming.hpp"

namespace covering {

using Vertex = Index;

/// A d-regular graph on vertices 0..m-1, given by a neighbor enumerator.
/// Adjacency is symmetric and irreflexive.
class RegularGraphView {
 public:
  using Sink = std::function<void(Vertex)>;
  using NeighborFn = std::function<void(Vertex, const Sink&)>;

  RegularGraphView(Index m, Index d, NeighborFn neighbors);

  Index m() const noexcept { return m_; }
  Index d() const noexcept { return d_; }

  void for_each_neighbor(Vertex v, const Sink& sink) const { neighbors_(v, sink); }
  std::vector<Vertex> neighbors(Vertex v) const;

 private:
  Index m_;
  Index d_;
  NeighborFn neighbors_;
};

/// [q]^n with edges between distinct words at distance <= R. d = V_q(n,R) - 1.
RegularGraphView hamming_graph_view(const HammingSpace& space, unsigned radius,
                                    Index guard = kDefaultEnumerationGuard);

RegularGraphView complete_graph(Index m);
RegularGraphView empty_graph(Index m);

/// Throws UsageError unless the lists describe a regular, symmetric,
/// loop-free graph.
RegularGraphView graph_from_adjacency(std::vector<std::vector<Vertex>> adjacency);

/// X, the undominated remainder N_bar = V \ (X u N(X)), and how X was found.
struct DominationResult {
  std::vector<Vertex> X;
  std::vector<Vertex> N_bar;
  double x_used = 0.0;
  std::uint64_t trials_used = 0;
  bool greedy = false;
};

/// Thrown when no trial meets the |N_bar| threshold; carries the best attempt.
class DominationFailure : public std::runtime_error {
 public:
  DominationFailure(const std::string& what, DominationResult best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const DominationResult& best() const noexcept { return best_; }

 private:
  DominationResult best_;
};

/// floor(x m / (d+1)), capped at m.
std::uint64_t domination_size_budget(const RegularGraphView& g, double x);

/// ceil(e^{-x + (d+1)/m} m).
std::uint64_t undominated_threshold(const RegularGraphView& g, double x);

/// Sorted V \ (X u N(X)).
std::vector<Vertex> undominated(const RegularGraphView& g, std::span<const Vertex> X);

/// Random partial dominating set: each trial draws a uniform subset of
/// domination_size_budget(g, x) vertices (trial t uses its own generator
/// derived from (seed, t)); the first trial whose remainder is within
/// undominated_threshold(g, x) is returned.
DominationResult dominating_partial(const RegularGraphView& g, double x, std::uint64_t seed,
                                    std::uint64_t max_trials = 100);

/// Picks, size_budget times, the vertex whose closed neighborhood holds the
/// most undominated vertices (smallest id on ties). Stops early once
/// everything is dominated.
DominationResult greedy_dominating_partial(const RegularGraphView& g, std::uint64_t size_budget);

/// Greedy ball cover of the whole space: a covering code of radius R.
Code greedy_covering_code(const HammingSpace& space, unsigned radius, Index guard = kDefaultEnumerationGuard);

}  // namespace covering
