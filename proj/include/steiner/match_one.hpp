#pragma once

#include <random>
#include <utility>
#include <vector>

#include "steiner/graph.hpp"
#include "steiner/laminar_forest.hpp"

namespace steiner {

using Rng = std::mt19937_64;

struct MatchOptions {
  int retry_cap = 0;  // samples per phase; 0 means 64·⌈log2 n⌉
};

struct MatchStats {
  int phases = 0;
  int samples = 0;
};

// Terminal sets of live roots with c = τ - 1.
std::vector<VertexSet> build_K(const LaminarForest& f, Weight tau);

// g_cur + m + a unit star from an external vertex to each vertex of star
// has Steiner connectivity ≥ τ.
bool is_feasible_partial(const Graph& g_cur, const std::vector<int>& star, const EdgeAdditions& m,
                         Weight tau);

// ⌊k/4⌋ disjoint index pairs of a uniformly shuffled 0..k-1.
std::vector<std::pair<int, int>> sample_phase_matching(int k, Rng& rng);

// Pairs an even number of groups, each represented by one vertex of rep, in
// random phases checked against the star certificate. Returns index pairs.
std::vector<std::pair<int, int>> match_groups(Graph g_cur, const std::vector<int>& rep, Weight tau,
                                              Rng& rng, const MatchOptions& opt = {},
                                              MatchStats* stats = nullptr);

// Raises Steiner connectivity from τ-1 to τ with ⌈|K|/2⌉ unit edges joining the
// lowest terminal of each group.
EdgeAdditions augment_by_one(const Graph& g, const std::vector<VertexSet>& k, Weight tau, Rng& rng,
                             const MatchOptions& opt = {}, MatchStats* stats = nullptr);

int default_retry_cap(int n);

}  // namespace steiner
