#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steiner/external_aug.hpp"
#include "steiner/graph.hpp"
#include "steiner/laminar_forest.hpp"

namespace steiner {

inline constexpr int kDefaultOracleLimit = 12;
inline constexpr int kHardOracleLimit = 16;

struct ExtremeSet {
  CutSide members;
  Weight value = 0;
};

struct ExtremeFamily {
  std::vector<ExtremeSet> sets;  // ascending by bitmask of members
};

// d(X) for every X ⊆ V, indexed by bitmask.
std::vector<Weight> all_cut_values(const Graph& g, int limit = kDefaultOracleLimit);

ExtremeFamily extreme_sets_bruteforce(const Graph& g, int limit = kDefaultOracleLimit);

// μ(R) for every projection R of an extreme set, as a forest with vertex sets.
LaminarForest supreme_sets_bruteforce(const Graph& g, int limit = kDefaultOracleLimit);

// Σ rdem over roots of the exact forest.
Weight optimal_external_value(const Graph& g, Weight tau, int limit = kDefaultOracleLimit);

// ⌈optimal_external_value / 2⌉. With cross_check (n ≤ 6) the value is confirmed
// by exhaustive search and InvariantViolation is thrown on disagreement.
Weight optimal_augmentation_value(const Graph& g, Weight tau, bool cross_check = false,
                                  int limit = kDefaultOracleLimit);

// Smallest total weight of added vertex pairs reaching connectivity τ, searching
// all multisets of weight ≤ max_weight. nullopt if none is found. n ≤ 7.
std::optional<Weight> exhaustive_augmentation_value(const Graph& g, Weight tau, Weight max_weight);

// λ(A, B) by enumeration.
Weight min_cut_bruteforce(const Graph& g, const VertexSet& a, const VertexSet& b,
                          int limit = kDefaultOracleLimit);

// Saturate every vertex, then per vertex in ascending id keep only the largest
// violation left after removing its edges to x.
ExternalSolution frank_greedy_external(const Graph& g, Weight tau);

struct Verdict {
  bool ok = false;
  Weight connectivity = 0;
  std::string reason;
  std::optional<CutSide> witness_cut;
  std::optional<int> witness_vertex;
};

Verdict verify_solution(const Graph& g, Weight tau, const EdgeAdditions& f,
                        const std::optional<std::vector<Weight>>& beta = std::nullopt);

}  // namespace steiner
