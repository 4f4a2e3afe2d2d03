#pragma once

#include <vector>

#include "steiner/match_one.hpp"

namespace steiner {

enum class SurrogateCheck {
  kTerminal,   // certificate star and matching drawn on each group's lowest terminal
  kSurrogate,  // both drawn on the surrogates
};

struct Surrogates {
  std::vector<CutSide> mu;      // minimal isolating cut per group
  std::vector<int> vertex;      // lowest-id vertex of mu with budget
};

// Groups must be disjoint terminal sets; the remaining terminals form one more
// part of the isolating cuts.
Surrogates find_surrogates(const Graph& g, const std::vector<VertexSet>& groups,
                           const std::vector<Weight>& beta);

struct DegMatchResult {
  EdgeAdditions edges;
  Surrogates surrogates;
};

// Steiner connectivity τ-1 → τ with unit edges between vertices of budget β.
DegMatchResult deg_augment_by_one(const Graph& g, Weight tau, const std::vector<Weight>& beta,
                                  const std::vector<VertexSet>& groups, Rng& rng,
                                  SurrogateCheck check = SurrogateCheck::kTerminal,
                                  const MatchOptions& opt = {}, MatchStats* stats = nullptr);

}  // namespace steiner
