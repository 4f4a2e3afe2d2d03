#pragma once

#include <vector>

#include "steiner/aug_chains.hpp"
#include "steiner/deg_external.hpp"

namespace steiner {

struct DegChainSetup {
  LaminarForest forest;                 // L_high
  std::vector<char> protected_nodes;    // L2 nodes
  std::vector<VacancyBucket> buckets;   // lower level first, then (path depth, vertex)
};

// Representative leaf of an assignment: the path leaf on the upper level, the
// L2 node the path hangs from on the lower level.
int representative_leaf(const HeavyPathDecomposition& hld, const DegAssignment& a);

// f carries rdem, critical and L2 flags; ext is its degree-constrained external solution.
DegChainSetup init_state(const LaminarForest& f, const DegExternalResult& ext);

ChainScheduler deg_scheduler(const Graph& g, const LaminarForest& f, const DegExternalResult& ext,
                             Weight tau);

// Chains over L_high until every root has c ≥ τ - 1. remaining holds the
// unused external weight per vertex.
ChainOutcome split_off_chains(const Graph& g, const LaminarForest& f, const DegExternalResult& ext,
                              Weight tau, const ChainObserver& observer = nullptr);

}  // namespace steiner
