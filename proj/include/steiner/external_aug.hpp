#pragma once

#include <vector>

#include "steiner/graph.hpp"
#include "steiner/laminar_forest.hpp"

namespace steiner {

// Weights of edges (u, x) toward an external vertex x. Doubles as a degree budget β.
struct ExternalSolution {
  std::vector<Weight> beta;
  Weight total() const {
    Weight s = 0;
    for (Weight b : beta) s += b;
    return s;
  }
};

// Post-order pass adding rdem(R) - Σ_children rdem to the lowest terminal of R.
// Requires compute_rdem on f. n is the vertex count of the underlying graph.
ExternalSolution external_augment(const LaminarForest& f, Weight tau, int n);

// Adds one unit to the lowest-id supported vertex when the total is odd.
ExternalSolution make_even(ExternalSolution sol);

// ⌈k/2⌉.
Weight augmentation_lower_bound(const ExternalSolution& sol);

}  // namespace steiner
