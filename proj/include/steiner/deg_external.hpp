#pragma once

#include <vector>

#include "steiner/external_aug.hpp"
#include "steiner/flow.hpp"
#include "steiner/laminar_forest.hpp"

namespace steiner {

// External weight added at vertex while processing one heavy path.
struct DegAssignment {
  int vertex = -1;
  Weight weight = 0;
  int path = -1;
  PathLevel level = PathLevel::kUpper;
};

struct DegExternalResult {
  ExternalSolution solution;
  std::vector<DegAssignment> assignments;  // in processing order
  HeavyPathDecomposition hld;              // two-level decomposition used
  std::vector<int> order;                  // path indices in processing order
  std::vector<Weight> flow_values;         // per path index
  std::vector<Weight> deltas;              // per path index
};

// g plus a (u, x) edge of weight β(u) per vertex reaches Steiner connectivity τ.
bool check_feasibility(const Graph& g, Weight tau, const std::vector<Weight>& beta);

// Δ = rdem(R_k) - Σ rdem(W) over the heavy-path roots W hanging off the path.
Weight path_delta(const LaminarForest& f, const HeavyPath& p);

struct HNetwork {
  FlowNetwork<Weight> net;
  std::vector<int> label;     // vertex -> network node
  std::vector<int> to_y;      // vertex -> arc id of (u, y), or -1
  int source = -1, sink = -1, y = -1;
  Weight delta = 0;
};

// Directed network for one heavy path over the current external weights ext.
// Terminal blocks R_i \ R_{i-1} and the outside of the path head's vertex set
// (together with x) are merged into single nodes.
HNetwork build_H(const Graph& g, const std::vector<Weight>& beta, const std::vector<Weight>& ext,
                 const LaminarForest& f, const HeavyPath& p);

// Runs the flow on H and adds f(u, y) to ext[u]. Returns the flow value.
Weight process_path(const Graph& g, const std::vector<Weight>& beta, std::vector<Weight>& ext,
                    const LaminarForest& f, const HeavyPathDecomposition& hld, int path,
                    std::vector<DegAssignment>* log = nullptr);

// Requires compute_rdem, mark_critical and compute_l2_lhigh on f, and vertex sets
// on every live node. Paths go by (depth desc, head id asc).
DegExternalResult deg_external_augment(const Graph& g, Weight tau, const std::vector<Weight>& beta,
                                       const LaminarForest& f);

}  // namespace steiner
