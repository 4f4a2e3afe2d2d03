#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steiner/deg_match_one.hpp"
#include "steiner/supreme_sets.hpp"

namespace steiner {

struct PipelineOptions {
  std::uint64_t seed = 1;
  SupremeOptions supreme;
  MatchOptions match;
  SurrogateCheck check = SurrogateCheck::kTerminal;
};

struct AugmentReport {
  Weight tau = 0;
  Weight initial_connectivity = 0;
  Weight external_value = 0;  // k
  Weight lower_bound = 0;     // ⌈k/2⌉
  Weight chain_weight = 0;
  Weight match_weight = 0;
  Weight total = 0;
  std::uint64_t flow_calls = 0;
  int chain_events = 0;
  int chain_edge_updates = 0;
  SupremeStats supreme;
};

struct AugmentResult {
  EdgeAdditions edges;
  AugmentReport report;
};

// Minimum-weight edge set raising the Steiner connectivity of g to τ.
AugmentResult augment_pipeline(const Graph& g, Weight tau, const PipelineOptions& opt = {});

struct SplitoffReport {
  Weight tau = 0;         // Steiner connectivity with x present
  Weight degree = 0;      // d(x)
  Weight external_value = 0;
  Weight chain_weight = 0;
  Weight match_weight = 0;
  Weight completion_weight = 0;
  Weight total = 0;
  std::uint64_t flow_calls = 0;
  int chain_events = 0;
};

struct SplitoffResult {
  EdgeAdditions edges;  // on the vertex ids of the input graph
  SplitoffReport report;
};

// Checks the splitting preconditions at x; throws InvalidInput with a diagnostic.
void check_splittable(const Graph& g, int x);

// Replaces every edge at x by d(x)/2 edges among its neighbours while keeping
// the Steiner connectivity.
SplitoffResult splitoff_pipeline(const Graph& g_with_x, int x, const PipelineOptions& opt = {});

// Pairs the budget units of beta into edges added to f so that every unit is used.
// Edges of f may be subdivided through a vertex to absorb its excess.
void complete_pairing(EdgeAdditions& f, std::vector<Weight> beta);

std::string report_to_json(const AugmentReport& r);
std::string report_to_json(const SplitoffReport& r);

}  // namespace steiner
