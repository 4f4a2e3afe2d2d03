#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "steiner/graph.hpp"
#include "steiner/laminar_forest.hpp"

namespace steiner {

// w̃(e) = m·N·w(e) + r(e) with r(e) uniform in 1..N and N > Σw.
struct PerturbedGraph {
  Graph base;
  WideGraph wide;
  WideWeight scale = 0;  // m·N
  WideWeight n_bound = 0;  // N
  std::vector<WideWeight> offsets;  // r(e), aligned with base.edges()
};

PerturbedGraph perturb(const Graph& g, std::uint64_t seed);

struct SupremeOptions {
  int base_case = 8;  // |T| at or below which all bipartitions are cut directly
  int retry_cap = 0;  // resamples per split; 0 means 64·⌈log2 n⌉
  int reseeds = 4;    // fresh perturbations tried by supreme_forest
};

struct SupremeStats {
  int max_depth = 0;
  int resamples = 0;
  int subproblems = 0;
  std::vector<long long> layer_vertices;  // total subproblem size per recursion depth
};

// Laminar family of vertex sets containing every supreme set of the perturbed graph.
std::vector<CutSide> find_supreme_candidates(const PerturbedGraph& pg, std::uint64_t seed,
                                             const SupremeOptions& opt = {},
                                             SupremeStats* stats = nullptr);

// Three post-order traversals over the candidate forest.
LaminarForest postprocess(const std::vector<CutSide>& candidates, const PerturbedGraph& pg);

LaminarForest supreme_forest(const Graph& g, std::uint64_t seed, const SupremeOptions& opt = {},
                             SupremeStats* stats = nullptr);

// Cut values of the sets of a laminar vertex family, each edge attached along the
// forest path between the lowest sets holding its endpoints.
template <class W>
std::vector<W> laminar_cut_values(const BasicGraph<W>& g, const std::vector<CutSide>& sets);

}  // namespace steiner
