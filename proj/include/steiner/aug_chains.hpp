#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "steiner/graph.hpp"
#include "steiner/laminar_forest.hpp"
#include "steiner/path_sum_tree.hpp"

namespace steiner {

inline constexpr Weight kNever = Weight{1} << 62;

// Remaining external degree of one vertex, charged to one representative leaf.
struct VacancyBucket {
  int vertex = -1;
  int leaf = -1;
  Weight remaining = 0;
};

struct ChainEndpoint {
  int vertex = -1;
  int bucket = -1;
  int leaf = -1;
  friend bool operator==(const ChainEndpoint&, const ChainEndpoint&) = default;
};

// Roots X_1..X_r; edge i joins out[i] (a_i in X_i) to in[i+1] (b_{i+1} in X_{i+1}).
struct AugChain {
  std::vector<int> roots;
  std::vector<ChainEndpoint> in, out;  // in[0] and out[r-1] unused

  int size() const { return static_cast<int>(roots.size()); }
  std::vector<ChainEndpoint> endpoints() const;
  std::vector<std::pair<ChainEndpoint, ChainEndpoint>> edges() const;
};

struct Expiration {
  Weight t1 = kNever;  // a bucket runs dry
  Weight t2 = kNever;  // a root reaches demand 1
  Weight t3 = kNever;  // a root stops being extreme
  Weight t() const { return std::min({t1, t2, t3}); }
};

class ChainScheduler;

struct ChainEvent {
  const AugChain& chain;
  Expiration expiration;
  Weight applied;
  int changed_edges;
  const ChainScheduler& state;
};

using ChainObserver = std::function<void(const ChainEvent&)>;

// Repeatedly adds weighted augmentation chains over the live roots of demand
// ≥ 2. Node values c live in a PathSumTree over the forest shape at
// construction; endpoint leaves are updated up to their root.
class ChainScheduler {
 public:
  // buckets are listed in consumption priority. Protected nodes are never deleted.
  ChainScheduler(LaminarForest forest, std::vector<char> protected_nodes,
                 std::vector<VacancyBucket> buckets, Weight tau, int vertex_count);

  std::optional<AugChain> build_chain() const;
  Expiration expiration(const AugChain& chain) const;
  // Adds t copies, then deletes nodes R with c(R) ≥ c(W) for a child W until stable.
  void apply(const AugChain& chain, Weight t);
  // Chain for the next batch, patched from the expired one where possible.
  std::optional<AugChain> patch(const AugChain& old, int* changed_edges) const;
  void run(const ChainObserver& observer = nullptr);

  Weight tau() const { return tau_; }
  Weight c(int node) const { return tree_.value(node); }
  Weight initial_c(int node) const { return initial_c_[node]; }
  bool is_ancestor(int a, int b) const { return tree_.is_ancestor(a, b); }
  const LaminarForest& forest() const { return forest_; }
  const std::vector<VacancyBucket>& buckets() const { return buckets_; }
  const EdgeAdditions& output() const { return output_; }
  // (leaf, copies) for every endpoint ever applied.
  const std::vector<std::pair<int, Weight>>& applied() const { return applied_; }
  std::vector<int> q_roots() const;
  std::vector<Weight> remaining_by_vertex() const;
  int events() const { return events_; }
  int edge_updates() const { return edge_updates_; }
  // Forest with current c stored in cut_value.
  LaminarForest snapshot() const;
  // Whether the chain still satisfies the augmentation-chain conditions.
  bool chain_valid(const AugChain& chain) const;

 private:
  bool select(int root, bool need_in, bool need_out, ChainEndpoint& in, ChainEndpoint& out) const;
  bool ends_minimal(const std::vector<int>& roots) const;
  std::vector<int> order_roots(std::vector<int> q) const;
  void cascade_deletions();

  LaminarForest forest_;
  std::vector<char> protected_;
  std::vector<VacancyBucket> buckets_;
  Weight tau_;
  int n_;
  PathSumTree tree_;
  std::vector<Weight> initial_c_;
  EdgeAdditions output_;
  std::vector<std::pair<int, Weight>> applied_;
  int events_ = 0;
  int edge_updates_ = 0;
};

struct ChainOutcome {
  EdgeAdditions edges;
  LaminarForest forest;           // live nodes carry the final c values
  std::vector<Weight> remaining;  // unused budget per vertex
  int events = 0;
  int edge_updates = 0;
};

// Lowest live node whose terminal set holds v, or -1.
int lowest_node_containing(const LaminarForest& f, int v);

// Scheduler for the unconstrained problem: one bucket per terminal with β > 0, at
// the lowest node holding it, in ascending vertex order.
ChainScheduler unconstrained_scheduler(const Graph& g, const LaminarForest& forest,
                                       const std::vector<Weight>& beta, Weight tau);

// Unconstrained chains: endpoints are terminals carrying budget β (lowest id first).
// Requires compute_rdem on forest.
ChainOutcome run_chains(const Graph& g, const LaminarForest& forest, const std::vector<Weight>& beta,
                        Weight tau, const ChainObserver& observer = nullptr);

}  // namespace steiner
