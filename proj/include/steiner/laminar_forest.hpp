#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

struct ForestNode {
  VertexSet terminals;  // R
  int parent = -1;
  std::vector<int> children;  // live children, ascending id
  Weight cut_value = 0;       // c(R)
  Weight rdem = 0;
  std::optional<CutSide> vertex_set;  // retained supreme vertex set, if known
  bool critical = false;
  bool in_l2 = false;
  bool deleted = false;
};

// Rooted forest over a laminar family of terminal sets. Deletion splices a node
// out (children move to its parent), so ancestry among survivors never changes.
class LaminarForest {
 public:
  LaminarForest() = default;

  // Links nodes by containment of terminal sets. Node ids are assigned in
  // ascending (lowest terminal, -|R|) order, so parents precede children.
  static LaminarForest from_nodes(std::vector<ForestNode> nodes);

  int size() const { return static_cast<int>(nodes_.size()); }
  const ForestNode& node(int id) const { return nodes_.at(id); }
  ForestNode& node(int id) { return nodes_.at(id); }
  const std::vector<ForestNode>& nodes() const { return nodes_; }

  std::vector<int> roots() const;
  std::vector<int> live_nodes() const;
  // Live nodes, children before parents; trees in ascending root id.
  std::vector<int> post_order() const;
  bool is_live(int id) const { return !nodes_.at(id).deleted; }

  void delete_node(int id);

  // Keep only the nodes flagged in keep; the kept set must be closed under
  // taking parents. Dropped nodes are marked deleted without reattachment.
  LaminarForest restricted(const std::vector<char>& keep) const;

  // Throws InvariantViolation if containment or disjointness fails.
  void validate() const;

 private:
  std::vector<ForestNode> nodes_;
};

// Contract nodes with c >= τ into their parents, then fill rdem bottom-up:
// rdem(R) = max(τ - c(R), Σ_children rdem).
void compute_rdem(LaminarForest& f, Weight tau);

// critical: τ - c(R) = rdem(R) > Σ_children rdem. Requires rdem.
void mark_critical(LaminarForest& f, Weight tau);

struct HighLevel {
  std::vector<int> l2;      // critical nodes with no critical ancestor
  std::vector<char> in_high;  // union of the L2-to-root paths, indexed by node id
};

// Sets in_l2 flags. Requires critical flags.
HighLevel compute_l2_lhigh(LaminarForest& f);

enum class PathLevel { kUpper, kLower };

struct HeavyPath {
  std::vector<int> nodes;  // nodes[0] = R_1 (leaf end) ... nodes.back() = R_k (head)
  int depth = 1;           // heavy paths met on the way from this one to its root
  PathLevel level = PathLevel::kUpper;
  int contracted_into = -1;  // lower level only: the L2 node above the path

  int head() const { return nodes.back(); }
  int leaf() const { return nodes.front(); }
};

struct HeavyPathDecomposition {
  std::vector<HeavyPath> paths;
  std::vector<int> path_of;  // node id -> path index, -1 when deleted
};

// Heavy child = largest subtree, ties to the lower id. With stop_at_l2, the
// upper level decomposes L_high (paths end at L2 nodes) and each subtree hanging
// below an L2 node is decomposed separately as the lower level.
HeavyPathDecomposition heavy_light(const LaminarForest& f, bool stop_at_l2 = false);

std::string forest_to_json(const LaminarForest& f);
std::string forest_to_dot(const LaminarForest& f);
std::string forest_to_text(const LaminarForest& f);

}  // namespace steiner
