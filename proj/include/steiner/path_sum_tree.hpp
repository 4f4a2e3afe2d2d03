#pragma once

#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

// Values on a static forest with path updates. Nodes from different trees hang
// under a virtual root, so a path between trees covers both full root paths.
// Dead nodes keep receiving updates but may not be used as path endpoints.
class PathSumTree {
 public:
  PathSumTree() = default;
  explicit PathSumTree(const std::vector<int>& parent);

  int size() const { return n_; }
  void set_value(int v, Weight x);
  Weight value(int v) const;
  // Add delta on the a→b path excluding lca(a, b).
  void add_path_excl_lca(int a, int b, Weight delta);
  // Add delta on a and all of its ancestors.
  void add_to_root(int a, Weight delta);
  // -1 when a and b lie in different trees.
  int lca(int a, int b) const;
  bool is_ancestor(int a, int b) const;  // a is b or above b
  void kill(int v);
  bool alive(int v) const { return !dead_[v]; }

 private:
  int lca_any(int a, int b) const;  // may return the virtual root n_
  void add_up(int a, int stop, Weight delta);
  void range_add(int l, int r, Weight delta);

  int n_ = 0;
  std::vector<int> parent_, heavy_, head_, pos_, depth_, out_;
  std::vector<Weight> base_, fen_;
  std::vector<char> dead_;
};

// Reference implementation walking parent pointers.
class NaivePathSumTree {
 public:
  NaivePathSumTree() = default;
  explicit NaivePathSumTree(const std::vector<int>& parent)
      : parent_(parent), val_(parent.size(), 0), dead_(parent.size(), 0) {}

  int size() const { return static_cast<int>(parent_.size()); }
  void set_value(int v, Weight x) { val_[v] = x; }
  Weight value(int v) const { return val_[v]; }
  void add_path_excl_lca(int a, int b, Weight delta);
  void add_to_root(int a, Weight delta);
  int lca(int a, int b) const;
  void kill(int v) { dead_[v] = 1; }
  bool alive(int v) const { return !dead_[v]; }

 private:
  std::vector<int> parent_;
  std::vector<Weight> val_;
  std::vector<char> dead_;
};

}  // namespace steiner
