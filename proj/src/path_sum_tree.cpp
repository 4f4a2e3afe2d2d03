#include "steiner/path_sum_tree.hpp"

#include <algorithm>

namespace steiner {

PathSumTree::PathSumTree(const std::vector<int>& parent) : n_(static_cast<int>(parent.size())) {
  const int root = n_;
  parent_.assign(n_ + 1, -1);
  std::vector<std::vector<int>> ch(n_ + 1);
  for (int v = 0; v < n_; ++v) {
    if (parent[v] < -1 || parent[v] >= n_) throw InvalidInput("parent id out of range");
    parent_[v] = parent[v] < 0 ? root : parent[v];
    ch[parent_[v]].push_back(v);
  }
  // Preorder from the virtual root; reversing it gives children before parents.
  std::vector<int> order{root}, size(n_ + 1, 1);
  depth_.assign(n_ + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c : ch[order[i]]) {
      depth_[c] = depth_[order[i]] + 1;
      order.push_back(c);
    }
  if (static_cast<int>(order.size()) != n_ + 1) throw InvalidInput("parent array has a cycle");
  heavy_.assign(n_ + 1, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    for (int c : ch[v]) {
      size[v] += size[c];
      if (heavy_[v] < 0 || size[c] > size[heavy_[v]]) heavy_[v] = c;
    }
  }
  head_.assign(n_ + 1, 0);
  pos_.assign(n_ + 1, 0);
  out_.assign(n_ + 1, 0);
  int next = 0;
  std::vector<std::pair<int, bool>> st{{root, false}};
  head_[root] = root;
  while (!st.empty()) {
    auto [v, done] = st.back();
    st.pop_back();
    if (done) {
      out_[v] = next - 1;
      continue;
    }
    pos_[v] = next++;
    st.push_back({v, true});
    // Heavy child is pushed last so it gets the next position.
    for (int c : ch[v])
      if (c != heavy_[v]) {
        head_[c] = c;
        st.push_back({c, false});
      }
    if (heavy_[v] >= 0) {
      head_[heavy_[v]] = head_[v];
      st.push_back({heavy_[v], false});
    }
  }
  base_.assign(n_ + 1, 0);
  fen_.assign(n_ + 2, 0);
  dead_.assign(n_ + 1, 0);
}

void PathSumTree::range_add(int l, int r, Weight delta) {
  for (int i = l + 1; i <= n_ + 1; i += i & -i) fen_[i] += delta;
  for (int i = r + 2; i <= n_ + 1; i += i & -i) fen_[i] -= delta;
}

void PathSumTree::set_value(int v, Weight x) { base_[v] = x - (value(v) - base_[v]); }

Weight PathSumTree::value(int v) const {
  Weight s = base_[v];
  for (int i = pos_[v] + 1; i > 0; i -= i & -i) s += fen_[i];
  return s;
}

bool PathSumTree::is_ancestor(int a, int b) const {
  return pos_[a] <= pos_[b] && pos_[b] <= out_[a];
}

int PathSumTree::lca_any(int a, int b) const {
  while (head_[a] != head_[b]) {
    if (depth_[head_[a]] < depth_[head_[b]]) std::swap(a, b);
    a = parent_[head_[a]];
  }
  return depth_[a] < depth_[b] ? a : b;
}

int PathSumTree::lca(int a, int b) const {
  int l = lca_any(a, b);
  return l == n_ ? -1 : l;
}

void PathSumTree::add_up(int a, int stop, Weight delta) {
  while (head_[a] != head_[stop]) {
    range_add(pos_[head_[a]], pos_[a], delta);
    a = parent_[head_[a]];
  }
  if (a != stop) range_add(pos_[stop] + 1, pos_[a], delta);
}

void PathSumTree::add_path_excl_lca(int a, int b, Weight delta) {
  if (dead_[a] || dead_[b]) throw InvalidInput("path update on a dead node");
  int l = lca_any(a, b);
  add_up(a, l, delta);
  add_up(b, l, delta);
}

void PathSumTree::add_to_root(int a, Weight delta) {
  if (dead_[a]) throw InvalidInput("path update on a dead node");
  add_up(a, n_, delta);
}

void PathSumTree::kill(int v) { dead_[v] = 1; }

void NaivePathSumTree::add_path_excl_lca(int a, int b, Weight delta) {
  if (dead_[a] || dead_[b]) throw InvalidInput("path update on a dead node");
  int l = lca(a, b);
  for (int v = a; v != l; v = parent_[v]) val_[v] += delta;
  for (int v = b; v != l; v = parent_[v]) val_[v] += delta;
}

void NaivePathSumTree::add_to_root(int a, Weight delta) {
  if (dead_[a]) throw InvalidInput("path update on a dead node");
  for (int v = a; v >= 0; v = parent_[v]) val_[v] += delta;
}

int NaivePathSumTree::lca(int a, int b) const {
  std::vector<char> up(parent_.size(), 0);
  for (int v = a; v >= 0; v = parent_[v]) up[v] = 1;
  for (int v = b; v >= 0; v = parent_[v])
    if (up[v]) return v;
  return -1;
}

}  // namespace steiner
