#pragma once

#include <algorithm>
#include <vector>

namespace steiner {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;
// One side of a cut.
using CutSide = VertexSet;

inline VertexSet make_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

// X and Y cross when X∩Y, X∖Y and Y∖X are all nonempty.
inline bool crosses(const VertexSet& a, const VertexSet& b) {
  return intersects(a, b) && !is_subset(a, b) && !is_subset(b, a);
}

inline VertexSet complement(int n, const VertexSet& s) {
  VertexSet r;
  r.reserve(n - static_cast<int>(s.size()));
  std::size_t j = 0;
  for (int v = 0; v < n; ++v) {
    if (j < s.size() && s[j] == v) { ++j; continue; }
    r.push_back(v);
  }
  return r;
}

inline std::vector<char> to_mask(int n, const VertexSet& s) {
  std::vector<char> m(n, 0);
  for (int v : s) m[v] = 1;
  return m;
}

inline VertexSet from_mask(const std::vector<char>& m) {
  VertexSet r;
  for (int v = 0; v < static_cast<int>(m.size()); ++v)
    if (m[v]) r.push_back(v);
  return r;
}

}  // namespace steiner
