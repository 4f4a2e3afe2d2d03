#include "steiner/laminar_forest.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace steiner {

LaminarForest LaminarForest::from_nodes(std::vector<ForestNode> nodes) {
  std::sort(nodes.begin(), nodes.end(), [](const ForestNode& a, const ForestNode& b) {
    if (a.terminals.empty() || b.terminals.empty()) return a.terminals.size() > b.terminals.size();
    if (a.terminals.front() != b.terminals.front()) return a.terminals.front() < b.terminals.front();
    return a.terminals.size() > b.terminals.size();
  });
  const int k = static_cast<int>(nodes.size());
  for (int i = 0; i < k; ++i) {
    if (nodes[i].terminals.empty()) throw InvalidInput("forest node without terminals");
    nodes[i].parent = -1;
    nodes[i].children.clear();
    nodes[i].deleted = false;
  }
  for (int i = 0; i < k; ++i) {
    int best = -1;
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      const VertexSet& a = nodes[i].terminals;
      const VertexSet& b = nodes[j].terminals;
      if (a == b) throw InvalidInput("duplicate terminal set in forest");
      if (crosses(a, b)) throw InvalidInput("forest family is not laminar");
      if (a.size() < b.size() && is_subset(a, b) &&
          (best < 0 || b.size() < nodes[best].terminals.size()))
        best = j;
    }
    nodes[i].parent = best;
  }
  for (int i = 0; i < k; ++i)
    if (nodes[i].parent >= 0) nodes[nodes[i].parent].children.push_back(i);
  LaminarForest f;
  f.nodes_ = std::move(nodes);
  return f;
}

std::vector<int> LaminarForest::roots() const {
  std::vector<int> r;
  for (int i = 0; i < size(); ++i)
    if (!nodes_[i].deleted && nodes_[i].parent < 0) r.push_back(i);
  return r;
}

std::vector<int> LaminarForest::live_nodes() const {
  std::vector<int> r;
  for (int i = 0; i < size(); ++i)
    if (!nodes_[i].deleted) r.push_back(i);
  return r;
}

std::vector<int> LaminarForest::post_order() const {
  std::vector<int> out;
  std::function<void(int)> go = [&](int v) {
    for (int c : nodes_[v].children) go(c);
    out.push_back(v);
  };
  for (int r : roots()) go(r);
  return out;
}

void LaminarForest::delete_node(int id) {
  ForestNode& x = nodes_.at(id);
  if (x.deleted) throw InvalidInput("forest node already deleted");
  x.deleted = true;
  if (x.parent >= 0) {
    auto& sib = nodes_[x.parent].children;
    sib.erase(std::find(sib.begin(), sib.end(), id));
    sib.insert(sib.end(), x.children.begin(), x.children.end());
    std::sort(sib.begin(), sib.end());
  }
  for (int c : x.children) nodes_[c].parent = x.parent;
  x.children.clear();
  x.parent = -1;
}

LaminarForest LaminarForest::restricted(const std::vector<char>& keep) const {
  LaminarForest f = *this;
  for (int i = 0; i < size(); ++i) {
    ForestNode& x = f.nodes_[i];
    if (x.deleted) continue;
    if (!keep[i]) {
      x.deleted = true;
      x.children.clear();
      x.parent = -1;
      continue;
    }
    if (x.parent >= 0 && !keep[x.parent]) throw InvalidInput("restriction is not closed under parents");
    std::erase_if(x.children, [&](int c) { return !keep[c]; });
  }
  return f;
}

void LaminarForest::validate() const {
  for (int i = 0; i < size(); ++i) {
    const ForestNode& x = nodes_[i];
    if (x.deleted) continue;
    if (x.parent >= 0) {
      ensure(!nodes_[x.parent].deleted, "live node has a deleted parent");
      ensure(is_subset(x.terminals, nodes_[x.parent].terminals), "child not contained in parent");
    }
    for (std::size_t a = 0; a < x.children.size(); ++a) {
      ensure(nodes_[x.children[a]].parent == i, "child link mismatch");
      for (std::size_t b = a + 1; b < x.children.size(); ++b)
        ensure(!intersects(nodes_[x.children[a]].terminals, nodes_[x.children[b]].terminals),
               "sibling terminal sets intersect");
    }
  }
}

void compute_rdem(LaminarForest& f, Weight tau) {
  for (int v : f.live_nodes())
    if (f.node(v).cut_value >= tau) f.delete_node(v);
  for (int v : f.post_order()) {
    ForestNode& x = f.node(v);
    Weight sum = 0;
    for (int c : x.children) sum += f.node(c).rdem;
    x.rdem = std::max(tau - x.cut_value, sum);
  }
}

void mark_critical(LaminarForest& f, Weight tau) {
  for (int v : f.live_nodes()) {
    ForestNode& x = f.node(v);
    Weight sum = 0;
    for (int c : x.children) sum += f.node(c).rdem;
    x.critical = x.rdem == tau - x.cut_value && tau - x.cut_value > sum;
  }
}

HighLevel compute_l2_lhigh(LaminarForest& f) {
  HighLevel h;
  h.in_high.assign(f.size(), 0);
  for (int v : f.live_nodes()) f.node(v).in_l2 = false;
  std::function<void(int)> go = [&](int v) {
    ForestNode& x = f.node(v);
    x.in_l2 = x.critical;
    if (x.critical) {
      h.l2.push_back(v);
      h.in_high[v] = 1;
      return;
    }
    for (int c : x.children) go(c);
  };
  for (int r : f.roots()) go(r);
  for (int v : h.l2)
    for (int u = f.node(v).parent; u >= 0 && !h.in_high[u]; u = f.node(u).parent) h.in_high[u] = 1;
  std::sort(h.l2.begin(), h.l2.end());
  return h;
}

namespace {

struct Decomposer {
  const LaminarForest& f;
  HeavyPathDecomposition& out;
  std::vector<int> size;

  // Subtree sizes over the children accepted by `use`.
  int measure(int v, const std::function<bool(int)>& use) {
    int s = 1;
    for (int c : f.node(v).children)
      if (use(c)) s += measure(c, use);
    size[v] = s;
    return s;
  }

  void decompose(int top, const std::function<bool(int)>& use, PathLevel level, int into) {
    measure(top, use);
    std::vector<int> heads{top};
    while (!heads.empty()) {
      int h = heads.back();
      heads.pop_back();
      HeavyPath p;
      p.level = level;
      p.contracted_into = into;
      std::vector<int> down;
      for (int v = h; v >= 0;) {
        down.push_back(v);
        int heavy = -1;
        for (int c : f.node(v).children) {
          if (!use(c)) continue;
          if (heavy < 0 || size[c] > size[heavy]) heavy = c;
        }
        for (int c : f.node(v).children)
          if (use(c) && c != heavy) heads.push_back(c);
        v = heavy;
      }
      p.nodes.assign(down.rbegin(), down.rend());
      int id = static_cast<int>(out.paths.size());
      for (int v : p.nodes) out.path_of[v] = id;
      out.paths.push_back(std::move(p));
    }
  }
};

}  // namespace

HeavyPathDecomposition heavy_light(const LaminarForest& f, bool stop_at_l2) {
  HeavyPathDecomposition d;
  d.path_of.assign(f.size(), -1);
  Decomposer dec{f, d, std::vector<int>(f.size(), 0)};
  if (!stop_at_l2) {
    auto all = [](int) { return true; };
    for (int r : f.roots()) dec.decompose(r, all, PathLevel::kUpper, -1);
  } else {
    std::vector<char> high(f.size(), 0);
    std::vector<int> l2;
    for (int v : f.live_nodes())
      if (f.node(v).in_l2) {
        l2.push_back(v);
        for (int u = v; u >= 0 && !high[u]; u = f.node(u).parent) high[u] = 1;
      }
    auto in_high = [&](int c) { return high[c] != 0; };
    for (int r : f.roots()) {
      if (!high[r]) throw InvalidInput("tree without an L2 node");
      dec.decompose(r, in_high, PathLevel::kUpper, -1);
    }
    auto all = [](int) { return true; };
    for (int u : l2)
      for (int c : f.node(u).children) dec.decompose(c, all, PathLevel::kLower, u);
  }
  // Paths were emitted parent-path first, so one forward pass fixes depths.
  for (auto& p : d.paths) {
    int above = f.node(p.head()).parent;
    p.depth = above < 0 ? 1 : d.paths[d.path_of[above]].depth + 1;
  }
  return d;
}

std::string forest_to_json(const LaminarForest& f) {
  nlohmann::json nodes = nlohmann::json::array();
  for (int v : f.live_nodes()) {
    const ForestNode& x = f.node(v);
    nlohmann::json j;
    j["id"] = v;
    j["parent"] = x.parent;
    j["terminals"] = x.terminals;
    j["c"] = x.cut_value;
    j["rdem"] = x.rdem;
    if (x.vertex_set) j["vertex_set"] = *x.vertex_set;
    j["critical"] = x.critical;
    j["in_l2"] = x.in_l2;
    nodes.push_back(std::move(j));
  }
  nlohmann::json root;
  root["roots"] = f.roots();
  root["nodes"] = std::move(nodes);
  return root.dump(2);
}

std::string forest_to_dot(const LaminarForest& f) {
  std::ostringstream os;
  os << "digraph forest {\n  node [shape=box];\n";
  for (int v : f.live_nodes()) {
    const ForestNode& x = f.node(v);
    os << "  n" << v << " [label=\"{";
    for (std::size_t i = 0; i < x.terminals.size(); ++i) os << (i ? "," : "") << x.terminals[i];
    os << "}\\nc=" << x.cut_value;
    if (x.rdem) os << " rdem=" << x.rdem;
    os << "\"";
    if (x.in_l2) os << " style=bold";
    os << "];\n";
    if (x.parent >= 0) os << "  n" << x.parent << " -> n" << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string forest_to_text(const LaminarForest& f) {
  std::ostringstream os;
  std::function<void(int, int)> go = [&](int v, int depth) {
    const ForestNode& x = f.node(v);
    os << std::string(2 * depth, ' ') << "{";
    for (std::size_t i = 0; i < x.terminals.size(); ++i) os << (i ? "," : "") << x.terminals[i];
    os << "} c=" << x.cut_value << "\n";
    for (int c : x.children) go(c, depth + 1);
  };
  for (int r : f.roots()) go(r, 0);
  return os.str();
}

}  // namespace steiner
