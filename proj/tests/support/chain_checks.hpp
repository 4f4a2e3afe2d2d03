#pragma once

#include <set>

#include "steiner/aug_chains.hpp"
#include "steiner/oracle.hpp"

namespace chain_checks {

using namespace steiner;

inline std::set<CutSide> extreme_members(const Graph& g) {
  std::set<CutSide> s;
  for (const auto& x : extreme_sets_bruteforce(g).sets) s.insert(x.members);
  return s;
}

// Extreme family of g + f is contained in that of g.
inline bool no_new_extreme(const Graph& g, const std::set<CutSide>& before, const EdgeAdditions& f) {
  for (const auto& x : extreme_members(add_edges(g, f)))
    if (!before.count(x)) return false;
  return true;
}

struct Audit {
  int events = 0;
  int lazy_mismatches = 0;    // c(R) differs from d(μ(R)) in the current graph
  int expiry_mismatches = 0;  // t_F differs from copy-by-copy simulation
};

// Drives the scheduler batch by batch as run() does. Every node must carry its vertex set.
inline Audit audit(ChainScheduler s, const Graph& g) {
  Audit a;
  auto ch = s.build_chain();
  while (ch) {
    Expiration e = s.expiration(*ch);
    ChainScheduler sim = s;
    Weight copies = 0;
    while (copies <= e.t() && sim.chain_valid(*ch)) sim.apply(*ch, 1), ++copies;
    a.expiry_mismatches += copies != e.t();
    s.apply(*ch, e.t());
    ++a.events;
    Graph cur = add_edges(g, s.output());
    for (int v : s.forest().live_nodes())
      a.lazy_mismatches += s.c(v) != cut_value(cur, *s.forest().node(v).vertex_set);
    ch = s.patch(*ch, nullptr);
  }
  return a;
}

}  // namespace chain_checks
