#include "steiner/external_aug.hpp"

namespace steiner {

ExternalSolution external_augment(const LaminarForest& f, Weight tau, int n) {
  ExternalSolution sol{std::vector<Weight>(n, 0)};
  for (int v : f.post_order()) {
    const ForestNode& x = f.node(v);
    Weight below = 0;
    for (int c : x.children) below += f.node(c).rdem;
    ensure(x.rdem == std::max(tau - x.cut_value, below), "rdem not computed for this tau");
    sol.beta.at(x.terminals.front()) += x.rdem - below;
    Weight inside = 0;
    for (int t : x.terminals) inside += sol.beta[t];
    ensure(inside == x.rdem, "weight added inside R differs from rdem(R)");
  }
  return sol;
}

ExternalSolution make_even(ExternalSolution sol) {
  if (sol.total() % 2 == 0) return sol;
  for (Weight& b : sol.beta)
    if (b > 0) {
      ++b;
      return sol;
    }
  throw InvalidInput("odd total with empty support");
}

Weight augmentation_lower_bound(const ExternalSolution& sol) { return (sol.total() + 1) / 2; }

}  // namespace steiner
