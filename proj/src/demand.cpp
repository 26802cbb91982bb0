#include "wlab/demand.hpp"

#include <cmath>
#include <limits>

#include "wlab/util.hpp"

namespace wlab {

namespace {

// Two passes: find the maximum utility, then pick among near-ties.
// Candidate utilities are evaluated identically in both passes.
template <class UtilityFn>
DemandResult select_demand(ItemSet comp, UtilityFn&& utility) {
  double best = 0.0;  // the empty bundle is always available
  for_each_subset(comp, [&](ItemSet s) {
    if (s.empty()) return;
    best = std::max(best, utility(s));
  });
  const double tol = kSlack * std::max(1.0, std::fabs(best));
  ItemSet pick;
  int pick_card = 0;
  bool have = false;
  for_each_subset(comp, [&](ItemSet s) {
    double u = s.empty() ? 0.0 : utility(s);
    if (u < best - tol) return;
    int card = s.count();
    if (!have || card > pick_card ||
        (card == pick_card && s.bits() < pick.bits())) {
      pick = s;
      pick_card = card;
      have = true;
    }
  });
  return DemandResult{pick, pick.empty() ? 0.0 : utility(pick)};
}

template <class Oracle>
DemandResult exact_demand_impl(const Oracle& v, const PriceVector& p, ItemSet held) {
  const int m = v.items();
  p.validate(m);
  const ItemSet comp = held.complement(m);
  const double base = v.value(held);

  // Cache values so each bundle is queried exactly once; with held = empty
  // that is exactly 2^m value queries (the base value doubles as the empty
  // candidate).
  std::vector<double> cache(std::size_t{1} << m,
                            std::numeric_limits<double>::quiet_NaN());
  cache[held.bits()] = base;
  auto utility = [&](ItemSet s) {
    ItemSet u = s | held;
    double& slot = cache[u.bits()];
    if (std::isnan(slot)) slot = v.value(u);
    return slot - base - p.total(s);
  };
  return select_demand(comp, utility);
}

template <class Oracle>
DemandResult greedy_demand_impl(const Oracle& v, const PriceVector& p) {
  const int m = v.items();
  p.validate(m);
  ItemSet s;
  double current = v.value(ItemSet());
  double utility = 0.0;
  while (true) {
    int best_j = -1;
    double best_gain = 0.0;
    double best_value = 0.0;
    for (int j = 0; j < m; ++j) {
      if (s.contains(j)) continue;
      double val = v.value(s.plus(j));
      double gain = val - current - p[j];
      if (gain > best_gain + 1e-12 * std::max(1.0, std::fabs(gain))) {
        best_gain = gain;
        best_j = j;
        best_value = val;
      }
    }
    if (best_j < 0 || best_gain <= 0.0) break;
    s = s.plus(best_j);
    current = best_value;
    utility += best_gain;
  }
  return DemandResult{s, utility};
}

}  // namespace

DemandResult exact_demand(const Valuation& v, const PriceVector& p, ItemSet held) {
  return exact_demand_impl(v, p, held);
}

DemandResult exact_demand(const CountedValuation& v, const PriceVector& p,
                          ItemSet held) {
  ++v.counter().demand_queries;
  return exact_demand_impl(v, p, held);
}

DemandResult exact_demand_table(const std::vector<double>& table, int m,
                                const std::vector<double>& prices, ItemSet held) {
  const ItemSet comp = held.complement(m);
  const double base = table[held.bits()];
  auto utility = [&](ItemSet s) {
    double out = table[(s | held).bits()] - base;
    s.for_each_item([&](int j) { out -= prices[j]; });
    return out;
  };
  return select_demand(comp, utility);
}

DemandResult greedy_demand(const Valuation& v, const PriceVector& p) {
  return greedy_demand_impl(v, p);
}

DemandResult greedy_demand(const CountedValuation& v, const PriceVector& p) {
  ++v.counter().demand_queries;
  return greedy_demand_impl(v, p);
}

}  // namespace wlab
