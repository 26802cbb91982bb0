#pragma once

#include "wlab/market.hpp"

namespace wlab {

// Counts oracle accesses. Per-session object; not shared across threads
// unless externally synchronized.
struct QueryCounter {
  long long value_queries = 0;
  long long demand_queries = 0;
  void reset() { value_queries = demand_queries = 0; }
};

// Value-oracle view of a valuation that bumps a counter on every query.
class CountedValuation {
 public:
  CountedValuation(const Valuation& v, QueryCounter& counter)
      : v_(&v), counter_(&counter) {}
  int items() const { return v_->items(); }
  double value(ItemSet s) const {
    ++counter_->value_queries;
    return v_->value(s);
  }
  QueryCounter& counter() const { return *counter_; }

 private:
  const Valuation* v_;
  QueryCounter* counter_;
};

struct DemandResult {
  ItemSet bundle;   // subset of M \ held
  double utility;   // v(bundle | held) - p(bundle)
};

// Brute-force demand: the bundle S subseteq M \ held maximizing
// v(S | held) - p(S). Ties (within 1e-9 scaled slack) prefer larger
// cardinality, then the lowest bitmask, so runs replay deterministically.
DemandResult exact_demand(const Valuation& v, const PriceVector& p,
                          ItemSet held = ItemSet());
DemandResult exact_demand(const CountedValuation& v, const PriceVector& p,
                          ItemSet held = ItemSet());

// Same semantics computed from a dense value table (hot-loop variant).
DemandResult exact_demand_table(const std::vector<double>& table, int m,
                                const std::vector<double>& prices, ItemSet held);

// Marginal-utility greedy: repeatedly add the item with maximum
// v(j | S) - p(j) while that quantity is strictly positive (ties to the
// lowest index). For gross substitutes valuations this attains the exact
// demand utility; in general it can fall short.
DemandResult greedy_demand(const Valuation& v, const PriceVector& p);
DemandResult greedy_demand(const CountedValuation& v, const PriceVector& p);

}  // namespace wlab
