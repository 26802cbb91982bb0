#pragma once

#include <string>
#include <vector>

#include "wlab/valuation.hpp"

namespace wlab {

// A combinatorial-auction market: m items and one valuation per player.
// Immutable after construction; safe for shared concurrent reads.
struct Market {
  int m = 0;
  std::vector<Valuation> players;
  std::vector<std::string> item_labels;    // optional, empty or size m
  std::vector<std::string> player_labels;  // optional, empty or size n

  int n() const { return static_cast<int>(players.size()); }
  void validate() const;
};

// A (possibly partial) partition of the items: one bundle per player.
struct Allocation {
  std::vector<ItemSet> bundles;

  bool disjoint() const;
  ItemSet assigned() const;
  bool full(int m) const { return assigned() == ItemSet::full(m); }
  void validate(const Market& mkt) const;
};

// One price per item. Negative prices are permitted (demand given a
// previous allocation is queried through negative price offsets).
struct PriceVector {
  std::vector<double> p;

  static PriceVector zero(int m) { return PriceVector{std::vector<double>(m, 0.0)}; }
  double operator[](int j) const { return p[j]; }
  double total(ItemSet s) const {
    double out = 0.0;
    s.for_each_item([&](int j) { out += p[j]; });
    return out;
  }
  int size() const { return static_cast<int>(p.size()); }
  void validate(int m) const;
};

double welfare(const Market& mkt, const Allocation& alloc);

// Extends a partial allocation to a full one: each unallocated item goes to
// the player with the highest marginal value for it given their current
// bundle (ties to the lowest player index). For monotone markets welfare
// never decreases.
Allocation make_full(const Market& mkt, const Allocation& alloc);

}  // namespace wlab
