#include "wlab/market.hpp"

#include <cmath>
#include <stdexcept>

namespace wlab {

void Market::validate() const {
  if (m < 1 || m > kMaxItems)
    throw std::invalid_argument("market item count must be between 1 and 24");
  if (players.empty())
    throw std::invalid_argument("market needs at least one player");
  for (const Valuation& v : players)
    if (v.items() != m)
      throw std::invalid_argument("player valuation has wrong item count");
  if (!item_labels.empty() && item_labels.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("item label count must equal m");
  if (!player_labels.empty() && player_labels.size() != players.size())
    throw std::invalid_argument("player label count must equal player count");
}

bool Allocation::disjoint() const {
  std::uint32_t seen = 0;
  for (ItemSet s : bundles) {
    if (seen & s.bits()) return false;
    seen |= s.bits();
  }
  return true;
}

ItemSet Allocation::assigned() const {
  ItemSet out;
  for (ItemSet s : bundles) out = out | s;
  return out;
}

void Allocation::validate(const Market& mkt) const {
  if (bundles.size() != mkt.players.size())
    throw std::invalid_argument("allocation bundle count must equal player count");
  for (ItemSet s : bundles)
    if (!s.subset_of(ItemSet::full(mkt.m)))
      throw std::invalid_argument("allocation bundle out of item range");
  if (!disjoint())
    throw std::invalid_argument("allocation bundles must be pairwise disjoint");
}

void PriceVector::validate(int m) const {
  if (size() != m)
    throw std::invalid_argument("price vector length must equal m");
  for (double x : p)
    if (!std::isfinite(x))
      throw std::invalid_argument("prices must be finite");
}

double welfare(const Market& mkt, const Allocation& alloc) {
  alloc.validate(mkt);
  double out = 0.0;
  for (int i = 0; i < mkt.n(); ++i) out += mkt.players[i].value(alloc.bundles[i]);
  return out;
}

Allocation make_full(const Market& mkt, const Allocation& alloc) {
  alloc.validate(mkt);
  Allocation out = alloc;
  ItemSet left = alloc.assigned().complement(mkt.m);
  left.for_each_item([&](int j) {
    int best = 0;
    double best_gain = -1.0;
    for (int i = 0; i < mkt.n(); ++i) {
      double gain = marginal(mkt.players[i], ItemSet::single(j), out.bundles[i]);
      if (gain > best_gain + 1e-12) {
        best_gain = gain;
        best = i;
      }
    }
    out.bundles[best] = out.bundles[best].plus(j);
  });
  return out;
}

}  // namespace wlab
