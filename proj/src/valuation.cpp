#include "wlab/valuation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "wlab/util.hpp"

namespace wlab {

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void require_finite(const std::vector<double>& xs, const std::string& what) {
  for (double x : xs)
    require(std::isfinite(x), what + " must be finite");
}

void require_nonneg(const std::vector<double>& xs, const std::string& what) {
  for (double x : xs)
    require(x >= 0.0, what + " must be nonnegative");
}

void require_partition(int m, const std::vector<ItemSet>& parts,
                       const std::string& what) {
  std::uint32_t seen = 0;
  for (ItemSet p : parts) {
    require(p.subset_of(ItemSet::full(m)), what + " part out of range");
    require((seen & p.bits()) == 0, what + " parts must be disjoint");
    seen |= p.bits();
  }
  require(seen == ItemSet::full(m).bits(), what + " parts must cover all items");
}

}  // namespace

Matroid Matroid::uniform(int m, int rank) {
  require(rank >= 0, "matroid rank must be nonnegative");
  Matroid mt;
  mt.kind = Kind::Uniform;
  mt.m = m;
  mt.rank = rank;
  return mt;
}

Matroid Matroid::partition(int m, std::vector<ItemSet> parts,
                           std::vector<int> capacities) {
  require(parts.size() == capacities.size(),
          "matroid capacities must match parts");
  require_partition(m, parts, "matroid");
  for (int c : capacities) require(c >= 0, "matroid capacity must be >= 0");
  Matroid mt;
  mt.kind = Kind::Partition;
  mt.m = m;
  mt.parts = std::move(parts);
  mt.capacities = std::move(capacities);
  return mt;
}

Matroid Matroid::explicit_family(int m, std::vector<ItemSet> sets) {
  require(!sets.empty(), "explicit matroid needs at least one set");
  for (ItemSet s : sets)
    require(s.subset_of(ItemSet::full(m)), "explicit matroid set out of range");
  Matroid mt;
  mt.kind = Kind::Explicit;
  mt.m = m;
  mt.sets = std::move(sets);
  return mt;
}

bool Matroid::independent(ItemSet s) const {
  switch (kind) {
    case Kind::Uniform:
      return s.count() <= rank;
    case Kind::Partition: {
      for (std::size_t i = 0; i < parts.size(); ++i)
        if ((s & parts[i]).count() > capacities[i]) return false;
      return true;
    }
    case Kind::Explicit: {
      for (ItemSet t : sets)
        if (s.subset_of(t)) return true;
      return s.empty();
    }
  }
  return false;
}

Valuation::Valuation(int m, Spec spec) : m_(m), spec_(std::move(spec)) {
  require(m >= 1 && m <= kMaxItems, "item count must be between 1 and 24");
  const std::size_t full = std::size_t{1} << m;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LinearValuation>) {
          require(v.l.size() == static_cast<std::size_t>(m),
                  "linear coefficient count must equal m");
          require(v.c >= 0.0 && std::isfinite(v.c), "linear constant must be a nonnegative real");
          require_finite(v.l, "linear coefficients");
          require_nonneg(v.l, "linear coefficients");
        } else if constexpr (std::is_same_v<T, UnitDemandValuation>) {
          require(v.rho.size() == static_cast<std::size_t>(m),
                  "unit-demand value count must equal m");
          require_finite(v.rho, "unit-demand values");
          require_nonneg(v.rho, "unit-demand values");
        } else if constexpr (std::is_same_v<T, WeightedMatroidRankValuation>) {
          require(v.matroid.m == m, "matroid ground set must equal m");
          require(v.w.size() == static_cast<std::size_t>(m),
                  "weight count must equal m");
          require_finite(v.w, "weights");
          require_nonneg(v.w, "weights");
        } else if constexpr (std::is_same_v<T, TransversalValuation>) {
          require(v.r.size() == static_cast<std::size_t>(m),
                  "transversal item values must have length m");
          for (int x : v.r)
            require(x == 0 || x == 1, "transversal item values must be 0 or 1");
          require_partition(m, v.parts, "transversal");
        } else if constexpr (std::is_same_v<T, XosValuation>) {
          require(!v.clauses.empty(), "xos needs at least one clause");
          for (const auto& cl : v.clauses) {
            require(cl.size() == static_cast<std::size_t>(m),
                    "xos clause length must equal m");
            require_finite(cl, "xos coefficients");
            require_nonneg(cl, "xos coefficients");
          }
        } else if constexpr (std::is_same_v<T, CoverageValuation>) {
          for (const auto& reg : v.regions) {
            require(std::isfinite(reg.w) && reg.w >= 0.0,
                    "coverage region weight must be a nonnegative real");
            require(reg.covered_by.subset_of(ItemSet::full(m)),
                    "coverage region items out of range");
          }
        } else if constexpr (std::is_same_v<T, TableValuation>) {
          require(v.values.size() == full, "table must list 2^m values");
          require_finite(v.values, "table values");
        } else if constexpr (std::is_same_v<T, PerturbedValuation>) {
          require(v.base != nullptr, "perturbed base missing");
          require(v.base->items() == m, "perturbed base must have the same m");
          require(std::isfinite(v.eps) && v.eps >= 0.0, "eps must be a nonnegative real");
          require(v.factors.size() == full, "factor table must list 2^m values");
          for (double f : v.factors)
            require(std::isfinite(f) && f >= 1.0 - 1e-9,
                    "perturbation factors must be >= 1");
        }
      },
      spec_);
}

std::string_view Valuation::kind() const {
  struct Visitor {
    std::string_view operator()(const LinearValuation&) { return "linear"; }
    std::string_view operator()(const UnitDemandValuation&) { return "unit_demand"; }
    std::string_view operator()(const WeightedMatroidRankValuation&) {
      return "weighted_matroid_rank";
    }
    std::string_view operator()(const TransversalValuation&) { return "transversal"; }
    std::string_view operator()(const XosValuation&) { return "xos"; }
    std::string_view operator()(const CoverageValuation&) { return "coverage"; }
    std::string_view operator()(const TableValuation&) { return "table"; }
    std::string_view operator()(const PerturbedValuation&) { return "perturbed"; }
  };
  return std::visit(Visitor{}, spec_);
}

double Valuation::value(ItemSet s) const {
  struct Visitor {
    ItemSet s;
    int m;

    double operator()(const LinearValuation& v) const {
      double out = v.c;
      s.for_each_item([&](int j) { out += v.l[j]; });
      return out;
    }
    double operator()(const UnitDemandValuation& v) const {
      double out = 0.0;
      s.for_each_item([&](int j) { out = std::max(out, v.rho[j]); });
      return out;
    }
    double operator()(const WeightedMatroidRankValuation& v) const {
      auto items = s.items();
      std::sort(items.begin(), items.end(), [&](int a, int b) {
        if (v.w[a] != v.w[b]) return v.w[a] > v.w[b];
        return a < b;
      });
      ItemSet chosen;
      double out = 0.0;
      for (int j : items) {
        if (v.matroid.independent(chosen.plus(j))) {
          chosen = chosen.plus(j);
          out += v.w[j];
        }
      }
      return out;
    }
    double operator()(const TransversalValuation& v) const {
      double out = 0.0;
      for (ItemSet part : v.parts) {
        int best = 0;
        (s & part).for_each_item([&](int j) { best = std::max(best, v.r[j]); });
        out += best;
      }
      return out;
    }
    double operator()(const XosValuation& v) const {
      double out = 0.0;
      for (const auto& cl : v.clauses) {
        double sum = 0.0;
        s.for_each_item([&](int j) { sum += cl[j]; });
        out = std::max(out, sum);
      }
      return out;
    }
    double operator()(const CoverageValuation& v) const {
      double out = 0.0;
      for (const auto& reg : v.regions)
        if (reg.covered_by.intersects(s)) out += reg.w;
      return out;
    }
    double operator()(const TableValuation& v) const { return v.values[s.bits()]; }
    double operator()(const PerturbedValuation& v) const {
      return v.factors[s.bits()] * v.base->value(s);
    }
  };
  return std::visit(Visitor{s, m_}, spec_);
}

double marginal(const Valuation& v, ItemSet s, ItemSet t) {
  return v.value(s | t) - v.value(t);
}

std::vector<double> value_table(const Valuation& v) {
  const std::size_t n = std::size_t{1} << v.items();
  std::vector<double> out(n);
  for (std::size_t mask = 0; mask < n; ++mask)
    out[mask] = v.value(ItemSet::of_bits(static_cast<std::uint32_t>(mask)));
  return out;
}

Valuation perturbed_from_factors(const Valuation& base, double eps,
                                 std::vector<double> factors) {
  PerturbedValuation p;
  p.base = std::make_shared<Valuation>(base);
  p.eps = eps;
  p.factors = std::move(factors);
  return Valuation(base.items(), std::move(p));
}

Valuation random_perturbation(const Valuation& base, double eps,
                              std::uint64_t seed, bool monotone_repair) {
  if (!(eps >= 0.0))
    throw std::invalid_argument("perturbation eps must be nonnegative");
  const int m = base.items();
  const std::size_t n = std::size_t{1} << m;
  std::mt19937_64 rng(seed);
  std::vector<double> factors(n);
  factors[0] = 1.0;  // the empty bundle keeps its base value
  for (std::size_t mask = 1; mask < n; ++mask)
    factors[mask] = 1.0 + eps * uniform01(rng);

  if (monotone_repair) {
    std::vector<double> tab = value_table(base);
    std::vector<double> val(n);
    for (std::size_t mask = 0; mask < n; ++mask) {
      double v = factors[mask] * tab[mask];
      for (int j = 0; j < m; ++j)
        if (mask & (std::size_t{1} << j)) v = std::max(v, val[mask ^ (std::size_t{1} << j)]);
      val[mask] = v;
    }
    for (std::size_t mask = 0; mask < n; ++mask)
      factors[mask] = tab[mask] > 0.0 ? val[mask] / tab[mask] : 1.0;
  }
  return perturbed_from_factors(base, eps, std::move(factors));
}

}  // namespace wlab
