#include "wlab/properties.hpp"

#include <algorithm>
#include <cmath>

#include "wlab/simplex.hpp"
#include "wlab/util.hpp"

namespace wlab {

namespace {

double table_scale(const std::vector<double>& tab) {
  double s = 1.0;
  for (double x : tab) s = std::max(s, std::fabs(x));
  return s;
}

}  // namespace

MonotoneResult is_monotone(const Valuation& v) {
  const int m = v.items();
  const std::vector<double> tab = value_table(v);
  const double tol = 1e-12 * table_scale(tab);
  const std::size_t n = tab.size();
  for (std::size_t mask = 0; mask < n; ++mask)
    for (int j = 0; j < m; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      if (tab[mask | (std::size_t{1} << j)] < tab[mask] - tol)
        return {false, ItemSet::of_bits(static_cast<std::uint32_t>(mask)), j};
    }
  return {};
}

SubmodularResult is_submodular(const Valuation& v) {
  const int m = v.items();
  const std::vector<double> tab = value_table(v);
  const double tol = 1e-12 * table_scale(tab);
  const std::size_t n = tab.size();
  // Single-step test: v(a | S) >= v(a | S + b) for all S and a, b notin S.
  for (std::size_t mask = 0; mask < n; ++mask)
    for (int a = 0; a < m; ++a) {
      if (mask & (std::size_t{1} << a)) continue;
      const double ma = tab[mask | (std::size_t{1} << a)] - tab[mask];
      for (int b = 0; b < m; ++b) {
        if (b == a || (mask & (std::size_t{1} << b))) continue;
        const std::size_t with_b = mask | (std::size_t{1} << b);
        if (tab[with_b | (std::size_t{1} << a)] - tab[with_b] > ma + tol)
          return {false, ItemSet::of_bits(static_cast<std::uint32_t>(mask)), a, b};
      }
    }
  return {};
}

double alpha_of(const Valuation& v) {
  const int m = v.items();
  const std::vector<double> tab = value_table(v);
  const double zero_tol = 1e-12 * table_scale(tab);
  const std::size_t n = tab.size();
  double alpha = 1.0;
  std::vector<double> f(n), g(n);
  for (int j = 0; j < m; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t mask = 0; mask < n; ++mask)
      if (!(mask & bit)) f[mask] = tab[mask | bit] - tab[mask];
    // g(T) = min over S subseteq T of f(S): subset-minimum sweep.
    g = f;
    for (int b = 0; b < m; ++b) {
      if (b == j) continue;
      const std::size_t bbit = std::size_t{1} << b;
      for (std::size_t mask = 0; mask < n; ++mask)
        if ((mask & bbit) && !(mask & bit))
          g[mask] = std::min(g[mask], g[mask ^ bbit]);
    }
    for (std::size_t mask = 0; mask < n; ++mask) {
      if (mask & bit) continue;
      double hi = f[mask], lo = g[mask];
      if (hi < -zero_tol || lo < -zero_tol) return kInf;  // not monotone
      if (hi <= zero_tol) continue;  // zero marginal imposes no constraint
      if (lo <= zero_tol) return kInf;
      alpha = std::max(alpha, hi / lo);
    }
  }
  return alpha;
}

CurvatureResult curvature_of(const Valuation& v) {
  const int m = v.items();
  const std::vector<double> tab = value_table(v);
  const double zero_tol = 1e-12 * table_scale(tab);
  const std::size_t n = tab.size();
  double min_ratio = kInf;
  bool any_positive_singleton = false;
  for (int j = 0; j < m; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    const double base = tab[bit] - tab[0];
    if (base > zero_tol) any_positive_singleton = true;
    for (std::size_t mask = 0; mask < n; ++mask) {
      if (mask & bit) continue;
      const double mj = tab[mask | bit] - tab[mask];
      if (base <= zero_tol) {
        if (mj > zero_tol)
          return {CurvatureResult::Status::Undefined, 0.0,
                  "item " + std::to_string(j) +
                      " has zero singleton marginal but a positive later marginal"};
        continue;
      }
      min_ratio = std::min(min_ratio, mj / base);
    }
  }
  if (!any_positive_singleton)
    return {CurvatureResult::Status::Undefined, 0.0, "all singleton marginals are zero"};
  double c = 1.0 - min_ratio;
  return {CurvatureResult::Status::Ok, std::clamp(c, 0.0, 1.0), ""};
}

GrossSubstitutesResult is_gross_substitutes(const Valuation& v) {
  const int m = v.items();
  const std::vector<double> tab = value_table(v);
  const double tol = kSlack * table_scale(tab);
  const std::size_t n = tab.size();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t only_s = s & ~t;
      if (!only_s) continue;
      const double lhs = tab[s] + tab[t];
      for (std::size_t ib = only_s; ib; ib &= ib - 1) {
        const std::size_t i = ib & (~ib + 1);
        double best = tab[s ^ i] + tab[t | i];  // j = none
        for (std::size_t jb = t & ~s; jb; jb &= jb - 1) {
          const std::size_t j = jb & (~jb + 1);
          best = std::max(best, tab[(s ^ i) | j] + tab[(t | i) & ~j]);
        }
        if (lhs > best + tol)
          return {false, ItemSet::of_bits(static_cast<std::uint32_t>(s)),
                  ItemSet::of_bits(static_cast<std::uint32_t>(t)),
                  std::countr_zero(i)};
      }
    }
  return {};
}

SandwichResult epsilon_between(const Valuation& v, const Valuation& base) {
  const std::size_t n = std::size_t{1} << v.items();
  SandwichResult out;
  double max_ratio = 1.0;
  for (std::size_t mask = 0; mask < n; ++mask) {
    ItemSet s = ItemSet::of_bits(static_cast<std::uint32_t>(mask));
    const double vb = base.value(s);
    const double vv = v.value(s);
    const double tol = 1e-12 * scale_of(vb, vv);
    if (vv < vb - tol) return {false, 0.0, s};
    if (vb <= tol) {
      if (vv > tol) return {false, 0.0, s};
      continue;
    }
    max_ratio = std::max(max_ratio, vv / vb);
  }
  out.eps = max_ratio - 1.0;
  return out;
}

namespace {

// Feasibility of  A z <= b, z >= 0  via its dual bounding LP:
//   max -b.y  s.t.  -A^T y <= 0, sum y <= 1, y >= 0.
// Optimum 0 means feasible (the duals of the d+1 rows recover z);
// optimum > 0 is a Farkas certificate of infeasibility.
struct FeasResult {
  bool feasible = false;
  std::vector<double> z;
};

FeasResult linear_feasible(const std::vector<std::vector<double>>& arows,
                           const std::vector<double>& b) {
  const int d = static_cast<int>(arows.empty() ? 0 : arows[0].size());
  const int k = static_cast<int>(arows.size());
  SimplexProblem prob;
  prob.rows = d + 1;
  prob.cols = k;
  prob.a.assign(static_cast<std::size_t>(prob.rows) * prob.cols, 0.0);
  prob.b.assign(prob.rows, 0.0);
  prob.b[d] = 1.0;
  prob.c.resize(k);
  for (int col = 0; col < k; ++col) {
    for (int r = 0; r < d; ++r) prob.at(r, col) = -arows[col][r];
    prob.at(d, col) = 1.0;
    prob.c[col] = -b[col];
  }
  SimplexResult res = solve_simplex(prob);
  FeasResult out;
  if (res.status != SimplexResult::Status::Optimal || res.objective > 1e-7)
    return out;
  out.feasible = true;
  out.z.assign(d, 0.0);
  for (int r = 0; r < d; ++r) out.z[r] = std::max(0.0, res.duals[r]);
  return out;
}

// Constraint rows for: c + l(S) <= v(S) and v(S) <= (1+eps)(c + l(S)).
void fit_rows(const std::vector<double>& tab, int m, double eps,
              std::vector<std::vector<double>>& arows, std::vector<double>& b) {
  const std::size_t n = tab.size();
  arows.clear();
  b.clear();
  std::vector<double> row(m + 1);
  for (std::size_t mask = 0; mask < n; ++mask) {
    row.assign(m + 1, 0.0);
    row[0] = 1.0;
    for (int j = 0; j < m; ++j)
      if (mask & (std::size_t{1} << j)) row[j + 1] = 1.0;
    arows.push_back(row);
    b.push_back(tab[mask]);
    for (double& x : row) x *= -(1.0 + eps);
    arows.push_back(row);
    b.push_back(-tab[mask]);
  }
}

}  // namespace

LinearFit fit_linear_closeness(const Valuation& v) {
  const int m = v.items();
  const std::vector<double> tab = value_table(v);
  std::vector<std::vector<double>> arows;
  std::vector<double> b;

  auto feasible_at = [&](double eps) {
    fit_rows(tab, m, eps, arows, b);
    return linear_feasible(arows, b);
  };

  const double eps_hi = 1e6;
  LinearFit out;
  FeasResult hi = feasible_at(eps_hi);
  if (!hi.feasible) return out;  // eps = inf

  double lo = 0.0, high = eps_hi;
  FeasResult best = std::move(hi);
  if (FeasResult r0 = feasible_at(0.0); r0.feasible) {
    high = 0.0;
    best = std::move(r0);
  }
  while (high - lo > 1e-6) {
    double mid = 0.5 * (lo + high);
    if (FeasResult r = feasible_at(mid); r.feasible) {
      high = mid;
      best = std::move(r);
    } else {
      lo = mid;
    }
  }
  out.eps = high;
  LinearValuation fitted;
  fitted.c = best.z[0];
  fitted.l.assign(best.z.begin() + 1, best.z.end());
  out.fitted = std::move(fitted);
  return out;
}

double marginal_decreasing_closeness_scan(const Valuation& v) {
  const int m = v.items();
  const std::vector<double> tab = value_table(v);
  const double zero_tol = 1e-12 * table_scale(tab);
  const std::size_t n = tab.size();
  double alpha = 1.0;
  // Direct Definition-3 scan: every nested pair S subseteq T, every j notin T.
  for (int j = 0; j < m; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t t = 0; t < n; ++t) {
      if (t & bit) continue;
      const double ft = tab[t | bit] - tab[t];
      if (ft < -zero_tol) return kInf;
      if (ft <= zero_tol) continue;
      for (std::size_t s = t;; s = (s - 1) & t) {
        const double fs = tab[s | bit] - tab[s];
        if (fs <= zero_tol) return kInf;
        alpha = std::max(alpha, ft / fs);
        if (s == 0) break;
      }
    }
  }
  return alpha - 1.0;
}

}  // namespace wlab
