#pragma once

#include <limits>
#include <optional>

#include "wlab/valuation.hpp"

namespace wlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct MonotoneResult {
  bool ok = true;
  ItemSet set;   // witness: v(set + item) < v(set)
  int item = -1;
};
MonotoneResult is_monotone(const Valuation& v);

struct SubmodularResult {
  bool ok = true;
  ItemSet set;  // witness: v(item | set) < v(item | set + other)
  int item = -1;
  int other = -1;
};
SubmodularResult is_submodular(const Valuation& v);

// Smallest alpha >= 1 with alpha * v(j|S) >= v(j|T) for all S subseteq T,
// j notin T. 0/0 ratios contribute 1; positive over zero yields infinity.
// Computed per item via a subset-minimum sweep; requires monotone v.
double alpha_of(const Valuation& v);

struct CurvatureResult {
  enum class Status { Ok, Undefined };
  Status status = Status::Ok;
  double c = 0.0;
  std::string reason;
};
// Smallest c in [0,1] with v(j|S) >= (1-c) v(j|empty) for all j, S.
// Items whose singleton marginal is zero but later marginal positive make
// the curvature undefined; all-zero marginals are undefined too.
CurvatureResult curvature_of(const Valuation& v);

struct GrossSubstitutesResult {
  bool ok = true;
  ItemSet s, t;  // witness pair violating the exchange condition
  int item = -1;
};
// Discrete exchange test: for all bundles S, T and i in S \ T there is
// j in (T \ S) u {none} with v(S) + v(T) <= v(S-i+j) + v(T+i-j).
// O(4^m m^2); keep m <= 16.
GrossSubstitutesResult is_gross_substitutes(const Valuation& v);

struct SandwichResult {
  bool ok = true;              // lower sandwich base <= v holds
  double eps = 0.0;            // smallest eps with v <= (1+eps) base
  ItemSet violator;            // bundle breaking the lower sandwich
};
// Smallest eps with base(S) <= v(S) <= (1+eps) base(S) for all S.
// ok=false (with the bundle) when some v(S) < base(S) - slack or
// base(S) = 0 < v(S).
SandwichResult epsilon_between(const Valuation& v, const Valuation& base);

struct LinearFit {
  double eps = kInf;
  std::optional<LinearValuation> fitted;
};
// Bisection on eps over [0, 1e6]; each step solves the linear feasibility
// problem  exists c, l >= 0 : c + l(S) <= v(S) <= (1+eps)(c + l(S))  via the
// in-repo simplex on its dual. Bisection tolerance 1e-6. eps = inf when
// even the largest eps is infeasible.
LinearFit fit_linear_closeness(const Valuation& v);

// Minimal pointwise closeness of every per-item marginal function to a
// nonincreasing function; equals alpha_of(v) - 1. Computed by the direct
// definition scan (all nested pairs), so it serves as an independent
// route against alpha_of.
double marginal_decreasing_closeness_scan(const Valuation& v);

}  // namespace wlab
