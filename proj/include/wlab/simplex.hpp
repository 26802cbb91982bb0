#pragma once

#include <vector>

namespace wlab {

// Dense revised simplex for small LPs:
//
//   maximize c.x   subject to  A x <= b,  x >= 0,  b >= 0.
//
// Every LP in this project fits that shape, so the all-slack basis is
// feasible and no phase 1 is needed. Bland's rule guards against cycling
// (the fit LPs are heavily degenerate), and the basis inverse is refreshed
// periodically to contain drift. Row duals are reported alongside the
// primal solution; for <= rows they are nonnegative at optimality.
struct SimplexProblem {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;  // row-major, rows x cols
  std::vector<double> b;  // size rows, all >= 0
  std::vector<double> c;  // size cols

  double& at(int r, int col) { return a[static_cast<std::size_t>(r) * cols + col]; }
  double at(int r, int col) const { return a[static_cast<std::size_t>(r) * cols + col]; }
};

struct SimplexResult {
  enum class Status { Optimal, Unbounded, IterationLimit };
  Status status = Status::Optimal;
  double objective = 0.0;
  std::vector<double> x;      // size cols
  std::vector<double> duals;  // size rows
  long long iterations = 0;
};

struct SimplexOptions {
  double pivot_tol = 1e-10;
  double feas_tol = 1e-9;
  long long max_iterations = 200000;
  int refresh_every = 64;
};

SimplexResult solve_simplex(const SimplexProblem& prob, const SimplexOptions& opts = {});

}  // namespace wlab
