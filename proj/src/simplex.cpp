#include "wlab/simplex.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wlab {

namespace {

// Variables 0..cols-1 are structural, cols..cols+rows-1 are slacks.
class RevisedSimplex {
 public:
  RevisedSimplex(const SimplexProblem& p, const SimplexOptions& o)
      : p_(p), o_(o), rows_(p.rows), cols_(p.cols) {
    basis_.resize(rows_);
    in_basis_.assign(cols_ + rows_, false);
    for (int r = 0; r < rows_; ++r) {
      basis_[r] = cols_ + r;
      in_basis_[cols_ + r] = true;
    }
    binv_.assign(static_cast<std::size_t>(rows_) * rows_, 0.0);
    for (int r = 0; r < rows_; ++r) binv(r, r) = 1.0;
    xb_ = p_.b;
  }

  SimplexResult run() {
    SimplexResult res;
    std::vector<double> y(rows_), w(rows_);
    long long since_refresh = 0;
    long long stalled = 0;  // consecutive degenerate pivots
    while (true) {
      if (res.iterations >= o_.max_iterations) {
        res.status = SimplexResult::Status::IterationLimit;
        break;
      }
      compute_duals(y);
      // Dantzig pricing normally; fall back to Bland's rule after a long
      // degenerate stall so cycling is impossible.
      const bool bland = stalled > 4 * rows_ + 64;
      int entering = -1;
      double best_rc = o_.pivot_tol;
      for (int j = 0; j < cols_ + rows_; ++j) {
        if (in_basis_[j]) continue;
        double rc = reduced_cost(j, y);
        if (rc > best_rc) {
          entering = j;
          if (bland) break;
          best_rc = rc;
        }
      }
      if (entering < 0) {
        res.status = SimplexResult::Status::Optimal;
        break;
      }
      column_direction(entering, w);
      int leave_pos = -1;
      double best_ratio = 0.0;
      for (int r = 0; r < rows_; ++r) {
        if (w[r] > o_.pivot_tol) {
          double ratio = xb_[r] / w[r];
          if (leave_pos < 0 || ratio < best_ratio - 1e-15 ||
              (std::fabs(ratio - best_ratio) <= 1e-15 &&
               basis_[r] < basis_[leave_pos])) {
            leave_pos = r;
            best_ratio = ratio;
          }
        }
      }
      if (leave_pos < 0) {
        res.status = SimplexResult::Status::Unbounded;
        break;
      }
      stalled = best_ratio <= o_.feas_tol ? stalled + 1 : 0;
      pivot(entering, leave_pos, w, best_ratio);
      ++res.iterations;
      if (++since_refresh >= o_.refresh_every) {
        refresh_inverse();
        since_refresh = 0;
      }
    }

    res.x.assign(cols_, 0.0);
    for (int r = 0; r < rows_; ++r)
      if (basis_[r] < cols_) res.x[basis_[r]] = xb_[r];
    res.objective = 0.0;
    for (int j = 0; j < cols_; ++j) res.objective += p_.c[j] * res.x[j];
    compute_duals(y);
    res.duals = y;
    return res;
  }

 private:
  double& binv(int r, int c) { return binv_[static_cast<std::size_t>(r) * rows_ + c]; }
  double binv(int r, int c) const { return binv_[static_cast<std::size_t>(r) * rows_ + c]; }

  double cost_of(int var) const { return var < cols_ ? p_.c[var] : 0.0; }

  // Column of [A | I] for a variable.
  double a_entry(int r, int var) const {
    return var < cols_ ? p_.at(r, var) : (var - cols_ == r ? 1.0 : 0.0);
  }

  void compute_duals(std::vector<double>& y) const {
    for (int c = 0; c < rows_; ++c) {
      double acc = 0.0;
      for (int r = 0; r < rows_; ++r) acc += cost_of(basis_[r]) * binv(r, c);
      y[c] = acc;
    }
  }

  double reduced_cost(int var, const std::vector<double>& y) const {
    double acc = cost_of(var);
    if (var >= cols_) return acc - y[var - cols_];
    for (int r = 0; r < rows_; ++r) {
      double arj = p_.at(r, var);
      if (arj != 0.0) acc -= y[r] * arj;
    }
    return acc;
  }

  void column_direction(int var, std::vector<double>& w) const {
    for (int r = 0; r < rows_; ++r) {
      double acc = 0.0;
      if (var >= cols_) {
        acc = binv(r, var - cols_);
      } else {
        for (int k = 0; k < rows_; ++k) {
          double akj = p_.at(k, var);
          if (akj != 0.0) acc += binv(r, k) * akj;
        }
      }
      w[r] = acc;
    }
  }

  void pivot(int entering, int leave_pos, const std::vector<double>& w,
             double ratio) {
    const double piv = w[leave_pos];
    for (int r = 0; r < rows_; ++r) {
      if (r == leave_pos) continue;
      xb_[r] -= ratio * w[r];
      if (xb_[r] < 0.0 && xb_[r] > -o_.feas_tol) xb_[r] = 0.0;
    }
    xb_[leave_pos] = ratio;
    for (int c = 0; c < rows_; ++c) binv(leave_pos, c) /= piv;
    for (int r = 0; r < rows_; ++r) {
      if (r == leave_pos) continue;
      double f = w[r];
      if (f == 0.0) continue;
      for (int c = 0; c < rows_; ++c) binv(r, c) -= f * binv(leave_pos, c);
    }
    in_basis_[basis_[leave_pos]] = false;
    basis_[leave_pos] = entering;
    in_basis_[entering] = true;
  }

  // Recompute binv_ from scratch by Gaussian elimination on the basis
  // matrix, then rederive xb_.
  void refresh_inverse() {
    std::vector<double> mat(static_cast<std::size_t>(rows_) * rows_);
    std::vector<double> inv(static_cast<std::size_t>(rows_) * rows_, 0.0);
    for (int r = 0; r < rows_; ++r) {
      inv[static_cast<std::size_t>(r) * rows_ + r] = 1.0;
      for (int c = 0; c < rows_; ++c)
        mat[static_cast<std::size_t>(r) * rows_ + c] = a_entry(r, basis_[c]);
    }
    auto M = [&](std::vector<double>& v, int r, int c) -> double& {
      return v[static_cast<std::size_t>(r) * rows_ + c];
    };
    for (int col = 0; col < rows_; ++col) {
      int piv = col;
      for (int r = col + 1; r < rows_; ++r)
        if (std::fabs(M(mat, r, col)) > std::fabs(M(mat, piv, col))) piv = r;
      if (std::fabs(M(mat, piv, col)) < 1e-14)
        throw std::runtime_error("simplex basis became singular");
      if (piv != col)
        for (int c = 0; c < rows_; ++c) {
          std::swap(M(mat, piv, c), M(mat, col, c));
          std::swap(M(inv, piv, c), M(inv, col, c));
        }
      double d = M(mat, col, col);
      for (int c = 0; c < rows_; ++c) {
        M(mat, col, c) /= d;
        M(inv, col, c) /= d;
      }
      for (int r = 0; r < rows_; ++r) {
        if (r == col) continue;
        double f = M(mat, r, col);
        if (f == 0.0) continue;
        for (int c = 0; c < rows_; ++c) {
          M(mat, r, c) -= f * M(mat, col, c);
          M(inv, r, c) -= f * M(inv, col, c);
        }
      }
    }
    binv_ = std::move(inv);
    for (int r = 0; r < rows_; ++r) {
      double acc = 0.0;
      for (int c = 0; c < rows_; ++c) acc += binv(r, c) * p_.b[c];
      xb_[r] = acc < 0.0 && acc > -o_.feas_tol ? 0.0 : acc;
    }
  }

  const SimplexProblem& p_;
  const SimplexOptions& o_;
  int rows_, cols_;
  std::vector<int> basis_;
  std::vector<bool> in_basis_;
  std::vector<double> binv_;
  std::vector<double> xb_;
};

}  // namespace

SimplexResult solve_simplex(const SimplexProblem& prob, const SimplexOptions& opts) {
  for (double bi : prob.b)
    if (bi < 0.0)
      throw std::invalid_argument("simplex requires b >= 0 (all-slack start)");
  if (prob.a.size() != static_cast<std::size_t>(prob.rows) * prob.cols ||
      prob.b.size() != static_cast<std::size_t>(prob.rows) ||
      prob.c.size() != static_cast<std::size_t>(prob.cols))
    throw std::invalid_argument("simplex problem dimensions are inconsistent");
  RevisedSimplex s(prob, opts);
  return s.run();
}

}  // namespace wlab
