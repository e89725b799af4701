#include "mdx/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mdx/error.hpp"

namespace mdx {
namespace {

// Dictionary form: x_basic[i] = rhs[i] - sum_j a(i, j) x_nonbasic[j] and
// z = z0 + sum_j cost[j] x_nonbasic[j].
class Dictionary {
 public:
  Dictionary(const LinearProgram& lp, double tol, std::size_t max_iterations)
      : tol_(tol), max_iterations_(max_iterations), num_vars_(lp.num_vars) {
    for (const auto& con : lp.constraints) {
      if (con.coeffs.size() != lp.num_vars) throw std::invalid_argument("constraint width mismatch");
      if (con.sense != ConstraintSense::kGreaterEqual) add_row(con.coeffs, con.rhs, 1.0);
      if (con.sense != ConstraintSense::kLessEqual) add_row(con.coeffs, con.rhs, -1.0);
    }
    rows_ = rhs_.size();
    cols_ = num_vars_;
    for (std::size_t j = 0; j < num_vars_; ++j) nonbasic_.push_back(j);
    for (std::size_t i = 0; i < rows_; ++i) basic_.push_back(num_vars_ + i);
    cost_.assign(cols_, 0.0);
  }

  LpSolution solve(const std::vector<double>& objective) {
    LpSolution sol;
    if (!make_feasible()) {
      sol.status = LpStatus::kInfeasible;
      sol.pivots = pivots_;
      return sol;
    }
    set_objective(objective);
    sol.status = run() ? LpStatus::kOptimal : LpStatus::kUnbounded;
    sol.pivots = pivots_;
    if (sol.status == LpStatus::kOptimal) {
      sol.x.assign(num_vars_, 0.0);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (basic_[i] < num_vars_) sol.x[basic_[i]] = std::max(0.0, rhs_[i]);
      }
      sol.value = 0.0;
      for (std::size_t k = 0; k < num_vars_; ++k) sol.value += objective[k] * sol.x[k];
    }
    return sol;
  }

 private:
  void add_row(const std::vector<double>& coeffs, double rhs, double sign) {
    for (double c : coeffs) a_.push_back(sign * c);
    rhs_.push_back(sign * rhs);
  }

  double& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  void pivot(std::size_t r, std::size_t s) {
    const double inv = 1.0 / at(r, s);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != s) at(r, j) *= inv;
    }
    at(r, s) = inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double factor = at(i, s);
      if (factor == 0.0) continue;
      double* row = &a_[i * cols_];
      const double* prow = &a_[r * cols_];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != s) row[j] -= factor * prow[j];
      }
      row[s] = -factor * inv;
      rhs_[i] -= factor * rhs_[r];
    }
    const double cs = cost_[s];
    if (cs != 0.0) {
      const double* prow = &a_[r * cols_];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != s) cost_[j] -= cs * prow[j];
      }
      cost_[s] = -cs * inv;
      z0_ += cs * rhs_[r];
    }
    std::swap(basic_[r], nonbasic_[s]);
    if (++pivots_ > max_iterations_) throw SolverFailure("simplex iteration cap exceeded");
  }

  // Bland's rule: lowest-index improving column, then lowest-index basic
  // variable among the minimum-ratio rows. Returns false if unbounded.
  bool run() {
    while (true) {
      std::size_t s = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (cost_[j] > tol_ && (s == cols_ || nonbasic_[j] < nonbasic_[s])) s = j;
      }
      if (s == cols_) return true;
      std::size_t r = rows_;
      double best = 0.0;
      for (std::size_t i = 0; i < rows_; ++i) {
        const double coef = at(i, s);
        if (coef <= tol_) continue;
        const double ratio = std::max(0.0, rhs_[i]) / coef;
        if (r == rows_ || ratio < best - tol_ || (ratio <= best + tol_ && basic_[i] < basic_[r])) {
          if (r == rows_ || ratio < best - tol_) best = ratio;
          r = i;
        }
      }
      if (r == rows_) return false;
      pivot(r, s);
    }
  }

  bool make_feasible() {
    std::size_t worst = rows_;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (rhs_[i] < -tol_ && (worst == rows_ || rhs_[i] < rhs_[worst])) worst = i;
    }
    if (worst == rows_) return true;

    // Auxiliary column x0 with coefficient -1 in every row; maximize -x0.
    const std::size_t aux_id = num_vars_ + rows_;
    std::vector<double> widened;
    widened.reserve(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
      widened.insert(widened.end(), a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
      widened.push_back(-1.0);
    }
    a_ = std::move(widened);
    ++cols_;
    nonbasic_.push_back(aux_id);
    cost_.assign(cols_, 0.0);
    cost_[cols_ - 1] = -1.0;
    z0_ = 0.0;

    pivot(worst, cols_ - 1);
    run();
    if (z0_ < -tol_) return false;

    // Drive x0 out of the basis if it is still there (at value ~0).
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basic_[i] != aux_id) continue;
      std::size_t s = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (std::fabs(at(i, j)) > tol_ && (s == cols_ || nonbasic_[j] < nonbasic_[s])) s = j;
      }
      if (s == cols_) {
        // Redundant row: drop it.
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basic_.erase(basic_.begin() + static_cast<std::ptrdiff_t>(i));
        --rows_;
      } else {
        pivot(i, s);
      }
      break;
    }

    const auto aux_col = static_cast<std::size_t>(std::find(nonbasic_.begin(), nonbasic_.end(), aux_id) - nonbasic_.begin());
    std::vector<double> narrowed;
    narrowed.reserve(rows_ * (cols_ - 1));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != aux_col) narrowed.push_back(at(i, j));
      }
    }
    a_ = std::move(narrowed);
    nonbasic_.erase(nonbasic_.begin() + static_cast<std::ptrdiff_t>(aux_col));
    --cols_;
    return true;
  }

  void set_objective(const std::vector<double>& objective) {
    cost_.assign(cols_, 0.0);
    z0_ = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (nonbasic_[j] < num_vars_) cost_[j] += objective[nonbasic_[j]];
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basic_[i] >= num_vars_) continue;
      const double ck = objective[basic_[i]];
      if (ck == 0.0) continue;
      z0_ += ck * rhs_[i];
      for (std::size_t j = 0; j < cols_; ++j) cost_[j] -= ck * at(i, j);
    }
  }

  double tol_;
  std::size_t max_iterations_;
  std::size_t num_vars_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;
  std::vector<double> rhs_;
  std::vector<double> cost_;
  double z0_ = 0.0;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options) {
  if (lp.objective.size() != lp.num_vars) throw std::invalid_argument("objective width mismatch");
  Dictionary dict(lp, options.tolerance, options.max_iterations);
  return dict.solve(lp.objective);
}

}  // namespace mdx
