#pragma once

#include <cstddef>
#include <vector>

namespace mdx {

enum class ConstraintSense { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  std::vector<double> coeffs;  ///< dense, one entry per variable
  ConstraintSense sense = ConstraintSense::kLessEqual;
  double rhs = 0.0;
};

/// maximize objective . x  subject to constraints, x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<double> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { kOptimal, kUnbounded, kInfeasible };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
  std::vector<double> x;
  std::size_t pivots = 0;
};

struct SimplexOptions {
  double tolerance = 1e-9;
  std::size_t max_iterations = 1'000'000;
};

/// Dense two-phase primal simplex with Bland's rule. Phase one adds a single
/// auxiliary variable to reach a feasible dictionary. Throws SolverFailure
/// when the iteration cap is hit.
LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace mdx
