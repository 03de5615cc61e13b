#pragma once

#include "groupinspect/groupnorm.hpp"

namespace groupinspect {

/// Frank-Wolfe settings. The per-group penalty weights are
/// lambda_g = sqrt(p_g) * lambda.
struct FwConfig {
    double lambda = 0.0;
    double epsilon = 1e-6; ///< stop when the iterate displacement falls below this
    int max_iter = 500;
};

/// Frank-Wolfe iteration for <T, M> - lambda ||M||_grp over the unit
/// Frobenius ball; handles overlapping groupings. Starts from T/||T||_F;
/// at step t forms the generalized gradient
///
///   G(j, c) = T(j, c) - sum over groups g containing j of
///             lambda_g M(j, c) / ||M restricted to (group g, column c)||_2
///
/// (a zero-norm block contributes 0), takes the convex combination
/// (t/(t+2)) M + (2/(t+2)) G/||G||_F and renormalizes onto the unit sphere.
/// Stops when the displacement drops to config.epsilon, the gradient
/// vanishes, or max_iter is reached (then converged = false). Returns the
/// iterate with the best objective seen, so the reported objective is
/// non-decreasing in max_iter. Throws NumericalError when ||T||_F = 0.
PenalizedSolution solve_penalized_fw(const Matrix& T, const Grouping& grouping,
                                     const FwConfig& config);

} // namespace groupinspect
