#pragma once

#include "groupinspect/grouping.hpp"

namespace groupinspect {

/// Result of maximizing <T, M> - lambda ||M||_grp over the unit Frobenius ball.
struct PenalizedSolution {
    Matrix m_hat;            ///< unit Frobenius norm unless degenerate (then zero)
    bool degenerate = false; ///< every group-column block was shrunk to zero
    double objective = 0.0;  ///< <T, m_hat> - lambda ||m_hat||_grp
    bool converged = true;   ///< false when an iterative solver hit its cap
    int iterations = 0;      ///< iterations used by an iterative solver
};

/// Group norm: sum over groups g of sqrt(p_g) times the sum of per-column
/// l2 norms of the group's row block.
double group_norm(const Matrix& M, const Grouping& grouping);

/// Dual of the group norm: max over groups g and columns t of
/// p_g^{-1/2} ||R restricted to (group g, column t)||_2.
double group_dual_norm(const Matrix& R, const Grouping& grouping);

/// Closed-form solution for non-overlapping groupings: each group-column
/// block of T is shrunk toward zero,
///
///   D(g, t) = T(g, t) * max{1 - lambda sqrt(p_g) / ||T(g, t)||_2, 0},
///
/// and the result normalized to the unit Frobenius sphere. A block whose
/// norm equals the threshold exactly maps to zero. When every block is
/// shrunk away the solution is flagged degenerate with m_hat = 0.
/// Throws ConfigError for overlapping groupings (use solve_penalized_fw).
PenalizedSolution group_soft_threshold(const Matrix& T, const Grouping& grouping,
                                       double lambda);

} // namespace groupinspect
