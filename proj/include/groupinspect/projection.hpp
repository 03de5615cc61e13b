#pragma once

#include "groupinspect/grouping.hpp"

namespace groupinspect {

/// Leading left singular vector estimate.
struct ProjectionEstimate {
    Vector v_hat;            ///< unit vector; entry of largest magnitude is >= 0
    int iterations_used = 0;
    double residual = 0.0;   ///< final ||v_k - v_{k-1}||_2
    bool converged = true;
};

/// Power iteration on M M^T, applied implicitly by alternating
/// u <- M^T v / ||.|| and v <- M u / ||.||. Starts from the row of M with
/// the largest l2 norm (as the right-vector seed); if that start is
/// annihilated, falls back to a seeded random direction. Converged when
/// successive v iterates differ by at most tol in l2. The sign is fixed so
/// that the entry of v with the largest magnitude (smallest index on ties)
/// is nonnegative. Throws NumericalError on a zero matrix; a tie between
/// the top two singular values may leave converged = false.
ProjectionEstimate leading_left_singular_vector(const Matrix& M, double tol = 1e-10,
                                                int max_iter = 1000);

} // namespace groupinspect
