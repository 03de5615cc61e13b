#pragma once

#include "groupinspect/groupnorm.hpp"
#include "groupinspect/projection.hpp"

namespace groupinspect {

/// Single change-point estimate.
struct SingleCpResult {
    int z_hat = 0;       ///< estimated change time in [1, n-1]
    double t_max = 0.0;  ///< max_t |v_hat' T_t| (0 when degenerate)
    ProjectionEstimate v_hat;
    bool degenerate = false; ///< solver shrank everything away; z_hat is a placeholder
};

/// Practical penalty level (sigma = 1 after standardization):
/// lambda = (1/2) (1 + sqrt(4 log(n G) / p_star)).
double practical_lambda(int n, int num_groups, int min_group_size, double sigma = 1.0);

/// Conservative penalty level backing the risk guarantee:
/// lambda = sigma (1 + sqrt(4 log(G n) / p_star)).
double theoretical_lambda(int n, int num_groups, int min_group_size, double sigma = 1.0);

/// Full single change-point procedure: CUSUM transform, penalized projection
/// estimate (closed form for non-overlapping groupings, Frank-Wolfe
/// otherwise), leading left singular vector, then
/// z_hat = argmax_t |v_hat' T_t| with ties broken toward the smallest t.
/// A degenerate solver output short-circuits to z_hat = floor(n/2),
/// t_max = 0, degenerate = true.
SingleCpResult single_changepoint(const Matrix& X, const Grouping& grouping, double lambda,
                                  const FwConfig* fw_config = nullptr);

/// Sample-splitting variant: the projection direction is estimated from the
/// odd-indexed time points and the change located on the even-indexed ones;
/// z_hat = 2 argmax_t |v_hat^(1)' T^(2)_t|. With odd n the final column is
/// dropped. Requires n >= 4.
SingleCpResult split_changepoint(const Matrix& X, const Grouping& grouping, double lambda,
                                 const FwConfig* fw_config = nullptr);

} // namespace groupinspect
