#pragma once

#include "groupinspect/locate.hpp"

namespace groupinspect {

/// Location estimate from an aggregated CUSUM statistic.
struct BaselineResult {
    int z_hat = 0;
    double statistic = 0.0;
};

/// Penalty level of the sparse (non-grouped) projection estimator:
/// sqrt(log(p log n) / 2).
double inspect_lambda(int n, int p);

/// The sparse projection estimator: delegates to single_changepoint with the
/// singleton grouping {1},...,{p} and lambda = inspect_lambda(n, p).
SingleCpResult inspect_single(const Matrix& X);

/// z_hat = argmax_t ||T_t||_2 over the CUSUM columns (smallest-t ties).
BaselineResult l2_aggregate(const Matrix& X);

/// z_hat = argmax_t max_j |T_{j,t}| over the CUSUM columns (smallest-t ties).
BaselineResult linf_aggregate(const Matrix& X);

} // namespace groupinspect
