#pragma once

#include "groupinspect/grouping.hpp"

namespace groupinspect {

/// Per-row noise scale estimates, all strictly positive.
struct RowScale {
    Vector sigma_hat;
};

/// Estimates each row's noise standard deviation from the mean absolute
/// successive difference: sigma_hat_j = (sqrt(pi)/2) * mean_t |X_{j,t+1} - X_{j,t}|.
/// Under i.i.d. N(mu_j, sigma^2) rows the differences are N(0, 2 sigma^2)
/// with E|diff| = 2 sigma / sqrt(pi), so the estimator is consistent for sigma.
/// Requires n >= 3; throws NumericalError naming the row if a row is constant.
RowScale estimate_row_sd(const Matrix& X);

/// Divides each row by its scale. Throws ConfigError on dimension mismatch
/// or non-positive scales.
Matrix standardize(const Matrix& X, const RowScale& scale);

} // namespace groupinspect
