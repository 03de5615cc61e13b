#include "groupinspect/preprocess.hpp"

#include "groupinspect/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace groupinspect {

RowScale estimate_row_sd(const Matrix& X) {
    const auto p = X.rows();
    const auto n = X.cols();
    if (n < 3) throw ConfigError("estimate_row_sd: need n >= 3 time points");

    const double factor = std::sqrt(std::numbers::pi) / 2.0;
    Vector sigma_hat(p);
    for (Eigen::Index j = 0; j < p; ++j) {
        double sum = 0.0;
        for (Eigen::Index t = 0; t + 1 < n; ++t) sum += std::abs(X(j, t + 1) - X(j, t));
        const double sd = factor * sum / static_cast<double>(n - 1);
        if (sd == 0.0)
            throw NumericalError("estimate_row_sd: row " + std::to_string(j + 1) +
                                 " is constant; its noise scale cannot be estimated");
        if (!std::isfinite(sd))
            throw NumericalError("estimate_row_sd: row " + std::to_string(j + 1) +
                                 " contains non-finite values");
        sigma_hat[j] = sd;
    }
    return RowScale{std::move(sigma_hat)};
}

Matrix standardize(const Matrix& X, const RowScale& scale) {
    if (scale.sigma_hat.size() != X.rows())
        throw ConfigError("standardize: scale length does not match row count");
    if (!(scale.sigma_hat.array() > 0.0).all())
        throw ConfigError("standardize: scales must be strictly positive");
    return scale.sigma_hat.cwiseInverse().asDiagonal() * X;
}

} // namespace groupinspect
