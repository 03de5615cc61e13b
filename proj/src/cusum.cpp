#include "groupinspect/cusum.hpp"

#include "groupinspect/errors.hpp"

#include <cmath>

namespace groupinspect {

Matrix cusum_transform(const Matrix& X, bool compensated) {
    const auto p = X.rows();
    const auto n = X.cols();
    if (n < 2) throw ConfigError("cusum_transform: need n >= 2 time points");

    Matrix T(p, n - 1);
    Vector prefix = Vector::Zero(p);
    Vector total(p);
    if (compensated) {
        Vector comp = Vector::Zero(p);
        for (Eigen::Index t = 0; t < n; ++t) {
            const Vector y = X.col(t) - comp;
            const Vector s = prefix + y;
            comp = (s - prefix) - y;
            prefix = s;
        }
    } else {
        for (Eigen::Index t = 0; t < n; ++t) prefix += X.col(t);
    }
    total = prefix;

    prefix.setZero();
    Vector comp = Vector::Zero(p);
    const double nd = static_cast<double>(n);
    for (Eigen::Index t = 1; t < n; ++t) {
        if (compensated) {
            const Vector y = X.col(t - 1) - comp;
            const Vector s = prefix + y;
            comp = (s - prefix) - y;
            prefix = s;
        } else {
            prefix += X.col(t - 1);
        }
        const double td = static_cast<double>(t);
        const double scale = std::sqrt(td * (nd - td) / nd);
        T.col(t - 1) = scale * ((total - prefix) / (nd - td) - prefix / td);
    }
    return T;
}

} // namespace groupinspect
