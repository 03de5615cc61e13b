#include "groupinspect/baselines.hpp"

#include "groupinspect/cusum.hpp"

#include <cmath>

namespace groupinspect {

double inspect_lambda(int n, int p) {
    return std::sqrt(0.5 * std::log(static_cast<double>(p) * std::log(static_cast<double>(n))));
}

SingleCpResult inspect_single(const Matrix& X) {
    const int n = static_cast<int>(X.cols());
    const int p = static_cast<int>(X.rows());
    return single_changepoint(X, Grouping::singletons(p), inspect_lambda(n, p));
}

namespace {

template <typename ColumnStat>
BaselineResult aggregate_argmax(const Matrix& X, ColumnStat stat) {
    const Matrix T = cusum_transform(X);
    BaselineResult res{1, -1.0};
    for (Eigen::Index t = 0; t < T.cols(); ++t) {
        const double value = stat(T.col(t));
        if (value > res.statistic) {
            res.statistic = value;
            res.z_hat = static_cast<int>(t) + 1;
        }
    }
    return res;
}

} // namespace

BaselineResult l2_aggregate(const Matrix& X) {
    return aggregate_argmax(X, [](const auto& col) { return col.norm(); });
}

BaselineResult linf_aggregate(const Matrix& X) {
    return aggregate_argmax(X, [](const auto& col) { return col.cwiseAbs().maxCoeff(); });
}

} // namespace groupinspect
