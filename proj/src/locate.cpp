#include "groupinspect/locate.hpp"

#include "groupinspect/cusum.hpp"
#include "groupinspect/errors.hpp"
#include "groupinspect/fw_solver.hpp"

#include <cmath>

namespace groupinspect {

double practical_lambda(int n, int num_groups, int min_group_size, double sigma) {
    return 0.5 * sigma *
           (1.0 + std::sqrt(4.0 * std::log(static_cast<double>(n) * num_groups) /
                            static_cast<double>(min_group_size)));
}

double theoretical_lambda(int n, int num_groups, int min_group_size, double sigma) {
    return sigma * (1.0 + std::sqrt(4.0 * std::log(static_cast<double>(num_groups) * n) /
                                    static_cast<double>(min_group_size)));
}

namespace {

PenalizedSolution solve_projection(const Matrix& T, const Grouping& grouping, double lambda,
                                   const FwConfig* fw_config) {
    if (grouping.non_overlapping()) return group_soft_threshold(T, grouping, lambda);
    FwConfig config = fw_config ? *fw_config : FwConfig{};
    config.lambda = lambda;
    return solve_penalized_fw(T, grouping, config);
}

SingleCpResult degenerate_result(Eigen::Index n) {
    SingleCpResult res;
    res.z_hat = static_cast<int>(n / 2);
    res.t_max = 0.0;
    res.degenerate = true;
    return res;
}

// argmax_t |v' T_t| with smallest-t tie break.
std::pair<int, double> projected_argmax(const Vector& v, const Matrix& T) {
    const Eigen::RowVectorXd projected = v.transpose() * T;
    int z_hat = 1;
    double best = -1.0;
    for (Eigen::Index t = 0; t < projected.size(); ++t) {
        const double value = std::abs(projected[t]);
        if (value > best) {
            best = value;
            z_hat = static_cast<int>(t) + 1;
        }
    }
    return {z_hat, best};
}

} // namespace

SingleCpResult single_changepoint(const Matrix& X, const Grouping& grouping, double lambda,
                                  const FwConfig* fw_config) {
    if (lambda < 0.0) throw ConfigError("single_changepoint: lambda must be >= 0");
    const Matrix T = cusum_transform(X);
    if (T.norm() == 0.0) return degenerate_result(X.cols());

    const PenalizedSolution sol = solve_projection(T, grouping, lambda, fw_config);
    if (sol.degenerate) return degenerate_result(X.cols());

    SingleCpResult res;
    res.v_hat = leading_left_singular_vector(sol.m_hat);
    std::tie(res.z_hat, res.t_max) = projected_argmax(res.v_hat.v_hat, T);
    return res;
}

SingleCpResult split_changepoint(const Matrix& X, const Grouping& grouping, double lambda,
                                 const FwConfig* fw_config) {
    if (lambda < 0.0) throw ConfigError("split_changepoint: lambda must be >= 0");
    const Eigen::Index n = X.cols();
    if (n < 4) throw ConfigError("split_changepoint: need n >= 4 time points");
    const Eigen::Index n1 = n / 2; // odd n drops the final column

    Matrix odd(X.rows(), n1), even(X.rows(), n1);
    for (Eigen::Index t = 0; t < n1; ++t) {
        odd.col(t) = X.col(2 * t);
        even.col(t) = X.col(2 * t + 1);
    }

    const Matrix t_odd = cusum_transform(odd);
    if (t_odd.norm() == 0.0) return degenerate_result(n);
    const PenalizedSolution sol = solve_projection(t_odd, grouping, lambda, fw_config);
    if (sol.degenerate) return degenerate_result(n);

    SingleCpResult res;
    res.v_hat = leading_left_singular_vector(sol.m_hat);
    const Matrix t_even = cusum_transform(even);
    const auto [local, t_max] = projected_argmax(res.v_hat.v_hat, t_even);
    res.z_hat = 2 * local;
    res.t_max = t_max;
    return res;
}

} // namespace groupinspect
