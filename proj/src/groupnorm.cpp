#include "groupinspect/groupnorm.hpp"

#include "groupinspect/errors.hpp"

#include <algorithm>
#include <cmath>

namespace groupinspect {

namespace {

double block_norm(const Matrix& M, const std::vector<int>& idx, Eigen::Index t) {
    double ss = 0.0;
    for (int j : idx) {
        const double v = M(j, t);
        ss += v * v;
    }
    return std::sqrt(ss);
}

void check_dims(const Matrix& M, const Grouping& grouping, const char* op) {
    if (M.rows() != grouping.dimension())
        throw ConfigError(std::string(op) + ": matrix rows do not match grouping dimension");
}

} // namespace

double group_norm(const Matrix& M, const Grouping& grouping) {
    check_dims(M, grouping, "group_norm");
    double total = 0.0;
    for (int g = 0; g < grouping.num_groups(); ++g) {
        const auto& idx = grouping.group(g);
        const double weight = std::sqrt(static_cast<double>(idx.size()));
        double sum = 0.0;
        for (Eigen::Index t = 0; t < M.cols(); ++t) sum += block_norm(M, idx, t);
        total += weight * sum;
    }
    return total;
}

double group_dual_norm(const Matrix& R, const Grouping& grouping) {
    check_dims(R, grouping, "group_dual_norm");
    double best = 0.0;
    for (int g = 0; g < grouping.num_groups(); ++g) {
        const auto& idx = grouping.group(g);
        const double inv_weight = 1.0 / std::sqrt(static_cast<double>(idx.size()));
        for (Eigen::Index t = 0; t < R.cols(); ++t)
            best = std::max(best, inv_weight * block_norm(R, idx, t));
    }
    return best;
}

PenalizedSolution group_soft_threshold(const Matrix& T, const Grouping& grouping,
                                       double lambda) {
    check_dims(T, grouping, "group_soft_threshold");
    if (!grouping.non_overlapping())
        throw ConfigError("group_soft_threshold: grouping has overlapping groups; "
                          "use solve_penalized_fw instead");
    if (lambda < 0.0) throw ConfigError("group_soft_threshold: lambda must be >= 0");

    Matrix D(T.rows(), T.cols());
    D.setZero();
    for (int g = 0; g < grouping.num_groups(); ++g) {
        const auto& idx = grouping.group(g);
        const double threshold = lambda * std::sqrt(static_cast<double>(idx.size()));
        for (Eigen::Index t = 0; t < T.cols(); ++t) {
            const double norm = block_norm(T, idx, t);
            if (norm > threshold) {
                const double factor = 1.0 - threshold / norm;
                for (int j : idx) D(j, t) = factor * T(j, t);
            }
        }
    }

    const double fro = D.norm();
    PenalizedSolution sol;
    if (fro == 0.0) {
        sol.m_hat = Matrix::Zero(T.rows(), T.cols());
        sol.degenerate = true;
        sol.objective = 0.0;
        return sol;
    }
    sol.m_hat = D / fro;
    sol.objective = (T.array() * sol.m_hat.array()).sum() - lambda * group_norm(sol.m_hat, grouping);
    return sol;
}

} // namespace groupinspect
