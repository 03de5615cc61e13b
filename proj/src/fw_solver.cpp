#include "groupinspect/fw_solver.hpp"

#include "groupinspect/errors.hpp"

#include <cmath>

namespace groupinspect {

namespace {

// T - sum over groups of the per-block subgradient of lambda ||M||_grp.
Matrix penalized_gradient(const Matrix& T, const Matrix& M, const Grouping& grouping,
                          double lambda) {
    Matrix G = T;
    for (int g = 0; g < grouping.num_groups(); ++g) {
        const auto& idx = grouping.group(g);
        const double lambda_g = lambda * std::sqrt(static_cast<double>(idx.size()));
        for (Eigen::Index c = 0; c < M.cols(); ++c) {
            double ss = 0.0;
            for (int j : idx) ss += M(j, c) * M(j, c);
            if (ss == 0.0) continue; // zero block: subgradient contribution 0
            const double scale = lambda_g / std::sqrt(ss);
            for (int j : idx) G(j, c) -= scale * M(j, c);
        }
    }
    return G;
}

} // namespace

PenalizedSolution solve_penalized_fw(const Matrix& T, const Grouping& grouping,
                                     const FwConfig& config) {
    if (T.rows() != grouping.dimension())
        throw ConfigError("solve_penalized_fw: matrix rows do not match grouping dimension");
    if (config.lambda < 0.0) throw ConfigError("solve_penalized_fw: lambda must be >= 0");
    if (!(config.epsilon > 0.0)) throw ConfigError("solve_penalized_fw: epsilon must be > 0");
    if (config.max_iter < 1) throw ConfigError("solve_penalized_fw: max_iter must be >= 1");

    const double t_fro = T.norm();
    if (t_fro == 0.0)
        throw NumericalError("solve_penalized_fw: ||T||_F = 0, initialization undefined");

    const auto objective_of = [&](const Matrix& M) {
        return (T.array() * M.array()).sum() - config.lambda * group_norm(M, grouping);
    };

    Matrix M = T / t_fro;
    Matrix best = M;
    double best_objective = objective_of(M);

    PenalizedSolution sol;
    sol.converged = false;
    for (int t = 1; t <= config.max_iter; ++t) {
        sol.iterations = t;
        const Matrix G = penalized_gradient(T, M, grouping, config.lambda);
        const double g_fro = G.norm();
        if (g_fro == 0.0) {
            sol.converged = true;
            break;
        }
        const double td = static_cast<double>(t);
        Matrix next = (td / (td + 2.0)) * M + (2.0 / (td + 2.0)) * (G / g_fro);
        next /= next.norm();

        const double obj = objective_of(next);
        if (obj > best_objective) {
            best_objective = obj;
            best = next;
        }
        const double displacement = (next - M).norm();
        M = std::move(next);
        if (displacement <= config.epsilon) {
            sol.converged = true;
            break;
        }
    }

    sol.m_hat = std::move(best);
    sol.objective = best_objective;
    return sol;
}

} // namespace groupinspect
