#include "groupinspect/projection.hpp"

#include "groupinspect/errors.hpp"
#include "groupinspect/rng.hpp"

#include <cmath>

namespace groupinspect {

namespace {

void fix_sign(Vector& v) {
    Eigen::Index lead = 0;
    double best = -1.0;
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        const double mag = std::abs(v[j]);
        if (mag > best) {
            best = mag;
            lead = j;
        }
    }
    if (v[lead] < 0.0) v = -v;
}

} // namespace

ProjectionEstimate leading_left_singular_vector(const Matrix& M, double tol, int max_iter) {
    if (M.size() == 0 || M.norm() == 0.0)
        throw NumericalError("leading_left_singular_vector: zero matrix has no direction");
    if (!(tol > 0.0)) throw ConfigError("leading_left_singular_vector: tol must be > 0");
    if (max_iter < 1) throw ConfigError("leading_left_singular_vector: max_iter must be >= 1");

    // Seed the right vector with the largest-norm row of M.
    Eigen::Index seed_row = 0;
    double best_norm = -1.0;
    for (Eigen::Index j = 0; j < M.rows(); ++j) {
        const double norm = M.row(j).norm();
        if (norm > best_norm) {
            best_norm = norm;
            seed_row = j;
        }
    }
    Vector u = M.row(seed_row).transpose() / best_norm;
    Vector v = M * u;
    if (v.norm() == 0.0) {
        // The deterministic start was annihilated; restart from a fixed
        // random direction.
        Rng rng(0x9e3779b97f4a7c15ULL);
        do {
            for (Eigen::Index j = 0; j < u.size(); ++j) u[j] = rng.gaussian();
            u /= u.norm();
            v = M * u;
        } while (v.norm() == 0.0);
    }
    v /= v.norm();

    ProjectionEstimate est;
    est.converged = false;
    est.residual = std::numeric_limits<double>::infinity();
    for (int it = 1; it <= max_iter; ++it) {
        est.iterations_used = it;
        u = M.transpose() * v;
        u /= u.norm();
        Vector next = M * u;
        next /= next.norm();
        est.residual = (next - v).norm();
        v = std::move(next);
        if (est.residual <= tol) {
            est.converged = true;
            break;
        }
    }
    fix_sign(v);
    est.v_hat = std::move(v);
    return est;
}

} // namespace groupinspect
