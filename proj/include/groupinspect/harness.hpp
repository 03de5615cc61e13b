#pragma once

#include "groupinspect/model.hpp"
#include "groupinspect/segment.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace groupinspect::harness {

enum class Method { GroupInspect, Inspect, L2Aggregate, LinfAggregate };

std::string method_name(Method method);

/// One standardized replicate: generate from the scenario, rescale rows by
/// their estimated noise level, locate the change with the given method.
/// loss is the sin-angle against the scenario's first oracle direction
/// (NaN for the aggregation baselines, which estimate no direction).
struct SingleEval {
    int z_hat = 0;
    double abs_error = 0.0;
    double loss = std::numeric_limits<double>::quiet_NaN();
};
SingleEval evaluate_single(const ChangeScenario& scenario, std::uint64_t seed,
                           Method method, double lambda);

/// Multi change-point scenario used by the segmentation experiments:
/// changes at the given times, all on the support of `unit`, with
/// magnitudes `norms` and alternating signs.
ChangeScenario multi_change_scenario(int n, Grouping grouping, std::vector<int> change_times,
                                     const std::vector<double>& norms, const Vector& unit,
                                     double sigma);

// --- loss versus group size -------------------------------------------------

struct PstarParams {
    int n = 1000;
    int p = 600;
    int z = 400;
    double vartheta = 8.0;
    int p_star_base = 60; ///< group sizes sweep over the divisors of this
    int fixed_k = 60;     ///< active coordinates when variant = "fix_k" (0 disables)
    int fixed_s = 0;      ///< active groups when variant = "fix_s" (0 disables)
    bool theoretical = true; ///< penalty rule for this experiment
    int reps = 100;
    std::uint64_t seed = 1;
    int threads = 0;
};

struct PstarRow {
    std::string variant;
    int p_star = 0, s = 0, k = 0, rep = 0;
    std::uint64_t seed = 0;
    double vartheta = 0.0, loss = 0.0;
};

/// Sweeps p_star over the divisors of fixed_k (variant "fix_k") and/or the
/// divisors of p / fixed-s-compatible sizes (variant "fix_s"); group sizes
/// must divide p. Rows are ordered by variant, then p_star, then replicate.
std::vector<PstarRow> run_pstar(const PstarParams& params);

// --- loss versus penalty level ----------------------------------------------

struct LambdaSweepParams {
    int n = 1000;
    int p = 500;
    int num_groups = 10;
    int s = 3;
    int z = 400;
    std::vector<double> varthetas = {1, 2, 4, 8, 16};
    int grid_size = 7;           ///< log-spaced multipliers
    double multiplier_lo = 0.1;
    double multiplier_hi = 3.0;
    int reps = 100;
    std::uint64_t seed = 1;
    int threads = 0;
};

struct LambdaSweepRow {
    double vartheta = 0.0;
    int multiplier_index = 0;
    double multiplier = 0.0, lambda = 0.0;
    int rep = 0;
    std::uint64_t seed = 0;
    double loss = 0.0;
};

std::vector<LambdaSweepRow> run_lambda_sweep(const LambdaSweepParams& params);

// --- method comparison --------------------------------------------------------

struct CompareParams {
    int n = 1000;
    int num_groups = 10;
    int s = 3;
    int z = 400;
    std::vector<int> ps = {500, 1000, 2000};
    std::vector<double> varthetas = {0.25, 0.5, 1, 2, 4};
    std::vector<Method> methods = {Method::GroupInspect, Method::Inspect,
                                   Method::L2Aggregate, Method::LinfAggregate};
    int reps = 100;
    std::uint64_t seed = 1;
    int threads = 0;
};

struct CompareRow {
    int p = 0;
    double vartheta = 0.0;
    Method method = Method::GroupInspect;
    int rep = 0;
    std::uint64_t seed = 0;
    int z_hat = 0;
    double abs_error = 0.0;
    double loss = std::numeric_limits<double>::quiet_NaN();
};

/// All methods see the same generated panel within a (p, vartheta, rep) cell.
std::vector<CompareRow> run_compare(const CompareParams& params);

// --- multiple change points ----------------------------------------------------

struct MultiParams {
    int n = 1200;
    int p = 500;
    int num_groups = 50;
    int s = 3;
    std::vector<double> varthetas = {0.6, 0.8, 1.0, 1.2, 1.4};
    int num_intervals = 1000; ///< WBS Q
    int n_null = 1000;        ///< calibration replicates
    double quantile = 1.0;
    int reps = 100;
    std::uint64_t seed = 1;
    int threads = 0;
};

struct MultiRow {
    double vartheta = 0.0;
    int rep = 0;
    std::uint64_t seed = 0;
    double ari = 0.0;
    int detected = 0;
};

struct MultiResult {
    double xi = 0.0; ///< calibrated threshold shared by all cells
    std::vector<int> change_times;
    std::vector<MultiRow> rows;
};

MultiResult run_multi(const MultiParams& params);

} // namespace groupinspect::harness
