#include "groupinspect/harness.hpp"

#include "groupinspect/baselines.hpp"
#include "groupinspect/errors.hpp"
#include "groupinspect/metrics.hpp"
#include "groupinspect/parallel.hpp"
#include "groupinspect/preprocess.hpp"

#include <cmath>

namespace groupinspect::harness {

namespace {

// Seed block reserved for threshold calibration, away from replicate seeds.
constexpr std::uint64_t kCalibrationSeedOffset = 0x10000000ULL;

std::vector<int> divisors(int value) {
    std::vector<int> divs;
    for (int d = 1; d <= value; ++d)
        if (value % d == 0) divs.push_back(d);
    return divs;
}

} // namespace

std::string method_name(Method method) {
    switch (method) {
        case Method::GroupInspect: return "groupinspect";
        case Method::Inspect: return "inspect";
        case Method::L2Aggregate: return "l2";
        case Method::LinfAggregate: return "linf";
    }
    return "unknown";
}

SingleEval evaluate_single(const ChangeScenario& scenario, std::uint64_t seed,
                           Method method, double lambda) {
    if (scenario.num_changes() != 1)
        throw ConfigError("evaluate_single: scenario must have exactly one change");
    const Matrix X = generate_data(scenario, seed);
    const Matrix Xs = standardize(X, estimate_row_sd(X));
    const int z = scenario.change_times.front();

    SingleEval eval;
    switch (method) {
        case Method::GroupInspect: {
            const SingleCpResult res = single_changepoint(Xs, scenario.grouping, lambda);
            eval.z_hat = res.z_hat;
            if (!res.degenerate)
                eval.loss = sin_angle_loss(res.v_hat.v_hat, scenario.oracle_direction(1));
            else
                eval.loss = 1.0;
            break;
        }
        case Method::Inspect: {
            const SingleCpResult res = inspect_single(Xs);
            eval.z_hat = res.z_hat;
            if (!res.degenerate)
                eval.loss = sin_angle_loss(res.v_hat.v_hat, scenario.oracle_direction(1));
            else
                eval.loss = 1.0;
            break;
        }
        case Method::L2Aggregate:
            eval.z_hat = l2_aggregate(Xs).z_hat;
            break;
        case Method::LinfAggregate:
            eval.z_hat = linf_aggregate(Xs).z_hat;
            break;
    }
    eval.abs_error = std::abs(eval.z_hat - z);
    return eval;
}

ChangeScenario multi_change_scenario(int n, Grouping grouping, std::vector<int> change_times,
                                     const std::vector<double>& norms, const Vector& unit,
                                     double sigma) {
    if (norms.size() != change_times.size())
        throw ConfigError("multi_change_scenario: one norm per change time required");
    const int p = grouping.dimension();
    std::vector<Vector> levels;
    levels.push_back(Vector::Zero(p));
    for (std::size_t i = 0; i < norms.size(); ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        levels.push_back(levels.back() + sign * norms[i] * unit);
    }
    ChangeScenario sc{n, p, std::move(grouping), std::move(change_times),
                      std::move(levels), sigma};
    sc.validate();
    return sc;
}

std::vector<PstarRow> run_pstar(const PstarParams& params) {
    if (params.reps < 0) throw ConfigError("run_pstar: reps must be >= 0");
    if (params.fixed_k <= 0 && params.fixed_s <= 0)
        throw ConfigError("run_pstar: set fixed_k and/or fixed_s");

    struct Cell {
        std::string variant;
        int p_star, s, k;
    };
    std::vector<Cell> cells;
    if (params.fixed_k > 0) {
        for (int p_star : divisors(params.p_star_base)) {
            if (params.p % p_star != 0 || params.fixed_k % p_star != 0) continue;
            cells.push_back({"fix_k", p_star, params.fixed_k / p_star, params.fixed_k});
        }
    }
    if (params.fixed_s > 0) {
        for (int p_star : divisors(params.p_star_base)) {
            if (params.p % p_star != 0) continue;
            cells.push_back({"fix_s", p_star, params.fixed_s, params.fixed_s * p_star});
        }
    }

    std::vector<PstarRow> rows(cells.size() * static_cast<std::size_t>(params.reps));
    parallel_for(rows.size(), params.threads, [&](std::size_t i) {
        const auto& cell = cells[i / static_cast<std::size_t>(params.reps)];
        const int rep = static_cast<int>(i % static_cast<std::size_t>(params.reps));
        const Grouping grouping = Grouping::contiguous_blocks(params.p, cell.p_star);
        const Vector theta =
            make_theta(params.p, grouping, cell.s, cell.k, params.vartheta);
        const int num_groups = grouping.num_groups();
        const double lambda =
            params.theoretical ? theoretical_lambda(params.n, num_groups, cell.p_star)
                               : practical_lambda(params.n, num_groups, cell.p_star);
        const ChangeScenario sc =
            single_change_scenario(params.n, grouping, params.z, theta, 1.0);
        const std::uint64_t seed = params.seed + i;
        const SingleEval eval = evaluate_single(sc, seed, Method::GroupInspect, lambda);
        rows[i] = {cell.variant, cell.p_star, cell.s, cell.k,
                   rep,          seed,        params.vartheta, eval.loss};
    });
    return rows;
}

std::vector<LambdaSweepRow> run_lambda_sweep(const LambdaSweepParams& params) {
    if (params.reps < 0) throw ConfigError("run_lambda_sweep: reps must be >= 0");
    if (params.p % params.num_groups != 0)
        throw ConfigError("run_lambda_sweep: p must be a multiple of the group count");
    const int p_star = params.p / params.num_groups;
    const Grouping grouping = Grouping::contiguous_blocks(params.p, p_star);
    const double base = theoretical_lambda(params.n, params.num_groups, p_star);

    std::vector<double> multipliers(static_cast<std::size_t>(params.grid_size));
    const double log_lo = std::log(params.multiplier_lo);
    const double log_hi = std::log(params.multiplier_hi);
    for (int i = 0; i < params.grid_size; ++i) {
        const double f = params.grid_size == 1
                             ? 0.0
                             : static_cast<double>(i) / (params.grid_size - 1);
        multipliers[static_cast<std::size_t>(i)] = std::exp(log_lo + f * (log_hi - log_lo));
    }

    const std::size_t per_cell = static_cast<std::size_t>(params.reps);
    std::vector<LambdaSweepRow> rows(params.varthetas.size() * multipliers.size() * per_cell);
    parallel_for(rows.size(), params.threads, [&](std::size_t i) {
        const std::size_t cell = i / per_cell;
        const int rep = static_cast<int>(i % per_cell);
        const double vartheta = params.varthetas[cell / multipliers.size()];
        const int mult_index = static_cast<int>(cell % multipliers.size());
        const double lambda = multipliers[static_cast<std::size_t>(mult_index)] * base;
        const Vector theta =
            make_theta(params.p, grouping, params.s, params.s * p_star, vartheta);
        const ChangeScenario sc =
            single_change_scenario(params.n, grouping, params.z, theta, 1.0);
        const std::uint64_t seed = params.seed + i;
        const SingleEval eval = evaluate_single(sc, seed, Method::GroupInspect, lambda);
        rows[i] = {vartheta, mult_index, multipliers[static_cast<std::size_t>(mult_index)],
                   lambda,   rep,        seed,
                   eval.loss};
    });
    return rows;
}

std::vector<CompareRow> run_compare(const CompareParams& params) {
    if (params.reps < 0) throw ConfigError("run_compare: reps must be >= 0");
    struct Cell {
        int p;
        double vartheta;
    };
    std::vector<Cell> cells;
    for (int p : params.ps)
        for (double vartheta : params.varthetas) cells.push_back({p, vartheta});

    const std::size_t per_cell = static_cast<std::size_t>(params.reps);
    std::vector<CompareRow> rows(cells.size() * per_cell * params.methods.size());
    // One task per (cell, rep): the methods share the generated panel's seed.
    parallel_for(cells.size() * per_cell, params.threads, [&](std::size_t task) {
        const Cell& cell = cells[task / per_cell];
        const int rep = static_cast<int>(task % per_cell);
        if (cell.p % params.num_groups != 0)
            throw ConfigError("run_compare: p must be a multiple of the group count");
        const int p_star = cell.p / params.num_groups;
        const Grouping grouping = Grouping::contiguous_blocks(cell.p, p_star);
        const Vector theta =
            make_theta(cell.p, grouping, params.s, params.s * p_star, cell.vartheta);
        const ChangeScenario sc =
            single_change_scenario(params.n, grouping, params.z, theta, 1.0);
        const std::uint64_t seed = params.seed + task;
        const double lambda = practical_lambda(params.n, params.num_groups, p_star);
        for (std::size_t m = 0; m < params.methods.size(); ++m) {
            const SingleEval eval =
                evaluate_single(sc, seed, params.methods[m], lambda);
            rows[task * params.methods.size() + m] = {
                cell.p, cell.vartheta, params.methods[m], rep,          seed,
                eval.z_hat, eval.abs_error, eval.loss};
        }
    });
    return rows;
}

MultiResult run_multi(const MultiParams& params) {
    if (params.reps < 0) throw ConfigError("run_multi: reps must be >= 0");
    if (params.p % params.num_groups != 0)
        throw ConfigError("run_multi: p must be a multiple of the group count");
    const int p_star = params.p / params.num_groups;
    const Grouping grouping = Grouping::contiguous_blocks(params.p, p_star);
    const double lambda = practical_lambda(params.n, params.num_groups, p_star);

    MultiResult result;
    result.change_times = {params.n / 4, params.n / 2, 3 * params.n / 4};
    result.xi = calibrate_threshold(params.n, params.p, grouping, lambda, params.n_null,
                                    params.quantile, params.seed + kCalibrationSeedOffset,
                                    params.threads);

    const Vector unit =
        make_theta(params.p, grouping, params.s, params.s * p_star, 1.0);
    Segmentation truth;
    truth.change_points = result.change_times;

    const std::size_t per_cell = static_cast<std::size_t>(params.reps);
    result.rows.resize(params.varthetas.size() * per_cell);
    parallel_for(result.rows.size(), params.threads, [&](std::size_t i) {
        const double vartheta = params.varthetas[i / per_cell];
        const int rep = static_cast<int>(i % per_cell);
        const ChangeScenario sc = multi_change_scenario(
            params.n, grouping, result.change_times,
            {vartheta, 1.5 * vartheta, 2.0 * vartheta}, unit, 1.0);
        const std::uint64_t seed = params.seed + i;
        const Matrix X = generate_data(sc, seed);
        const Matrix Xs = standardize(X, estimate_row_sd(X));
        WbsConfig config;
        config.num_intervals = params.num_intervals;
        config.xi = result.xi;
        config.seed = seed;
        config.threads = 1; // replicates already run in parallel
        const Segmentation est = wbs_detect(Xs, grouping, lambda, config);
        result.rows[i] = {vartheta, rep, seed, adjusted_rand_index(est, truth, params.n),
                          static_cast<int>(est.change_points.size())};
    });
    return result;
}

} // namespace groupinspect::harness
