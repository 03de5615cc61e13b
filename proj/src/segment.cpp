#include "groupinspect/segment.hpp"

#include "groupinspect/errors.hpp"
#include "groupinspect/model.hpp"
#include "groupinspect/parallel.hpp"
#include "groupinspect/rng.hpp"

#include <algorithm>
#include <cmath>

namespace groupinspect {

namespace {

struct CandidateResult {
    int z_local = 0;
    double t_max = 0.0;
    bool degenerate = false;
    Vector direction;
};

struct WbsState {
    const Matrix& X;
    const Grouping& grouping;
    double lambda;
    double xi;
    std::vector<std::pair<int, int>> intervals;
    std::vector<CandidateResult> results;
    Segmentation out;

    void recurse(int s, int e) {
        int q0 = -1;
        for (std::size_t q = 0; q < intervals.size(); ++q) {
            const auto [sq, eq] = intervals[q];
            if (sq < s || eq > e) continue;
            if (results[q].degenerate) continue;
            if (q0 < 0 || results[q].t_max > results[static_cast<std::size_t>(q0)].t_max)
                q0 = static_cast<int>(q);
        }
        if (q0 < 0) return;
        const auto& best = results[static_cast<std::size_t>(q0)];
        if (best.t_max < xi) return;
        const int b = intervals[static_cast<std::size_t>(q0)].first + best.z_local;
        out.change_points.push_back(b);
        out.interval_log.push_back({intervals[static_cast<std::size_t>(q0)].first,
                                    intervals[static_cast<std::size_t>(q0)].second, b,
                                    best.t_max, best.direction});
        recurse(s, b);
        recurse(b, e);
    }
};

} // namespace

Segmentation wbs_detect(const Matrix& X, const Grouping& grouping, double lambda,
                        const WbsConfig& config) {
    const int n = static_cast<int>(X.cols());
    if (config.num_intervals < 0) throw ConfigError("wbs_detect: Q must be >= 0");
    if (config.xi < 0.0) throw ConfigError("wbs_detect: xi must be >= 0");
    if (config.min_len < 2) throw ConfigError("wbs_detect: min_len must be >= 2");

    WbsState state{X, grouping, lambda, config.xi, {}, {}, {}};
    if (config.num_intervals > 0 && n >= config.min_len) {
        Rng rng(config.seed);
        state.intervals.reserve(static_cast<std::size_t>(config.num_intervals));
        for (int q = 0; q < config.num_intervals; ++q) {
            // Uniform over {(l, r): 0 <= l < r <= n, r - l >= min_len} by rejection.
            int l, r;
            do {
                l = static_cast<int>(rng.uniform_int(0, n));
                r = static_cast<int>(rng.uniform_int(0, n));
            } while (r - l < config.min_len);
            state.intervals.emplace_back(l, r);
        }
    }

    // Every sampled interval's statistic is needed at the top level already,
    // and it does not depend on the enclosing segment, so evaluate all of
    // them once up front.
    state.results.resize(state.intervals.size());
    parallel_for(state.intervals.size(), config.threads, [&](std::size_t q) {
        const auto [sq, eq] = state.intervals[q];
        const Matrix slice = X.middleCols(sq, eq - sq);
        const SingleCpResult res = single_changepoint(slice, grouping, lambda);
        state.results[q] = {res.z_hat, res.t_max, res.degenerate, res.v_hat.v_hat};
    });

    state.recurse(0, n);
    std::sort(state.out.change_points.begin(), state.out.change_points.end());
    std::sort(state.out.interval_log.begin(), state.out.interval_log.end(),
              [](const IntervalRecord& a, const IntervalRecord& b) { return a.b < b.b; });
    return state.out;
}

double calibrate_threshold(int n, int p, const Grouping& grouping, double lambda,
                           int n_null, double quantile, std::uint64_t seed, int threads) {
    if (n_null < 1) throw ConfigError("calibrate_threshold: n_null must be >= 1");
    if (!(quantile > 0.0 && quantile <= 1.0))
        throw ConfigError("calibrate_threshold: quantile must lie in (0, 1]");

    const ChangeScenario null_model = null_scenario(n, grouping, 1.0);
    std::vector<double> stats(static_cast<std::size_t>(n_null));
    parallel_for(stats.size(), threads, [&](std::size_t r) {
        const Matrix X = generate_data(null_model, seed + r);
        stats[r] = single_changepoint(X, grouping, lambda).t_max;
    });

    std::sort(stats.begin(), stats.end());
    // Empirical quantile: smallest order statistic whose rank covers the
    // requested probability mass (quantile = 1 gives the maximum).
    const auto rank = static_cast<std::size_t>(
        std::ceil(quantile * static_cast<double>(n_null)));
    return stats[std::max<std::size_t>(rank, 1) - 1];
}

} // namespace groupinspect
