#pragma once

#include "groupinspect/locate.hpp"

#include <cstdint>
#include <vector>

namespace groupinspect {

/// One accepted change-point with the interval that produced it.
struct IntervalRecord {
    int s = 0;            ///< left end of the winning interval (exclusive)
    int e = 0;            ///< right end of the winning interval (inclusive)
    int b = 0;            ///< admitted change-point, s < b < e
    double statistic = 0; ///< projected CUSUM value that cleared the threshold
    Vector direction;     ///< projection direction of the winning interval
                          ///< (diagnostic only; not serialized, not compared)

    bool operator==(const IntervalRecord& o) const {
        return s == o.s && e == o.e && b == o.b && statistic == o.statistic;
    }
};

/// Ordered set of estimated change locations plus the acceptance log.
struct Segmentation {
    std::vector<int> change_points; ///< strictly increasing, within [1, n-1]
    std::vector<IntervalRecord> interval_log;

    bool operator==(const Segmentation& o) const {
        return change_points == o.change_points && interval_log == o.interval_log;
    }
};

/// Wild binary segmentation settings.
struct WbsConfig {
    int num_intervals = 1000;  ///< Q
    double xi = 0.0;           ///< acceptance threshold
    std::uint64_t seed = 0;    ///< interval-sampling seed
    int min_len = 2;           ///< minimum interval length (>= 2 so the slice has a CUSUM column)
    int threads = 0;           ///< 0 = hardware concurrency
};

/// Wild binary segmentation driven by the single change-point procedure.
/// Draws Q pairs (s_q, e_q) uniformly from {0 <= l < r <= n, r - l >= min_len},
/// evaluates the single change-point statistic on each slice (s_q, e_q] once,
/// and recurses: within (s, e], the interval with the largest statistic is
/// admitted if the statistic reaches xi (degenerate candidates never are),
/// the global location b = s_q0 + local z_hat recorded, and the two flanks
/// (s, b] and (b, e] searched recursively. Deterministic given (seed, Q)
/// regardless of the thread count.
Segmentation wbs_detect(const Matrix& X, const Grouping& grouping, double lambda,
                        const WbsConfig& config);

/// Monte-Carlo threshold for wbs_detect: generates n_null panels from the
/// no-change standard normal model, records the full-panel single
/// change-point statistic of each, and returns the empirical quantile
/// (default 1.0 = the maximum). Replicate r uses seed + r.
double calibrate_threshold(int n, int p, const Grouping& grouping, double lambda,
                           int n_null = 1000, double quantile = 1.0,
                           std::uint64_t seed = 0, int threads = 0);

} // namespace groupinspect
