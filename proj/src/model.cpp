#include "groupinspect/model.hpp"

#include "groupinspect/errors.hpp"
#include "groupinspect/rng.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace groupinspect {

Vector ChangeScenario::theta(int i) const {
    if (i < 1 || i > num_changes()) throw ConfigError("scenario: change index out of range");
    return mean_levels[static_cast<std::size_t>(i)] - mean_levels[static_cast<std::size_t>(i - 1)];
}

double ChangeScenario::vartheta(int i) const { return theta(i).norm(); }

int ChangeScenario::coordinate_sparsity(int i) const {
    return static_cast<int>((theta(i).array() != 0.0).count());
}

int ChangeScenario::group_sparsity(int i) const {
    return grouping.group_support_size(theta(i));
}

Vector ChangeScenario::oracle_direction(int i) const {
    const Vector th = theta(i);
    const double norm = th.norm();
    if (norm == 0.0) throw NumericalError("scenario: zero change vector has no direction");
    return th / norm;
}

double ChangeScenario::tau() const {
    int min_gap = n;
    int prev = 0;
    for (int z : change_times) {
        min_gap = std::min(min_gap, z - prev);
        prev = z;
    }
    min_gap = std::min(min_gap, n - prev);
    return static_cast<double>(min_gap) / static_cast<double>(n);
}

void ChangeScenario::validate() const {
    if (n < 2) throw ConfigError("scenario: n must be >= 2");
    if (p < 1) throw ConfigError("scenario: p must be >= 1");
    if (grouping.dimension() != p) throw ConfigError("scenario: grouping dimension != p");
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw ConfigError("scenario: sigma must be finite and >= 0");
    if (mean_levels.size() != change_times.size() + 1)
        throw ConfigError("scenario: need one mean level per segment");
    for (const auto& mu : mean_levels) {
        if (mu.size() != p) throw ConfigError("scenario: mean level has wrong dimension");
        if (!mu.allFinite()) throw ConfigError("scenario: mean level has non-finite entries");
    }
    int prev = 0;
    for (std::size_t i = 0; i < change_times.size(); ++i) {
        const int z = change_times[i];
        if (z < 1 || z > n - 1)
            throw ConfigError("scenario: change time " + std::to_string(z) +
                              " outside [1, n-1]");
        if (z <= prev) throw ConfigError("scenario: change times must be strictly increasing");
        if (theta(static_cast<int>(i) + 1).norm() == 0.0)
            throw ConfigError("scenario: change " + std::to_string(i + 1) +
                              " has zero magnitude");
        prev = z;
    }
}

ChangeScenario single_change_scenario(int n, Grouping grouping, int z, Vector theta,
                                      double sigma) {
    const int p = grouping.dimension();
    ChangeScenario sc{n, p, std::move(grouping), {z},
                      {Vector::Zero(p), std::move(theta)}, sigma};
    sc.validate();
    return sc;
}

ChangeScenario null_scenario(int n, Grouping grouping, double sigma) {
    const int p = grouping.dimension();
    ChangeScenario sc{n, p, std::move(grouping), {}, {Vector::Zero(p)}, sigma};
    sc.validate();
    return sc;
}

Vector make_theta(int p, const Grouping& grouping, int s, int k, double vartheta) {
    if (grouping.dimension() != p) throw ConfigError("make_theta: grouping dimension != p");
    if (s < 1 || s > grouping.num_groups())
        throw ConfigError("make_theta: s = " + std::to_string(s) +
                          " must lie in [1, G = " + std::to_string(grouping.num_groups()) + "]");
    if (k < s)
        throw ConfigError("make_theta: k = " + std::to_string(k) + " < s = " +
                          std::to_string(s) + "; every active group needs a nonzero coordinate");
    if (!(vartheta > 0.0)) throw ConfigError("make_theta: vartheta must be > 0");

    long capacity = 0;
    for (int g = 0; g < s; ++g) capacity += grouping.group_size(g);
    if (k > capacity)
        throw ConfigError("make_theta: k = " + std::to_string(k) + " exceeds the " +
                          std::to_string(capacity) + " coordinates of the first " +
                          std::to_string(s) + " groups");

    // Round-robin allocation over the first s groups: keeps the per-group
    // counts as balanced as the capacities allow, deterministically.
    std::vector<int> alloc(static_cast<std::size_t>(s), 0);
    for (int assigned = 0; assigned < k; ++assigned) {
        int target = -1;
        for (int g = 0; g < s; ++g) {
            if (alloc[static_cast<std::size_t>(g)] >= grouping.group_size(g)) continue;
            if (target < 0 ||
                alloc[static_cast<std::size_t>(g)] < alloc[static_cast<std::size_t>(target)])
                target = g;
        }
        ++alloc[static_cast<std::size_t>(target)];
    }

    const double magnitude = vartheta / std::sqrt(static_cast<double>(k));
    Vector theta = Vector::Zero(p);
    for (int g = 0; g < s; ++g) {
        const auto& idx = grouping.group(g);
        for (int i = 0; i < alloc[static_cast<std::size_t>(g)]; ++i)
            theta[idx[static_cast<std::size_t>(i)]] = magnitude;
    }
    return theta;
}

Vector make_theta(int p, const std::vector<int>& support, double vartheta) {
    if (support.empty()) throw ConfigError("make_theta: empty support");
    if (!(vartheta > 0.0)) throw ConfigError("make_theta: vartheta must be > 0");
    Vector theta = Vector::Zero(p);
    const double magnitude = vartheta / std::sqrt(static_cast<double>(support.size()));
    for (int j : support) {
        if (j < 0 || j >= p) throw ConfigError("make_theta: support index out of range");
        if (theta[j] != 0.0) throw ConfigError("make_theta: duplicate support index");
        theta[j] = magnitude;
    }
    return theta;
}

Matrix generate_data(const ChangeScenario& scenario, std::uint64_t seed) {
    scenario.validate();
    Rng rng(seed);
    Matrix X(scenario.p, scenario.n);
    std::size_t segment = 0;
    for (int t = 1; t <= scenario.n; ++t) {
        while (segment < scenario.change_times.size() &&
               t > scenario.change_times[segment])
            ++segment;
        const Vector& mu = scenario.mean_levels[segment];
        for (int j = 0; j < scenario.p; ++j)
            X(j, t - 1) = mu[j] + scenario.sigma * rng.gaussian();
    }
    return X;
}

} // namespace groupinspect
