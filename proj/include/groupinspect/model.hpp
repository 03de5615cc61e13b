#pragma once

#include "groupinspect/grouping.hpp"

#include <cstdint>
#include <vector>

namespace groupinspect {

/// Ground truth for a synthetic data panel: piecewise-constant mean levels
/// with changes at the given times, i.i.d. N(0, sigma^2) noise per entry.
struct ChangeScenario {
    int n = 0;
    int p = 0;
    Grouping grouping;
    std::vector<int> change_times; ///< sorted, each in [1, n-1]; empty means no change
    std::vector<Vector> mean_levels; ///< change_times.size() + 1 vectors in R^p
    double sigma = 1.0;

    int num_changes() const { return static_cast<int>(change_times.size()); }

    /// Difference of mean levels across change i (1-based, i in [1, num_changes]).
    Vector theta(int i) const;
    /// l2 norm of theta(i).
    double vartheta(int i) const;
    /// Number of nonzero coordinates of theta(i).
    int coordinate_sparsity(int i) const;
    /// Number of groups with a nonzero block of theta(i).
    int group_sparsity(int i) const;
    /// Unit vector theta(i) / ||theta(i)||_2.
    Vector oracle_direction(int i) const;
    /// Smallest segment length divided by n (segments bounded by 0 and n).
    double tau() const;

    /// Checks dimensions, ordering, segment separation and nonzero changes;
    /// throws ConfigError on violation.
    void validate() const;
};

/// Scenario with a single change at time z, mean 0 before and theta after.
ChangeScenario single_change_scenario(int n, Grouping grouping, int z, Vector theta,
                                      double sigma);

/// Scenario with no change and zero mean (the null model).
ChangeScenario null_scenario(int n, Grouping grouping, double sigma);

/// Change vector with exactly k nonzero coordinates of equal magnitude
/// vartheta/sqrt(k), spread as evenly as the group sizes allow over the
/// first s groups (earliest coordinates within each group first). The
/// result satisfies ||theta||_2 = vartheta and has exactly s active groups.
/// Throws ConfigError when (s, k) is infeasible for the grouping.
Vector make_theta(int p, const Grouping& grouping, int s, int k, double vartheta);

/// Variant with an explicit support: equal magnitudes vartheta/sqrt(|support|)
/// on the given 0-based coordinates.
Vector make_theta(int p, const std::vector<int>& support, double vartheta);

/// Draws X with column t distributed N(mu_t, sigma^2 I). A pure function of
/// (scenario, seed): entries are filled column by column, top to bottom,
/// from the Rng Gaussian stream.
Matrix generate_data(const ChangeScenario& scenario, std::uint64_t seed);

} // namespace groupinspect
