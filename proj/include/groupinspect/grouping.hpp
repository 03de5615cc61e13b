#pragma once

#include <Eigen/Core>

#include <vector>

namespace groupinspect {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// A covering of the p coordinates by G non-empty, possibly overlapping
/// index sets. Indices are 0-based internally; the JSON interchange format
/// is 1-based.
class Grouping {
public:
    /// Validates that every group is non-empty, free of duplicates, within
    /// [0, p) and that the union covers all coordinates. Throws ConfigError
    /// otherwise.
    Grouping(std::vector<std::vector<int>> groups, int p);

    /// One group per coordinate: {0}, {1}, ..., {p-1}.
    static Grouping singletons(int p);

    /// Equal contiguous blocks of group_size coordinates; p must be a
    /// multiple of group_size.
    static Grouping contiguous_blocks(int p, int group_size);

    int num_groups() const { return static_cast<int>(groups_.size()); }
    int dimension() const { return p_; }
    const std::vector<int>& group(int g) const { return groups_[g]; }
    const std::vector<std::vector<int>>& groups() const { return groups_; }
    int group_size(int g) const { return static_cast<int>(groups_[g].size()); }

    /// Smallest group size p_*.
    int min_group_size() const { return min_group_size_; }
    /// Largest number of groups any single coordinate belongs to.
    int max_membership() const { return max_membership_; }
    bool non_overlapping() const { return max_membership_ == 1; }

    /// Per-group l2 norms of a coordinate vector: component g is
    /// ||x restricted to group g||_2.
    Vector group_l2_profile(const Vector& x) const;

    /// Number of nonzero entries of group_l2_profile (the group sparsity of x).
    int group_support_size(const Vector& x) const;

    bool operator==(const Grouping& other) const = default;

private:
    std::vector<std::vector<int>> groups_;
    int p_ = 0;
    int min_group_size_ = 0;
    int max_membership_ = 0;
};

} // namespace groupinspect
