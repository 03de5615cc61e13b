#include "groupinspect/grouping.hpp"

#include "groupinspect/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace groupinspect {

Grouping::Grouping(std::vector<std::vector<int>> groups, int p)
    : groups_(std::move(groups)), p_(p) {
    if (p_ < 1) throw ConfigError("grouping: dimension p must be >= 1");
    if (groups_.empty()) throw ConfigError("grouping: at least one group required");

    std::vector<int> membership(static_cast<std::size_t>(p_), 0);
    min_group_size_ = p_ + 1;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
        auto& idx = groups_[g];
        if (idx.empty())
            throw ConfigError("grouping: group " + std::to_string(g + 1) + " is empty");
        std::sort(idx.begin(), idx.end());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            const int j = idx[i];
            if (j < 0 || j >= p_)
                throw ConfigError("grouping: group " + std::to_string(g + 1) +
                                  " references coordinate " + std::to_string(j + 1) +
                                  " outside [1, " + std::to_string(p_) + "]");
            if (i > 0 && idx[i - 1] == j)
                throw ConfigError("grouping: group " + std::to_string(g + 1) +
                                  " lists coordinate " + std::to_string(j + 1) + " twice");
            ++membership[static_cast<std::size_t>(j)];
        }
        min_group_size_ = std::min(min_group_size_, static_cast<int>(idx.size()));
    }
    for (int j = 0; j < p_; ++j) {
        if (membership[static_cast<std::size_t>(j)] == 0)
            throw ConfigError("grouping: coordinate " + std::to_string(j + 1) +
                              " belongs to no group (groups must cover all coordinates)");
    }
    max_membership_ = *std::max_element(membership.begin(), membership.end());
}

Grouping Grouping::singletons(int p) {
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) groups[static_cast<std::size_t>(j)] = {j};
    return Grouping(std::move(groups), p);
}

Grouping Grouping::contiguous_blocks(int p, int group_size) {
    if (group_size < 1 || p % group_size != 0)
        throw ConfigError("grouping: p = " + std::to_string(p) +
                          " is not a multiple of group size " + std::to_string(group_size));
    std::vector<std::vector<int>> groups;
    groups.reserve(static_cast<std::size_t>(p / group_size));
    for (int start = 0; start < p; start += group_size) {
        std::vector<int> g(static_cast<std::size_t>(group_size));
        std::iota(g.begin(), g.end(), start);
        groups.push_back(std::move(g));
    }
    return Grouping(std::move(groups), p);
}

Vector Grouping::group_l2_profile(const Vector& x) const {
    if (x.size() != p_) throw ConfigError("group_l2_profile: vector length mismatch");
    Vector profile(num_groups());
    for (int g = 0; g < num_groups(); ++g) {
        double ss = 0.0;
        for (int j : groups_[static_cast<std::size_t>(g)]) ss += x[j] * x[j];
        profile[g] = std::sqrt(ss);
    }
    return profile;
}

int Grouping::group_support_size(const Vector& x) const {
    const Vector profile = group_l2_profile(x);
    return static_cast<int>((profile.array() != 0.0).count());
}

} // namespace groupinspect
