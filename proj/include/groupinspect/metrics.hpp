#pragma once

#include "groupinspect/segment.hpp"

#include <span>

namespace groupinspect {

/// sin of the angle between two unit vectors: sqrt(1 - (v_hat' v)^2),
/// clamped at 0 for rounding. Inputs must be unit vectors within 1e-6.
double sin_angle_loss(const Vector& v_hat, const Vector& v);

/// Mean absolute deviation of a batch of location estimates from the truth.
double location_error(std::span<const int> estimates, int z);

/// Adjusted Rand index between the partitions of {1..n} induced by two
/// segmentations (points z split [1, n] into segments (z_i, z_{i+1}]).
/// When the chance-adjustment denominator vanishes (both partitions
/// trivial), returns 1 for identical labelings and 0 otherwise.
double adjusted_rand_index(const Segmentation& a, const Segmentation& b, int n);

/// Segment labels of 1..n induced by sorted change points (label = segment id).
std::vector<int> segment_labels(const std::vector<int>& change_points, int n);

} // namespace groupinspect
