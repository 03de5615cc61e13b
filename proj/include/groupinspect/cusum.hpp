#pragma once

#include "groupinspect/grouping.hpp"

namespace groupinspect {

/// CUSUM transformation of a p x n panel into a p x (n-1) matrix:
///
///   out(j, t) = sqrt(t (n-t) / n) *
///               ( mean of row j over columns t+1..n - mean over columns 1..t )
///
/// for t = 1..n-1. Computed in one left-to-right pass of column prefix sums,
/// O(p n) total. Set compensated = true for Kahan-compensated accumulation of
/// the prefix sums (slower, for ill-conditioned inputs); the default is plain
/// double-precision summation.
Matrix cusum_transform(const Matrix& X, bool compensated = false);

} // namespace groupinspect
