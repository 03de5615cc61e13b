#include "groupinspect/metrics.hpp"

#include "groupinspect/errors.hpp"

#include <algorithm>
#include <cmath>

namespace groupinspect {

double sin_angle_loss(const Vector& v_hat, const Vector& v) {
    if (v_hat.size() != v.size()) throw ConfigError("sin_angle_loss: dimension mismatch");
    if (std::abs(v_hat.norm() - 1.0) > 1e-6 || std::abs(v.norm() - 1.0) > 1e-6)
        throw ConfigError("sin_angle_loss: inputs must be unit vectors");
    const double cosine = v_hat.dot(v);
    return std::sqrt(std::max(1.0 - cosine * cosine, 0.0));
}

double location_error(std::span<const int> estimates, int z) {
    if (estimates.empty()) throw ConfigError("location_error: empty estimate list");
    double sum = 0.0;
    for (int z_hat : estimates) sum += std::abs(z_hat - z);
    return sum / static_cast<double>(estimates.size());
}

std::vector<int> segment_labels(const std::vector<int>& change_points, int n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    int segment = 0;
    std::size_t next = 0;
    for (int t = 1; t <= n; ++t) {
        while (next < change_points.size() && t > change_points[next]) {
            ++segment;
            ++next;
        }
        labels[static_cast<std::size_t>(t - 1)] = segment;
    }
    return labels;
}

double adjusted_rand_index(const Segmentation& a, const Segmentation& b, int n) {
    if (n < 1) throw ConfigError("adjusted_rand_index: n must be >= 1");
    for (const auto* seg : {&a, &b}) {
        for (std::size_t i = 0; i < seg->change_points.size(); ++i) {
            const int z = seg->change_points[i];
            if (z < 1 || z > n - 1)
                throw ConfigError("adjusted_rand_index: change point outside [1, n-1]");
            if (i > 0 && seg->change_points[i - 1] >= z)
                throw ConfigError("adjusted_rand_index: change points must be increasing");
        }
    }
    const std::vector<int> la = segment_labels(a.change_points, n);
    const std::vector<int> lb = segment_labels(b.change_points, n);

    const std::size_t ka = a.change_points.size() + 1;
    const std::size_t kb = b.change_points.size() + 1;
    std::vector<double> contingency(ka * kb, 0.0), row(ka, 0.0), col(kb, 0.0);
    for (int t = 0; t < n; ++t) {
        const auto i = static_cast<std::size_t>(la[static_cast<std::size_t>(t)]);
        const auto j = static_cast<std::size_t>(lb[static_cast<std::size_t>(t)]);
        contingency[i * kb + j] += 1.0;
        row[i] += 1.0;
        col[j] += 1.0;
    }

    const auto choose2 = [](double m) { return m * (m - 1.0) / 2.0; };
    double index = 0.0, sum_row = 0.0, sum_col = 0.0;
    for (double c : contingency) index += choose2(c);
    for (double r : row) sum_row += choose2(r);
    for (double c : col) sum_col += choose2(c);
    const double pairs = choose2(static_cast<double>(n));
    const double expected = pairs > 0.0 ? sum_row * sum_col / pairs : 0.0;
    const double maximum = 0.5 * (sum_row + sum_col);

    if (maximum - expected == 0.0) return la == lb ? 1.0 : 0.0;
    return (index - expected) / (maximum - expected);
}

} // namespace groupinspect
