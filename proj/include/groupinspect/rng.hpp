#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>

namespace groupinspect {

/// Seeded random source with a fully pinned-down output sequence.
///
/// The engine is std::mt19937_64, whose stream is specified by the C++
/// standard, and all variate transforms below are written out explicitly
/// (instead of std::*_distribution, whose mappings are
/// implementation-defined). The same seed therefore yields bit-identical
/// draws on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1): top 53 bits of the engine output.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via the Box-Muller transform. Each pair of uniform
    /// draws (u1 in (0,1], u2 in [0,1)) produces z1 = r*cos(2*pi*u2) and
    /// z2 = r*sin(2*pi*u2) with r = sqrt(-2*log(u1)); z1 is returned first
    /// and z2 cached for the next call.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
        const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    /// Uniform integer on [lo, hi], inclusive. Unbiased via rejection.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) return static_cast<std::int64_t>(engine_()); // full 64-bit span
        constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t bound = max - (max % range + 1) % range;
        std::uint64_t x = engine_();
        while (x > bound) x = engine_();
        return lo + static_cast<std::int64_t>(x % range);
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace groupinspect
