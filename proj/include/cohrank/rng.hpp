#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "cohrank/numeric.hpp"

namespace cohrank {

/// Seeded counter-based generator (splitmix64).
///
/// Every sampler in the library owns one of these, derived from an explicit
/// (seed, stream) pair, so runs replay exactly. All variate transforms are
/// spelled out here rather than delegated to std:: distributions, which are
/// implementation-defined and would break cross-platform reproducibility.
class rng {
public:
    explicit rng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(mix(seed + 0x9E3779B97F4A7C15ull) ^ mix(stream + 0xD1B54A32D192ED03ull))) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in (0, 1]; safe as a log() argument.
    double next_double_pos() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    std::uint64_t next_below(std::uint64_t bound) {
        // Multiply-shift bounded draw; bias is negligible for the small
        // bounds used here (mode counts).
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    /// Standard normal via Box-Muller.
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = next_double_pos();
        const double u2 = next_double();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    cdouble next_complex_normal() {
        const double re = next_normal();
        const double im = next_normal();
        return {re, im};
    }

    /// Uniform on the disk of the given radius.
    cdouble next_disk(double radius) {
        const double r = radius * std::sqrt(next_double());
        const double angle = 2.0 * pi * next_double();
        return {r * std::cos(angle), r * std::sin(angle)};
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace cohrank
