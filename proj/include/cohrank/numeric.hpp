#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "cohrank/errors.hpp"

namespace cohrank {

using cdouble = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

/// Largest n with n! representable as a double.
inline constexpr int max_factorial = 170;

/// n! as a double; n must be <= max_factorial.
inline double factorial(int n) {
    static const std::vector<double> table = [] {
        std::vector<double> t(max_factorial + 1);
        t[0] = 1.0;
        for (int i = 1; i <= max_factorial; ++i) t[i] = t[i - 1] * static_cast<double>(i);
        return t;
    }();
    if (n < 0 || n > max_factorial)
        throw range_error("factorial argument out of range: " + std::to_string(n));
    return table[static_cast<std::size_t>(n)];
}

/// log(n!) valid for any n >= 0.
inline double log_factorial(int n) {
    if (n < 0) throw range_error("log_factorial of negative argument");
    return std::lgamma(static_cast<double>(n) + 1.0);
}

/// Exact binomial(n, k) with overflow detection.
inline std::int64_t binomial_checked(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i);
        acc /= static_cast<unsigned __int128>(i);
        if (acc > static_cast<unsigned __int128>(INT64_MAX))
            throw range_error("binomial coefficient exceeds 2^63");
    }
    return static_cast<std::int64_t>(acc);
}

/// Deterministic pairwise (tree) reduction of f(0) + ... + f(n-1).
///
/// The summation order depends only on n, never on how the terms were
/// produced, so results are bit-reproducible for a fixed term order.
template <typename T, typename F>
T pairwise_sum(std::size_t n, F&& f) {
    struct impl {
        static T run(std::size_t lo, std::size_t hi, F& f) {
            const std::size_t len = hi - lo;
            if (len <= 16) {
                T acc{};
                for (std::size_t i = lo; i < hi; ++i) acc += f(i);
                return acc;
            }
            const std::size_t mid = lo + len / 2;
            return run(lo, mid, f) + run(mid, hi, f);
        }
    };
    if (n == 0) return T{};
    return impl::run(0, n, f);
}

/// Gauss-Legendre nodes and weights on [-1, 1].
struct gauss_legendre_rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline gauss_legendre_rule gauss_legendre(int n) {
    if (n < 1) throw range_error("gauss_legendre order must be positive");
    gauss_legendre_rule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    // Newton iteration from the Chebyshev-angle initial guess; the rule is
    // symmetric so only the lower half is solved for.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = -x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

} // namespace cohrank
