#pragma once

// Numerical Fekete points on [a, b]: maximize sum_{i<j} log|z_i - z_j| by
// coordinate ascent. Floating point by design; an independent check on the
// exact diameters, never a certificate.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace multibrot::capacity {

struct FeketeResult {
    std::vector<double> points;  // sorted
    double log_product = 0;      // sum_{i<j} log|z_i - z_j|
    double value = 0;            // exp(2 log_product / (n(n-1))), the n-th diameter estimate
    unsigned restarts = 0;
    bool endpoints_attained = false;
};

namespace detail {

inline double log_product(const std::vector<double>& z) {
    double s = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) s += std::log(std::abs(z[i] - z[j]));
    return s;
}

/// Maximize sum_j log|x - z_j| for x strictly between z[i-1] and z[i+1].
/// The derivative sum 1/(x - z_j) is decreasing there, so bisect for its zero.
inline double best_interior(const std::vector<double>& z, std::size_t i) {
    double lo = z[i - 1], hi = z[i + 1];
    auto slope = [&](double x) {
        double s = 0;
        for (std::size_t j = 0; j < z.size(); ++j)
            if (j != i) s += 1.0 / (x - z[j]);
        return s;
    };
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (slope(mid) > 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline void ascend(std::vector<double>& z, double a, double b) {
    // the outermost points always move to the endpoints: the objective is
    // monotone beyond the other points
    z.front() = a;
    z.back() = b;
    double prev = log_product(z);
    for (int sweep = 0; sweep < 20000; ++sweep) {
        for (std::size_t i = 1; i + 1 < z.size(); ++i) z[i] = best_interior(z, i);
        double cur = log_product(z);
        if (std::abs(cur - prev) <= 1e-15 * std::max(1.0, std::abs(cur))) break;
        prev = cur;
    }
}

}  // namespace detail

inline FeketeResult fekete_oracle(double a, double b, unsigned n, unsigned restarts = 4, std::uint64_t seed = 1) {
    if (!(a < b)) throw std::invalid_argument("fekete_oracle: need a < b");
    if (n < 2 || n > 12) throw std::invalid_argument("fekete_oracle: need 2 <= n <= 12");
    const double pi = std::acos(-1.0);
    // Chebyshev-Lobatto extrema
    std::vector<double> z(n);
    for (unsigned k = 0; k < n; ++k) z[k] = 0.5 * (a + b) - 0.5 * (b - a) * std::cos(pi * k / (n - 1));
    detail::ascend(z, a, b);
    FeketeResult best;
    best.points = z;
    best.log_product = detail::log_product(z);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(a, b);
    for (unsigned r = 0; r < restarts; ++r) {
        std::vector<double> w(n);
        for (auto& x : w) x = unif(rng);
        std::sort(w.begin(), w.end());
        // keep the start configuration strictly increasing
        for (unsigned k = 1; k < n; ++k)
            if (w[k] <= w[k - 1]) w[k] = std::nextafter(w[k - 1], b);
        detail::ascend(w, a, b);
        double v = detail::log_product(w);
        if (std::isfinite(v) && v > best.log_product) {
            best.points = w;
            best.log_product = v;
        }
    }
    best.restarts = restarts;
    best.value = std::exp(2.0 * best.log_product / (static_cast<double>(n) * (n - 1)));
    best.endpoints_attained = best.points.front() == a && best.points.back() == b;
    return best;
}

}  // namespace multibrot::capacity
