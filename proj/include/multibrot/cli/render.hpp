#pragma once

// Escape-time pictures of the multibrot set M_d as binary PPM (P6).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace multibrot::cli {

struct RenderSpec {
    unsigned d = 2;
    double center_re = 0, center_im = 0;
    double width = 3;  // of the real extent
    unsigned columns = 800, rows = 800;
    unsigned max_iter = 2000;
    unsigned palette = 0;  // 0 grayscale, 1 smooth color

    void validate() const {
        if (d < 2) throw std::invalid_argument("render: d must be >= 2");
        if (columns < 1 || rows < 1) throw std::invalid_argument("render: resolution must be at least 1x1");
        if (!(width > 0) || !std::isfinite(width)) throw std::invalid_argument("render: width must be positive");
        if (max_iter < 1) throw std::invalid_argument("render: max_iter must be >= 1");
        if (palette > 1) throw std::invalid_argument("render: unknown palette");
    }

    double step() const { return width / columns; }
    /// Column W/2 sits on center_re and row H/2 on center_im exactly.
    double re_at(unsigned x) const { return center_re + (static_cast<double>(x) - columns / 2.0) * step(); }
    double im_at(unsigned y) const { return center_im + (rows / 2.0 - static_cast<double>(y)) * step(); }
};

/// A window showing all of M_d.
inline RenderSpec default_view(unsigned d) {
    RenderSpec s;
    s.d = d;
    if (d == 2) {
        s.center_re = -0.75;
        s.width = 3;
    } else {
        s.width = 2 * std::pow(2.0, 1.0 / (d - 1)) + 0.5;
    }
    return s;
}

struct EscapeTime {
    unsigned iterations;  // max_iter when the orbit stayed bounded
    double modulus;       // |z| at escape
};

/// Iterates the critical orbit of z^d + c until |z| exceeds max(|c|, 2^(1/(d-1))).
inline EscapeTime escape_time(unsigned d, std::complex<double> c, unsigned max_iter) {
    const double radius = std::max(std::abs(c), std::pow(2.0, 1.0 / (d - 1)));
    const double r2 = radius * radius;
    std::complex<double> z = 0;
    for (unsigned k = 0; k < max_iter; ++k) {
        std::complex<double> p = z;
        for (unsigned i = 1; i < d; ++i) p *= z;
        z = p + c;
        double m2 = z.real() * z.real() + z.imag() * z.imag();
        if (m2 > r2) return {k + 1, std::sqrt(m2)};
    }
    return {max_iter, 0};
}

inline bool interior(unsigned d, std::complex<double> c, unsigned max_iter) {
    return escape_time(d, c, max_iter).iterations == max_iter;
}

namespace detail {

inline std::array<std::uint8_t, 3> shade(const RenderSpec& s, const EscapeTime& e) {
    if (e.iterations == s.max_iter) return {0, 0, 0};
    double t = static_cast<double>(e.iterations) / s.max_iter;
    if (s.palette == 0) {
        auto v = static_cast<std::uint8_t>(255 - std::lround(215 * std::sqrt(t)));
        return {v, v, v};
    }
    // continuous escape count
    double nu = e.iterations + 1 - std::log(std::max(1.0, std::log(e.modulus))) / std::log(static_cast<double>(s.d));
    double h = std::fmod(nu * 0.035, 1.0);
    if (h < 0) h += 1;
    auto channel = [&](double phase) {
        double v = 0.5 + 0.5 * std::cos(2 * std::acos(-1.0) * (h + phase));
        return static_cast<std::uint8_t>(std::lround(255 * v));
    };
    return {channel(0.0), channel(0.33), channel(0.67)};
}

}  // namespace detail

/// Escape counts, row-major; rows are computed on separate threads.
inline std::vector<unsigned> escape_counts(const RenderSpec& s, unsigned threads = 0) {
    s.validate();
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<unsigned> out(static_cast<std::size_t>(s.columns) * s.rows);
    auto work = [&](unsigned first) {
        for (unsigned y = first; y < s.rows; y += threads)
            for (unsigned x = 0; x < s.columns; ++x)
                out[static_cast<std::size_t>(y) * s.columns + x] = escape_time(s.d, {s.re_at(x), s.im_at(y)}, s.max_iter).iterations;
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& t : pool) t.join();
    return out;
}

/// Complete P6 file contents.
inline std::vector<std::uint8_t> render_ppm(const RenderSpec& s, unsigned threads = 0) {
    s.validate();
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::string header = "P6\n" + std::to_string(s.columns) + " " + std::to_string(s.rows) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    const std::size_t base = out.size();
    out.resize(base + 3 * static_cast<std::size_t>(s.columns) * s.rows);
    auto work = [&](unsigned first) {
        for (unsigned y = first; y < s.rows; y += threads)
            for (unsigned x = 0; x < s.columns; ++x) {
                auto rgb = detail::shade(s, escape_time(s.d, {s.re_at(x), s.im_at(y)}, s.max_iter));
                std::size_t at = base + 3 * (static_cast<std::size_t>(y) * s.columns + x);
                std::copy(rgb.begin(), rgb.end(), out.begin() + static_cast<long>(at));
            }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& t : pool) t.join();
    return out;
}

inline void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
}

/// Interior pixels on the row through Im c = 0 as [first, last] real parts,
/// or nothing when the axis is not a pixel row or the row has no interior.
inline std::optional<std::pair<double, double>> real_axis_span(const RenderSpec& s) {
    double yf = s.rows / 2.0 + s.center_im / s.step();
    if (yf != std::floor(yf) || yf < 0 || yf >= s.rows) return std::nullopt;
    auto y = static_cast<unsigned>(yf);
    std::optional<std::pair<double, double>> span;
    for (unsigned x = 0; x < s.columns; ++x) {
        if (!interior(s.d, {s.re_at(x), s.im_at(y)}, s.max_iter)) continue;
        double re = s.re_at(x);
        if (!span) span = std::make_pair(re, re);
        span->second = re;
    }
    return span;
}

}  // namespace multibrot::cli
