#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "bhsp/truth_table.hpp"

namespace bhsp {

namespace detail {

// One butterfly level of stride h over [first, first + 2h).
template <typename T>
inline void butterfly_level(T* a, std::size_t len, std::size_t h) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
        for (std::size_t j = i; j < i + h; ++j) {
            T x = a[j];
            T y = a[j + h];
            a[j] = x + y;
            a[j + h] = x - y;
        }
    }
}

// Two levels (h and 2h) fused into one pass; halves memory traffic for
// the strides that no longer fit in cache.
template <typename T>
inline void butterfly_level_pair(T* a, std::size_t len, std::size_t h) {
    for (std::size_t i = 0; i < len; i += 4 * h) {
        for (std::size_t j = i; j < i + h; ++j) {
            T p = a[j];
            T q = a[j + h];
            T r = a[j + 2 * h];
            T s = a[j + 3 * h];
            a[j] = p + q + r + s;
            a[j + h] = p - q + r - s;
            a[j + 2 * h] = p + q - r - s;
            a[j + 3 * h] = p - q - r + s;
        }
    }
}

}  // namespace detail

/*
 * In-place Walsh-Hadamard butterfly, unnormalized: applying it twice
 * multiplies the input by its length. Levels commute, so small strides are
 * finished block-by-block while each block is cache resident, and the
 * remaining large strides run as fused level pairs.
 */
template <typename T>
inline void walsh_hadamard_inplace(std::span<T> data) {
    std::size_t len = data.size();
    if (len < 2) return;
    T* a = data.data();

    constexpr std::size_t kBlock = std::size_t{1} << 12;
    std::size_t block = len < kBlock ? len : kBlock;
    for (std::size_t base = 0; base < len; base += block)
        for (std::size_t h = 1; h < block; h *= 2)
            detail::butterfly_level(a + base, block, h);

    std::size_t h = block;
    for (; 4 * h <= len; h *= 4)
        detail::butterfly_level_pair(a, len, h);
    if (h < len) detail::butterfly_level(a, len, h);
}

// Walsh-Hadamard coefficients of the +/-1-valued F = (-1)^f:
//   coeffs[u] = 2^{-n} sum_x (-1)^{f(x) + <u,x>}.
// Every coefficient is an integer multiple of 2^{1-n}.
struct Spectrum {
    int n = 0;
    std::vector<double> coeffs;
};

// Unnormalized integer transform: sum_x (-1)^{f(x) + <u,x>} per u.
// Exact reference path; magnitudes are bounded by 2^n.
inline std::vector<std::int64_t> wht_exact(const TruthTable& t) {
    std::vector<std::int64_t> a(t.size());
    for (std::size_t x = 0; x < t.size(); ++x)
        a[x] = t.bit(static_cast<std::uint32_t>(x)) ? -1 : 1;
    walsh_hadamard_inplace(std::span<std::int64_t>(a));
    return a;
}

inline Spectrum wht(const TruthTable& t) {
    Spectrum sp;
    sp.n = t.n();
    sp.coeffs.resize(t.size());
    for (std::size_t x = 0; x < t.size(); ++x)
        sp.coeffs[x] = t.bit(static_cast<std::uint32_t>(x)) ? -1.0 : 1.0;
    walsh_hadamard_inplace(std::span<double>(sp.coeffs));
    double scale = std::ldexp(1.0, -sp.n);
    for (double& c : sp.coeffs) c *= scale;
    return sp;
}

// |sum_u coeffs[u]^2 - 1|
inline double parseval_deviation(const Spectrum& sp) {
    double s = 0.0;
    for (double c : sp.coeffs) s += c * c;
    return std::abs(s - 1.0);
}

// Largest distance of any coefficient from the exact 2^{1-n} grid.
inline double dyadic_grid_deviation(const Spectrum& sp) {
    double worst = 0.0;
    double grid = std::ldexp(1.0, sp.n - 1);
    for (double c : sp.coeffs) {
        double scaled = c * grid;
        double d = std::abs(scaled - std::nearbyint(scaled));
        if (d > worst) worst = d;
    }
    return worst;
}

inline std::string binary_string(std::uint32_t u, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((u >> i) & 1) s[static_cast<std::size_t>(n - 1 - i)] = '1';
    return s;
}

// CSV rows "u,coeff" with u as zero-padded binary (most significant
// coordinate first).
inline void write_spectrum_csv(const Spectrum& sp, std::ostream& out) {
    out << "u,coeff\n";
    char buf[64];
    for (std::size_t u = 0; u < sp.coeffs.size(); ++u) {
        std::snprintf(buf, sizeof buf, "%.17g", sp.coeffs[u]);
        out << binary_string(static_cast<std::uint32_t>(u), sp.n) << "," << buf << "\n";
    }
}

}  // namespace bhsp
