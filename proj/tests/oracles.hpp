#pragma once

// Independent reference implementations used only by tests. Everything here
// follows the defining sums directly (quadratic cost, no butterflies, no
// shared code with the library paths under test).

#include <cmath>
#include <cstdint>
#include <vector>

#include "bhsp/truth_table.hpp"

namespace oracle {

inline int parity_slow(std::uint32_t w) {
    int p = 0;
    while (w) {
        p ^= static_cast<int>(w & 1);
        w >>= 1;
    }
    return p;
}

// coeffs[u] = 2^{-n} sum_x (-1)^{f(x) + <u,x>} straight from the definition
inline std::vector<double> wht_brute(const bhsp::TruthTable& t) {
    std::size_t points = t.size();
    std::vector<double> out(points, 0.0);
    for (std::size_t u = 0; u < points; ++u) {
        double acc = 0.0;
        for (std::size_t x = 0; x < points; ++x) {
            int sign = (t.bit(static_cast<std::uint32_t>(x)) ? 1 : 0) ^
                       parity_slow(static_cast<std::uint32_t>(u & x));
            acc += sign ? -1.0 : 1.0;
        }
        out[u] = acc / static_cast<double>(points);
    }
    return out;
}

// |{x : f(x) != f(x + v)}| / 2^n by direct enumeration
inline double influence_brute(const bhsp::TruthTable& t, std::uint32_t v) {
    std::size_t count = 0;
    for (std::size_t x = 0; x < t.size(); ++x)
        if (t.bit(static_cast<std::uint32_t>(x)) !=
            t.bit(static_cast<std::uint32_t>(x) ^ v))
            ++count;
    return static_cast<double>(count) / static_cast<double>(t.size());
}

// post-circuit amplitudes from the closed form, built on the brute spectrum
inline std::vector<double> closed_form_brute(const bhsp::TruthTable& t, std::uint32_t s) {
    std::vector<double> spec = wht_brute(t);
    std::size_t points = t.size();
    std::vector<double> amps(2 * points, 0.0);
    for (std::size_t u = 0; u < points; ++u) {
        double c = parity_slow(static_cast<std::uint32_t>(u) & s) ? -1.0 : 1.0;
        amps[u] = 0.5 * (1.0 + c) * spec[u];
        amps[points + u] = 0.5 * (1.0 - c) * spec[u];
    }
    return amps;
}

/*
 * Expected sampling-subroutine runs until the drawn u span Z_2^n, for
 * distributions that depend on the current span only through its rank:
 * flat distributions and delta-function spectra (mass P0 on u = 0, equal
 * mass q on every nonzero u). Expected trials = sum over ranks of the
 * inverse escape probability.
 */
inline double absorption_mean_two_valued(int n, double p_zero, double q_nonzero) {
    double total = 0.0;
    for (int r = 0; r < n; ++r) {
        double stay = p_zero + (std::ldexp(1.0, r) - 1.0) * q_nonzero;
        total += 1.0 / (1.0 - stay);
    }
    return total;
}

inline double absorption_mean_flat(int n) {
    double u = std::ldexp(1.0, -n);
    return absorption_mean_two_valued(n, u, u);
}

inline double absorption_mean_delta(int n) {
    double p0 = 1.0 - std::ldexp(1.0, 1 - n);
    return absorption_mean_two_valued(n, p0 * p0, std::ldexp(1.0, 2 - 2 * n));
}

// rotation-count model of the amplified solve on a delta instance; the
// per-rank good mass is rank-only, so the total cost is deterministic
inline double amplified_cost_delta(int n) {
    double p0 = 1.0 - std::ldexp(1.0, 1 - n);
    double q = std::ldexp(1.0, 2 - 2 * n);
    double total = 0.0;
    for (int r = 0; r < n; ++r) {
        double p = 1.0 - (p0 * p0 + (std::ldexp(1.0, r) - 1.0) * q);
        double k = std::ceil(3.14159265358979323846 / (4.0 * std::asin(std::sqrt(p))) - 0.5);
        if (k < 0.0) k = 0.0;
        total += 2.0 * (2.0 * k + 1.0);
    }
    return total;
}

}  // namespace oracle
