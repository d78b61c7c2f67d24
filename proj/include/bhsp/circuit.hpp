#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <vector>

#include "bhsp/instance.hpp"
#include "bhsp/spectrum.hpp"

namespace bhsp {

/*
 * State of the n+1 qubits after the sampling circuit
 *   H^{x n} -> O_f -> Z -> O_g -> H^{x n},
 * measured jointly. amps is indexed by (b << n) | u with b the ancilla.
 * Every gate is real, so real amplitudes suffice.
 */
struct CircuitState {
    int n = 0;
    std::vector<double> amps;  // length 2^{n+1}

    std::size_t points() const { return std::size_t{1} << n; }
};

struct SampleOutcome {
    int b = 0;
    std::uint32_t u = 0;
};

namespace detail {

/*
 * Gate-by-gate evolution. The register Hadamards are applied as the
 * integer butterfly with the 2^{-n/2} norm factored into a scalar that is
 * multiplied out at the end; amplitudes that cancel exactly therefore
 * come out as exact zeros.
 */
inline CircuitState evolve_state(const TruthTable& f, std::uint32_t shift) {
    CircuitState st;
    st.n = f.n();
    std::size_t points = st.points();
    st.amps.assign(2 * points, 0.0);
    double* lo = st.amps.data();          // ancilla 0
    double* hi = st.amps.data() + points; // ancilla 1
    double scale = 1.0;

    // |0>|0...0>
    lo[0] = 1.0;

    // H^{x n} on the register
    walsh_hadamard_inplace(std::span<double>(lo, points));
    scale *= std::sqrt(std::ldexp(1.0, -st.n));

    // O_f : |b>|x> -> |b ^ f(x)>|x>
    for (std::size_t x = 0; x < points; ++x)
        if (f.bit(static_cast<std::uint32_t>(x))) std::swap(lo[x], hi[x]);

    // Z on the ancilla
    for (std::size_t x = 0; x < points; ++x) hi[x] = -hi[x];

    // O_g with g(x) = f(x ^ shift)
    for (std::size_t x = 0; x < points; ++x)
        if (f.bit(static_cast<std::uint32_t>(x) ^ shift)) std::swap(lo[x], hi[x]);

    // H^{x n} on the register
    walsh_hadamard_inplace(std::span<double>(lo, points));
    walsh_hadamard_inplace(std::span<double>(hi, points));
    scale *= std::sqrt(std::ldexp(1.0, -st.n));

    // adding +0.0 flushes the -0.0 the Z gate leaves on cancelled cells
    for (double& a : st.amps) a = a * scale + 0.0;
    return st;
}

}  // namespace detail

// Runs the sampling circuit once; each oracle gate costs one query.
inline CircuitState evolve(const BhspInstance& inst) {
    CircuitState st = detail::evolve_state(inst.f_table(), inst.planted_shift());
    inst.charge_f();
    inst.charge_g();
    return st;
}

// The closed-form post-circuit state:
//   amp(0,u) = (1 + chi_u(s))/2 * F^(u),  amp(1,u) = (1 - chi_u(s))/2 * F^(u).
inline CircuitState closed_form_state(const TruthTable& f, std::uint32_t shift) {
    CircuitState st;
    st.n = f.n();
    std::size_t points = st.points();
    st.amps.assign(2 * points, 0.0);
    Spectrum sp = wht(f);
    for (std::size_t u = 0; u < points; ++u) {
        double c = chi(static_cast<std::uint32_t>(u), shift);
        st.amps[u] = 0.5 * (1.0 + c) * sp.coeffs[u];
        st.amps[points + u] = 0.5 * (1.0 - c) * sp.coeffs[u];
    }
    return st;
}

// Exact measurement probabilities over packed (b, u).
inline std::vector<double> outcome_distribution(const CircuitState& st) {
    std::vector<double> p(st.amps.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = st.amps[i] * st.amps[i];
    return p;
}

// Marginal over u; equals the squared spectrum and is independent of the shift.
inline std::vector<double> u_marginal(const CircuitState& st) {
    std::size_t points = st.points();
    std::vector<double> p(points);
    for (std::size_t u = 0; u < points; ++u)
        p[u] = st.amps[u] * st.amps[u] + st.amps[points + u] * st.amps[points + u];
    return p;
}

inline double norm_deviation(const CircuitState& st) {
    double s = 0.0;
    for (double a : st.amps) s += a * a;
    return std::abs(s - 1.0);
}

// Debug dump, CSV rows "b,u,amplitude"; intended for n <= 10.
inline void dump_state_csv(const CircuitState& st, std::ostream& out) {
    if (st.n > 10) throw std::invalid_argument("state dump supported for n <= 10 only");
    out << "b,u,amplitude\n";
    char buf[64];
    std::size_t points = st.points();
    for (std::size_t i = 0; i < st.amps.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", st.amps[i]);
        out << (i >> st.n) << "," << binary_string(static_cast<std::uint32_t>(i & (points - 1)), st.n)
            << "," << buf << "\n";
    }
}

}  // namespace bhsp
