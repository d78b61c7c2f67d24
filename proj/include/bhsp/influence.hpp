#pragma once

#include <cstdint>
#include <vector>

#include "bhsp/spectrum.hpp"
#include "bhsp/truth_table.hpp"

namespace bhsp {

// gamma_{f,v} = |{x : f(x) != f(x ^ v)}| / 2^n, counted combinatorially.
// f(x ^ v) is read word-parallel: the high bits of v pick the partner word,
// the low 6 bits permute positions inside it.
inline double influence_of(const TruthTable& t, std::uint32_t v) {
    if (v >= t.size()) throw std::invalid_argument("v out of range");
    auto words = t.words();
    std::size_t word_xor = v >> 6;
    unsigned in_word = v & 63;
    std::uint64_t disagree = 0;
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t partner = xor_permute(words[w ^ word_xor], in_word);
        disagree += std::popcount(words[w] ^ partner);
    }
    return std::ldexp(static_cast<double>(disagree), -t.n());
}

// gamma_{f,v} = sum over u with <v,u> = 1 of coeffs[u]^2.
inline double influence_spectral(const Spectrum& sp, std::uint32_t v) {
    double acc = 0.0;
    for (std::size_t u = 0; u < sp.coeffs.size(); ++u)
        if (dot(static_cast<std::uint32_t>(u), v)) acc += sp.coeffs[u] * sp.coeffs[u];
    return acc;
}

struct InfluenceProfile {
    int n = 0;
    std::vector<double> gamma;   // gamma[v] for every v
    double gamma_min = 0.0;      // min over v != 0
    std::uint32_t argmin = 0;    // lowest v attaining it
};

/*
 * All influences from one spectrum in O(n 2^n): the autocorrelation
 * r(v) = 2^{-n} sum_x F(x) F(x ^ v) is the Walsh transform of the squared
 * spectrum, and gamma_{f,v} = (1 - r(v)) / 2.
 */
inline InfluenceProfile influence_profile(const TruthTable& t) {
    InfluenceProfile p;
    p.n = t.n();
    Spectrum sp = wht(t);
    p.gamma = std::move(sp.coeffs);
    for (double& c : p.gamma) c = c * c;
    walsh_hadamard_inplace(std::span<double>(p.gamma));
    for (double& r : p.gamma) r = 0.5 * (1.0 - r);
    p.gamma[0] = 0.0;

    p.gamma_min = 2.0;
    p.argmin = 0;
    for (std::size_t v = 1; v < p.gamma.size(); ++v) {
        if (p.gamma[v] < p.gamma_min) {
            p.gamma_min = p.gamma[v];
            p.argmin = static_cast<std::uint32_t>(v);
        }
    }
    return p;
}

// No nontrivial self-shift: gamma_{f,v} > 0 for every v != 0.
inline bool well_posed(const TruthTable& t) {
    return influence_profile(t).gamma_min > 0.0;
}

}  // namespace bhsp
