#pragma once

#include <bit>
#include <cstdint>
#include <random>

/*
 * Bit and index conventions, fixed once for the whole library:
 *   - a point x of Z_2^n is an n-bit unsigned integer; bit i of x is
 *     coordinate x_i (coordinate 0 = least significant bit),
 *   - <u,v> = parity of (u AND v),
 *   - tables indexed by x store x = 0 first.
 */

namespace bhsp {

inline int parity(std::uint64_t w) { return std::popcount(w) & 1; }

// <u,v> over GF(2).
inline int dot(std::uint32_t u, std::uint32_t v) { return parity(u & v); }

// chi_u(v) = (-1)^<u,v> as a double.
inline double chi(std::uint32_t u, std::uint32_t v) {
    return dot(u, v) ? -1.0 : 1.0;
}

// Permute the bits of a 64-bit word by position -> position XOR k, k < 64.
// Used to evaluate f(x ^ v) word-parallel: the low 6 bits of v act inside
// each word, the high bits select the partner word.
inline std::uint64_t xor_permute(std::uint64_t w, unsigned k) {
    if (k & 1)  w = ((w & 0x5555555555555555ull) << 1)  | ((w >> 1)  & 0x5555555555555555ull);
    if (k & 2)  w = ((w & 0x3333333333333333ull) << 2)  | ((w >> 2)  & 0x3333333333333333ull);
    if (k & 4)  w = ((w & 0x0f0f0f0f0f0f0f0full) << 4)  | ((w >> 4)  & 0x0f0f0f0f0f0f0f0full);
    if (k & 8)  w = ((w & 0x00ff00ff00ff00ffull) << 8)  | ((w >> 8)  & 0x00ff00ff00ff00ffull);
    if (k & 16) w = ((w & 0x0000ffff0000ffffull) << 16) | ((w >> 16) & 0x0000ffff0000ffffull);
    if (k & 32) w = (w << 32) | (w >> 32);
    return w;
}

// splitmix64 finalizer; the mixing step of every derived seed in the library.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/*
 * Documented seed-split function: the per-trial seed of a sweep is
 *   derive_seed(master_seed, n, trial_index, solver_tag)
 * so trials are independent and reproducible regardless of execution order.
 */
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b, std::uint64_t c) {
    std::uint64_t h = mix64(master);
    h = mix64(h ^ (a + 0x100000001b3ull));
    h = mix64(h ^ (b + 0xcbf29ce484222325ull));
    h = mix64(h ^ (c + 0x9e3779b97f4a7c15ull));
    return h;
}

/*
 * Deterministic RNG stream. mt19937_64 output is fixed by the standard;
 * the derived draws below avoid std::uniform_*_distribution, whose mapping
 * is implementation-defined, so streams are identical across platforms.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform in [0, 1) with 53 random bits
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, bound) by masked rejection
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~0ull >> std::countl_zero(bound - 1);
        std::uint64_t v;
        do {
            v = next() & mask;
        } while (v >= bound);
        return v;
    }

    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace bhsp
