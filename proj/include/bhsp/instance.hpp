#pragma once

#include <cstdint>

#include "bhsp/influence.hpp"
#include "bhsp/truth_table.hpp"

namespace bhsp {

struct QueryCounters {
    std::uint64_t f = 0;
    std::uint64_t g = 0;
};

enum class Posedness {
    Enforce,       // reject f with a nontrivial self-shift (the default)
    AllowIllPosed  // accept anything; for degenerate-case tests and callers
                   // that already validated f
};

/*
 * One problem instance: oracles for f and g(x) = f(x ^ s) with the planted
 * shift s. Solvers interact only through query_f / query_g and the
 * samplers; planted_shift() exists for the harness (verification) and the
 * simulator (the measured bit b = <u,s> is physics, not a solver input).
 */
class BhspInstance {
public:
    BhspInstance(TruthTable f, std::uint32_t shift, Posedness mode = Posedness::Enforce)
        : f_(std::move(f)), shift_(shift) {
        if (shift_ >= f_.size()) throw std::invalid_argument("shift out of range");
        if (mode == Posedness::Enforce && !well_posed(f_))
            throw std::invalid_argument("f has a nontrivial self-shift; instance is ill-posed");
    }

    int n() const { return f_.n(); }
    std::size_t size() const { return f_.size(); }
    const TruthTable& f_table() const { return f_; }

    // counted classical oracle calls
    bool query_f(std::uint32_t x) const { ++counters_.f; return f_.bit(x); }
    bool query_g(std::uint32_t x) const { ++counters_.g; return f_.bit(x ^ shift_); }

    // uncharged access for simulator internals; one quantum oracle gate is
    // charged explicitly as a single query
    bool f_at(std::uint32_t x) const { return f_.bit(x); }
    bool g_at(std::uint32_t x) const { return f_.bit(x ^ shift_); }
    void charge_f(std::uint64_t q = 1) const { counters_.f += q; }
    void charge_g(std::uint64_t q = 1) const { counters_.g += q; }

    const QueryCounters& counters() const { return counters_; }

    // harness/simulator only; solver code must not call this
    std::uint32_t planted_shift() const { return shift_; }

private:
    TruthTable f_;
    std::uint32_t shift_;
    mutable QueryCounters counters_;
};

}  // namespace bhsp
