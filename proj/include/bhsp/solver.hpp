#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "bhsp/gf2.hpp"
#include "bhsp/instance.hpp"
#include "bhsp/sampling.hpp"

namespace bhsp {

enum class SolveMode { Plain, Amplified, Promise };

struct SolveConfig {
    SolveMode mode = SolveMode::Plain;
    double delta = 0.0;    // promise: gamma_f >= delta
    double epsilon = 0.0;  // promise: failure budget
    std::uint64_t seed = 0;
    std::uint64_t max_queries = UINT64_MAX;  // cap on f-queries + g-queries
    SamplerKind sampler = SamplerKind::Auto;
};

enum class SolveStatus {
    Found,
    BudgetExceeded,   // max_queries hit before full rank
    CutoffReached,    // promise-mode cutoff hit
    PromiseViolated   // an Inconsistent insert: the oracles are not a shift pair
};

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Found: return "found";
        case SolveStatus::BudgetExceeded: return "budget";
        case SolveStatus::CutoffReached: return "cutoff";
        case SolveStatus::PromiseViolated: return "promise_violation";
    }
    return "?";
}

struct RunReport {
    SolveStatus status = SolveStatus::Found;
    std::optional<std::uint32_t> found_shift;
    std::uint64_t f_queries = 0;
    std::uint64_t g_queries = 0;
    std::uint64_t subroutine_runs = 0;
    std::vector<std::uint64_t> trials_per_rank_step;  // runs spent at each rank
    int rank_at_stop = 0;
    double wall_seconds = 0.0;
    std::uint64_t seed = 0;
};

// Promise-mode cutoff: ceil(C n ln(1/eps) / sqrt(delta)) subroutine runs.
// C = 4 keeps the cutoff several times the expected amplified run count
// whenever gamma_f >= delta; tunable.
inline constexpr double kPromiseCutoffConstant = 4.0;

inline std::uint64_t promise_cutoff(int n, double delta, double epsilon) {
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("promise delta must be in (0, 1]");
    if (!(epsilon > 0.0) || epsilon >= 1.0)
        throw std::invalid_argument("promise epsilon must be in (0, 1)");
    double runs = kPromiseCutoffConstant * n * std::log(1.0 / epsilon) / std::sqrt(delta);
    std::uint64_t cutoff = static_cast<std::uint64_t>(std::ceil(runs));
    if (cutoff == 0) throw std::invalid_argument("degenerate promise cutoff");
    return cutoff;
}

namespace detail {

class WallClock {
public:
    WallClock() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/*
 * The span-growth loop: sample (b, u), insert into the basis, repeat until
 * the u_i span Z_2^n, then solve <u_i, s> = b_i. Plain mode draws raw
 * outcomes; Amplified/Promise condition each draw on "u extends the basis"
 * via amplitude amplification. Promise additionally stops after the cutoff.
 */
inline RunReport solve_quantum(const BhspInstance& inst, const SolveConfig& config) {
    detail::WallClock clock;
    const int n = inst.n();
    const bool amplified = config.mode != SolveMode::Plain;
    const std::uint64_t cutoff = config.mode == SolveMode::Promise
                                     ? promise_cutoff(n, config.delta, config.epsilon)
                                     : UINT64_MAX;

    RunReport rep;
    rep.seed = config.seed;
    rep.trials_per_rank_step.assign(static_cast<std::size_t>(n), 0);

    QueryCounters before = inst.counters();
    auto sampler = make_sampler(inst, config.sampler);
    Rng rng(config.seed);
    Gf2Basis basis(n);

    auto finish = [&](SolveStatus status) {
        rep.status = status;
        rep.rank_at_stop = basis.rank();
        rep.f_queries = inst.counters().f - before.f;
        rep.g_queries = inst.counters().g - before.g;
        rep.wall_seconds = clock.seconds();
        return rep;
    };

    GoodPredicate extends = [&](std::uint32_t u) { return !basis.in_span(u); };

    while (basis.rank() < n) {
        if (rep.subroutine_runs >= cutoff) return finish(SolveStatus::CutoffReached);

        std::size_t rank_before = static_cast<std::size_t>(basis.rank());
        SampleOutcome out;
        std::uint64_t runs;
        if (amplified) {
            AmplifiedDraw draw = sampler->sample_amplified(extends, rng);
            out = draw.outcome;
            runs = draw.circuit_runs;
        } else {
            out = sampler->sample(rng);
            runs = 1;
        }
        rep.subroutine_runs += runs;
        rep.trials_per_rank_step[rank_before] += runs;

        if (inst.counters().f - before.f + inst.counters().g - before.g > config.max_queries)
            return finish(SolveStatus::BudgetExceeded);

        if (basis.insert(out.u, out.b) == InsertResult::Inconsistent)
            return finish(SolveStatus::PromiseViolated);
    }

    rep.found_shift = basis.solve();
    return finish(SolveStatus::Found);
}

inline RunReport solve_promise(const BhspInstance& inst, const SolveConfig& config) {
    SolveConfig c = config;
    c.mode = SolveMode::Promise;
    promise_cutoff(inst.n(), c.delta, c.epsilon);  // validate up front
    return solve_quantum(inst, c);
}

/*
 * Classical baseline: query (f(x), g(x)) at a growing random point set and
 * prune the candidate shifts testable against existing points. Candidate
 * c is testable through the pair {x, y} with x ^ y = c and eliminated when
 * g(x) != f(y) or g(y) != f(x). Stops when one candidate remains.
 */
inline RunReport solve_classical(const BhspInstance& inst, std::uint64_t seed,
                                 std::uint64_t max_queries = UINT64_MAX) {
    detail::WallClock clock;
    const int n = inst.n();
    const std::size_t points = std::size_t{1} << n;

    RunReport rep;
    rep.seed = seed;

    QueryCounters before = inst.counters();
    Rng rng(seed);

    std::vector<std::uint64_t> alive((points + 63) / 64, ~0ull);
    if (points < 64) alive[0] = (std::uint64_t{1} << points) - 1;
    std::size_t alive_count = points;
    auto is_alive = [&](std::uint32_t c) { return (alive[c >> 6] >> (c & 63)) & 1; };
    auto kill = [&](std::uint32_t c) {
        alive[c >> 6] &= ~(std::uint64_t{1} << (c & 63));
        --alive_count;
    };

    std::vector<std::uint64_t> queried((points + 63) / 64, 0);
    std::vector<std::uint32_t> xs;
    std::vector<std::uint8_t> fv, gv;

    auto finish = [&](SolveStatus status) {
        rep.status = status;
        rep.f_queries = inst.counters().f - before.f;
        rep.g_queries = inst.counters().g - before.g;
        rep.wall_seconds = clock.seconds();
        return rep;
    };

    while (alive_count > 1) {
        if (xs.size() == points) return finish(SolveStatus::BudgetExceeded);
        auto x = static_cast<std::uint32_t>(rng.below(points));
        if ((queried[x >> 6] >> (x & 63)) & 1) continue;
        queried[x >> 6] |= std::uint64_t{1} << (x & 63);

        if (inst.counters().f - before.f + inst.counters().g - before.g + 2 > max_queries)
            return finish(SolveStatus::BudgetExceeded);
        std::uint8_t fx = inst.query_f(x);
        std::uint8_t gx = inst.query_g(x);
        xs.push_back(x);
        fv.push_back(fx);
        gv.push_back(gx);

        for (std::size_t j = 0; j < xs.size(); ++j) {
            std::uint32_t c = x ^ xs[j];
            if (!is_alive(c)) continue;
            if (gx != fv[j] || gv[j] != fx) kill(c);
        }
    }

    for (std::size_t w = 0; w < alive.size(); ++w) {
        if (alive[w]) {
            rep.found_shift = static_cast<std::uint32_t>(w * 64 +
                              static_cast<std::size_t>(std::countr_zero(alive[w])));
            break;
        }
    }
    return finish(SolveStatus::Found);
}

}  // namespace bhsp
