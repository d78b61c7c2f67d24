#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bhsp/circuit.hpp"
#include "bhsp/instance.hpp"

namespace bhsp {

/*
 * Amplitude-amplification rotation count for a good-outcome mass p known
 * exactly: k iterations rotate the state by (2k+1) asin(sqrt(p)), so the
 * smallest k with (2k+1) asin(sqrt(p)) >= pi/2 lands on a good outcome
 * with certainty (the final iteration's angle is adjusted). p = 1 needs
 * no iteration at all.
 */
inline std::uint64_t rotation_count(double p) {
    if (p <= 0.0) throw std::domain_error("amplification target has zero probability mass");
    if (p >= 1.0) return 0;
    double theta = std::asin(std::sqrt(p));
    double k = std::ceil(std::numbers::pi / (4.0 * theta) - 0.5);
    return k < 0.0 ? 0 : static_cast<std::uint64_t>(k);
}

struct AmplifiedDraw {
    SampleOutcome outcome;
    std::uint64_t circuit_runs = 0;   // 2k + 1 subroutine applications
    std::uint64_t oracle_queries = 0; // 2 per application
};

using GoodPredicate = std::function<bool(std::uint32_t)>;

/*
 * A source of measurement outcomes for one instance. Both implementations
 * draw from the same distribution; they differ in cost per draw and in
 * how literally the circuit is executed.
 */
class Sampler {
public:
    virtual ~Sampler() = default;
    virtual int n() const = 0;

    // one subroutine run: 1 f-query + 1 g-query
    virtual SampleOutcome sample(Rng& rng) = 0;

    // outcome conditioned on good(u), charged at 2k+1 runs
    virtual AmplifiedDraw sample_amplified(const GoodPredicate& good, Rng& rng) = 0;
};

namespace detail {

// inverse-CDF draw over the packed index, normalized by the actual total
// mass so restricted vectors draw correctly; zero-probability cells are
// never selected because they do not advance the cumulative sum
inline std::size_t draw_index(const std::vector<double>& probs, Rng& rng) {
    double total = 0.0;
    for (double p : probs) total += p;
    double r = rng.uniform() * total;
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] <= 0.0) continue;
        last_positive = i;
        acc += probs[i];
        if (r < acc) return i;
    }
    return last_positive;  // float-rounding tail
}

inline double good_mass(const std::vector<double>& u_probs, const GoodPredicate& good) {
    double p = 0.0;
    for (std::size_t u = 0; u < u_probs.size(); ++u)
        if (good(static_cast<std::uint32_t>(u))) p += u_probs[u];
    return p;
}

}  // namespace detail

/*
 * Runs the full gate-by-gate circuit for every draw. Cost O(n 2^n) per
 * sample; the honest reference path.
 */
class CircuitSampler final : public Sampler {
public:
    explicit CircuitSampler(const BhspInstance& inst) : inst_(inst) {}

    int n() const override { return inst_.n(); }

    SampleOutcome sample(Rng& rng) override {
        CircuitState st = evolve(inst_);
        std::vector<double> p = outcome_distribution(st);
        std::size_t idx = detail::draw_index(p, rng);
        return unpack(idx);
    }

    AmplifiedDraw sample_amplified(const GoodPredicate& good, Rng& rng) override {
        CircuitState st = detail::evolve_state(inst_.f_table(), inst_.planted_shift());
        std::vector<double> joint = outcome_distribution(st);
        std::size_t points = st.points();

        double p = 0.0;
        for (std::size_t i = 0; i < joint.size(); ++i)
            if (good(static_cast<std::uint32_t>(i & (points - 1)))) p += joint[i];

        std::uint64_t k = rotation_count(p);
        std::uint64_t runs = 2 * k + 1;
        inst_.charge_f(runs);
        inst_.charge_g(runs);

        // renormalized restriction to good outcomes
        for (std::size_t i = 0; i < joint.size(); ++i)
            if (!good(static_cast<std::uint32_t>(i & (points - 1)))) joint[i] = 0.0;
        std::size_t idx = detail::draw_index(joint, rng);
        return AmplifiedDraw{unpack(idx), runs, 2 * runs};
    }

private:
    SampleOutcome unpack(std::size_t idx) const {
        std::size_t points = std::size_t{1} << inst_.n();
        return SampleOutcome{static_cast<int>(idx >> inst_.n()),
                             static_cast<std::uint32_t>(idx & (points - 1))};
    }

    const BhspInstance& inst_;
};

/*
 * Draws u directly from the squared spectrum and sets b = <u,s>, which is
 * the measured distribution of the circuit. One spectrum computation up
 * front, O(log 2^n) per draw; the path that makes n = 24 experiments
 * feasible. Query accounting is identical to the circuit path.
 */
class DirectSampler final : public Sampler {
public:
    explicit DirectSampler(const BhspInstance& inst) : inst_(inst) {
        Spectrum sp = wht(inst.f_table());
        probs_.resize(sp.coeffs.size());
        cdf_.resize(sp.coeffs.size());
        double acc = 0.0;
        for (std::size_t u = 0; u < sp.coeffs.size(); ++u) {
            probs_[u] = sp.coeffs[u] * sp.coeffs[u];
            acc += probs_[u];
            cdf_[u] = acc;
        }
    }

    int n() const override { return inst_.n(); }

    SampleOutcome sample(Rng& rng) override {
        inst_.charge_f();
        inst_.charge_g();
        return draw(rng);
    }

    AmplifiedDraw sample_amplified(const GoodPredicate& good, Rng& rng) override {
        double p = detail::good_mass(probs_, good);
        std::uint64_t k = rotation_count(p);
        std::uint64_t runs = 2 * k + 1;
        inst_.charge_f(runs);
        inst_.charge_g(runs);

        SampleOutcome out;
        if (p >= 1.0 / 64.0) {
            do {
                out = draw(rng);
            } while (!good(out.u));
        } else {
            // restriction too thin for rejection: draw from the
            // renormalized restricted distribution directly
            std::vector<double> restricted(probs_.size(), 0.0);
            for (std::size_t u = 0; u < probs_.size(); ++u)
                if (good(static_cast<std::uint32_t>(u))) restricted[u] = probs_[u];
            std::size_t u = detail::draw_index(restricted, rng);
            out = outcome(static_cast<std::uint32_t>(u));
        }
        return AmplifiedDraw{out, runs, 2 * runs};
    }

private:
    SampleOutcome draw(Rng& rng) {
        double r = rng.uniform();
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), r);
        std::size_t u = it == cdf_.end() ? cdf_.size() - 1 : static_cast<std::size_t>(it - cdf_.begin());
        while (u > 0 && probs_[u] <= 0.0) --u;  // float-rounding tail guard
        return outcome(static_cast<std::uint32_t>(u));
    }

    SampleOutcome outcome(std::uint32_t u) const {
        return SampleOutcome{dot(u, inst_.planted_shift()), u};
    }

    const BhspInstance& inst_;
    std::vector<double> probs_;
    std::vector<double> cdf_;
};

enum class SamplerKind { Auto, Circuit, Direct };

// Auto keeps the literal circuit up to n = 10 and switches to the direct
// path above, where state vectors get large.
inline std::unique_ptr<Sampler> make_sampler(const BhspInstance& inst, SamplerKind kind) {
    if (kind == SamplerKind::Circuit || (kind == SamplerKind::Auto && inst.n() <= 10))
        return std::make_unique<CircuitSampler>(inst);
    return std::make_unique<DirectSampler>(inst);
}

}  // namespace bhsp
