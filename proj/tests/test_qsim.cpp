#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "bhsp/circuit.hpp"
#include "bhsp/sampling.hpp"
#include "oracles.hpp"

using namespace bhsp;

namespace {

BhspInstance parity1_instance() {
    // n=1, f(x)=x, s=1
    return BhspInstance(TruthTable(1, "01"), 1);
}

BhspInstance and2_instance(std::uint32_t s) {
    return BhspInstance(TruthTable(2, "0001"), s);
}

}  // namespace

TEST(Instance, OracleWiringCountersAndPosednessGate) {
    TruthTable f = make_random(6, 606);
    ASSERT_TRUE(well_posed(f));
    std::uint32_t s = 0b101101;
    BhspInstance inst(f, s);
    EXPECT_EQ(inst.planted_shift(), s);
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        EXPECT_EQ(inst.query_g(x), f.bit(x ^ s));
        EXPECT_EQ(inst.query_f(x), f.bit(x));
    }
    EXPECT_EQ(inst.counters().f, f.size());
    EXPECT_EQ(inst.counters().g, f.size());

    EXPECT_THROW(BhspInstance(f, static_cast<std::uint32_t>(f.size())), std::invalid_argument);

    TruthTable ill(2, "0101");  // ignores one input bit
    EXPECT_THROW(BhspInstance(ill, 1), std::invalid_argument);
    EXPECT_NO_THROW(BhspInstance(ill, 1, Posedness::AllowIllPosed));
}

TEST(Evolve, PointMassExampleN1) {
    BhspInstance inst = parity1_instance();
    CircuitState st = evolve(inst);
    // F^(0)=0, F^(1)=1, chi_1(1)=-1: all amplitude on (b,u)=(1,1)
    EXPECT_NEAR(st.amps[0], 0.0, 1e-15);
    EXPECT_NEAR(st.amps[1], 0.0, 1e-15);
    EXPECT_NEAR(st.amps[2], 0.0, 1e-15);
    EXPECT_NEAR(st.amps[3], 1.0, 1e-15);
}

TEST(Evolve, BentZeroShiftIsFlatOnAncillaZero) {
    BhspInstance inst = and2_instance(0);
    CircuitState st = evolve(inst);
    std::vector<double> p = outcome_distribution(st);
    for (std::size_t u = 0; u < 4; ++u) {
        EXPECT_NEAR(p[u], 0.25, 1e-15);
        EXPECT_EQ(p[4 + u], 0.0);
    }
}

TEST(Evolve, UnitNormAcrossCorpus) {
    for (int n = 1; n <= 8; ++n) {
        TruthTable t = make_random(n, 0x999 + static_cast<std::uint64_t>(n));
        if (!well_posed(t)) continue;
        BhspInstance inst(t, static_cast<std::uint32_t>(n % (1 << n)));
        EXPECT_LE(norm_deviation(evolve(inst)), 1e-9);
    }
}

TEST(Evolve, MatchesIndependentClosedFormToTightTolerance) {
    // exhaustive shifts at small n, sampled tables
    for (int n = 1; n <= 6; ++n) {
        TruthTable t = make_random(n, 0x77 + static_cast<std::uint64_t>(n));
        if (!well_posed(t)) { t = make_delta(n, 0); }
        for (std::uint32_t s = 0; s < t.size(); ++s) {
            BhspInstance inst(t, s, Posedness::AllowIllPosed);
            CircuitState gate = evolve(inst);
            std::vector<double> want = oracle::closed_form_brute(t, s);
            for (std::size_t i = 0; i < want.size(); ++i)
                ASSERT_NEAR(gate.amps[i], want[i], 1e-12) << "n=" << n << " s=" << s;
        }
    }
}

TEST(Evolve, ChargesExactlyOneQueryPerOracle) {
    BhspInstance inst = and2_instance(0b10);
    EXPECT_EQ(inst.counters().f, 0u);
    evolve(inst);
    EXPECT_EQ(inst.counters().f, 1u);
    EXPECT_EQ(inst.counters().g, 1u);
    evolve(inst);
    EXPECT_EQ(inst.counters().f, 2u);
    EXPECT_EQ(inst.counters().g, 2u);
}

TEST(OutcomeDistribution, Delta3SpecValues) {
    BhspInstance inst(make_delta(3, 0), 0b101);
    std::vector<double> marg = u_marginal(evolve(inst));
    EXPECT_NEAR(marg[0], 9.0 / 16.0, 1e-15);
    for (std::size_t u = 1; u < 8; ++u) EXPECT_NEAR(marg[u], 1.0 / 16.0, 1e-15);
    double total = 0.0;
    for (double p : outcome_distribution(evolve(inst))) total += p;
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(OutcomeDistribution, UMarginalIndependentOfShift) {
    for (int n = 1; n <= 6; ++n) {
        TruthTable t = make_random(n, 0x31337 + static_cast<std::uint64_t>(n));
        std::vector<double> base = u_marginal(detail::evolve_state(t, 0));
        Spectrum sp = wht(t);
        for (std::uint32_t s = 0; s < t.size(); ++s) {
            std::vector<double> marg = u_marginal(detail::evolve_state(t, s));
            for (std::size_t u = 0; u < marg.size(); ++u) {
                ASSERT_NEAR(marg[u], base[u], 1e-12);
                ASSERT_NEAR(marg[u], sp.coeffs[u] * sp.coeffs[u], 1e-12);
            }
        }
    }
}

TEST(Sample, DeterministicGivenSeedAndPointMass) {
    BhspInstance inst = parity1_instance();
    CircuitSampler sampler(inst);
    Rng rng(7);
    for (int i = 0; i < 32; ++i) {
        SampleOutcome out = sampler.sample(rng);
        EXPECT_EQ(out.u, 1u);
        EXPECT_EQ(out.b, 1);
    }

    Rng a(123), b(123);
    CircuitSampler s1(inst), s2(inst);
    for (int i = 0; i < 16; ++i) {
        SampleOutcome x = s1.sample(a);
        SampleOutcome y = s2.sample(b);
        EXPECT_EQ(x.u, y.u);
        EXPECT_EQ(x.b, y.b);
    }
}

TEST(Sample, EmpiricalMarginalCloseToFlatForBent) {
    BhspInstance inst = and2_instance(0b11);
    DirectSampler sampler(inst);
    Rng rng(2024);
    std::array<int, 4> counts{};
    const int kSamples = 100000;
    for (int i = 0; i < kSamples; ++i) ++counts[sampler.sample(rng).u];
    double tv = 0.0;
    for (int c : counts) tv += std::abs(static_cast<double>(c) / kSamples - 0.25);
    EXPECT_LE(tv / 2.0, 0.02);
}

TEST(Sample, OutcomeAlwaysOrthogonalToShift) {
    Rng rng(0xfeedface);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng.below(8));
        TruthTable t = make_random(n, rng.next());
        if (!well_posed(t)) continue;
        std::uint32_t s = static_cast<std::uint32_t>(rng.below(t.size()));
        BhspInstance inst(t, s);
        auto sampler = make_sampler(inst, (trial % 2) ? SamplerKind::Circuit : SamplerKind::Direct);
        for (int i = 0; i < 200; ++i) {
            SampleOutcome out = sampler->sample(rng);
            ASSERT_EQ(out.b, dot(out.u, s));
        }
    }
}

TEST(Sample, DirectAndCircuitPathsShareOneDistribution) {
    // exact distributions must agree; the paths are interchangeable
    for (int n = 1; n <= 8; ++n) {
        TruthTable t = make_random(n, 0xd1d + static_cast<std::uint64_t>(n));
        if (!well_posed(t)) continue;
        std::uint32_t s = static_cast<std::uint32_t>((n * 5) % (1 << n));
        BhspInstance inst(t, s);
        Spectrum sp = wht(t);
        std::vector<double> joint = outcome_distribution(detail::evolve_state(t, s));
        for (std::size_t u = 0; u < t.size(); ++u) {
            double direct_prob = sp.coeffs[u] * sp.coeffs[u];  // lands on b = <u,s>
            std::size_t idx = (static_cast<std::size_t>(dot(static_cast<std::uint32_t>(u), s))
                               << n) | u;
            ASSERT_NEAR(joint[idx], direct_prob, 1e-12);
            std::size_t other = idx ^ (std::size_t{1} << n);
            ASSERT_EQ(joint[other], 0.0);
        }
    }
}

TEST(RotationCount, BoundaryAndScaling) {
    EXPECT_EQ(rotation_count(1.0), 0u);
    EXPECT_EQ(rotation_count(1.5), 0u);  // clamped
    EXPECT_THROW(rotation_count(0.0), std::domain_error);
    // k approx (pi/4)/sqrt(p): quadrupling 1/p doubles k
    std::uint64_t k1 = rotation_count(1e-4);
    std::uint64_t k2 = rotation_count(1e-4 / 4.0);
    EXPECT_NEAR(static_cast<double>(k2), 2.0 * static_cast<double>(k1), 2.0);
}

TEST(SampleAmplified, FullMassCostsOneRun) {
    BhspInstance inst = and2_instance(0b01);
    CircuitSampler sampler(inst);
    Rng rng(5);
    QueryCounters before = inst.counters();
    AmplifiedDraw draw = sampler.sample_amplified([](std::uint32_t) { return true; }, rng);
    EXPECT_EQ(draw.circuit_runs, 1u);
    EXPECT_EQ(draw.oracle_queries, 2u);
    EXPECT_EQ(inst.counters().f - before.f, 1u);
    EXPECT_EQ(inst.counters().g - before.g, 1u);
}

TEST(SampleAmplified, ConditionedUniformOverComplementSpecExample) {
    // n=2 AND with span {00, 01}: good mass 1/2, conditioned marginal
    // uniform over {10, 11}
    BhspInstance inst = and2_instance(0b00);
    auto good = [](std::uint32_t u) { return u == 0b10 || u == 0b11; };

    for (SamplerKind kind : {SamplerKind::Circuit, SamplerKind::Direct}) {
        auto sampler = make_sampler(inst, kind);
        Rng rng(99);
        int hi = 0;
        const int kDraws = 20000;
        for (int i = 0; i < kDraws; ++i) {
            AmplifiedDraw draw = sampler->sample_amplified(good, rng);
            ASSERT_TRUE(good(draw.outcome.u));
            ASSERT_EQ(draw.outcome.b, dot(draw.outcome.u, 0b00));
            ASSERT_EQ(draw.circuit_runs, 2u * rotation_count(0.5) + 1u);
            if (draw.outcome.u == 0b11) ++hi;
        }
        double frac = static_cast<double>(hi) / kDraws;
        EXPECT_NEAR(frac, 0.5, 0.02) << "sampler kind " << static_cast<int>(kind);
    }
}

TEST(SampleAmplified, CostScalesAsInverseSqrtMass) {
    // delta spectra: good mass over nonzero u is about 2^{2-n}
    for (int n : {6, 8, 10}) {
        BhspInstance inst(make_delta(n, 3), 1);
        DirectSampler sampler(inst);
        Rng rng(1);
        auto good = [](std::uint32_t u) { return u != 0; };
        AmplifiedDraw draw = sampler.sample_amplified(good, rng);
        double p = std::ldexp(1.0, 2 - n) * (1.0 - std::ldexp(1.0, -n));
        double expect_runs =
            2.0 * std::ceil(std::numbers::pi / (4.0 * std::asin(std::sqrt(p))) - 0.5) + 1.0;
        EXPECT_EQ(static_cast<double>(draw.circuit_runs), expect_runs);
    }
}

TEST(SampleAmplified, ThinRestrictionPathStillConditions) {
    // delta at n=12 has nonzero-u mass ~2^-10 < 1/64: exercises the
    // restricted-CDF branch
    BhspInstance inst(make_delta(12, 100), 77);
    DirectSampler sampler(inst);
    Rng rng(3);
    auto good = [](std::uint32_t u) { return u != 0; };
    for (int i = 0; i < 20; ++i) {
        AmplifiedDraw draw = sampler.sample_amplified(good, rng);
        ASSERT_NE(draw.outcome.u, 0u);
        ASSERT_EQ(draw.outcome.b, dot(draw.outcome.u, 77));
        ASSERT_GT(draw.circuit_runs, 20u);  // ~2(2*25+1) runs at p ~ 2^-10
    }
}

TEST(StateDump, CsvShapeAndSizeGuard) {
    BhspInstance inst = and2_instance(0);
    CircuitState st = evolve(inst);
    std::ostringstream os;
    dump_state_csv(st, os);
    EXPECT_EQ(os.str(),
              "b,u,amplitude\n"
              "0,00,0.5\n0,01,0.5\n0,10,0.5\n0,11,-0.5\n"
              "1,00,0\n1,01,0\n1,10,0\n1,11,0\n");

    CircuitState big;
    big.n = 11;
    big.amps.assign(std::size_t{1} << 12, 0.0);
    EXPECT_THROW(dump_state_csv(big, os), std::invalid_argument);
}
