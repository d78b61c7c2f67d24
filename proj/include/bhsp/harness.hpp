#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhsp/report.hpp"

namespace bhsp {

class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    Family family = Family::Random;
    std::string file_path;       // family = file
    std::vector<int> n_range;
    int trials = 1;
    SolverSel solver = SolverSel::Quantum;
    SolveMode mode = SolveMode::Plain;
    double delta = 0.0;
    double epsilon = 0.0;
    std::uint64_t max_queries = 0;  // 0 = unlimited
    std::uint64_t master_seed = 0;
    std::string output = "-";
    OutputFormat format = OutputFormat::Csv;
    SamplerKind sampler = SamplerKind::Auto;
};

/*
 * Flat key=value config, one pair per line, '#' comments. Keys mirror
 * ExperimentConfig: family, file, n_range (comma separated), trials,
 * solver, mode, delta, epsilon, max_queries, master_seed, output, format,
 * sampler.
 */
inline ExperimentConfig parse_experiment_config(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::set<std::string> seen;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line.erase(0, start);

        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate config key: " + key);

        if (key == "family") {
            if (val == "bent") cfg.family = Family::Bent;
            else if (val == "delta") cfg.family = Family::Delta;
            else if (val == "random") cfg.family = Family::Random;
            else if (val == "file") cfg.family = Family::File;
            else throw std::invalid_argument("unknown family: " + val);
        } else if (key == "file") {
            cfg.file_path = val;
        } else if (key == "n_range") {
            for (const std::string& tok : detail::split(val, ',')) {
                int n = std::stoi(tok);
                if (n < kMinBits || n > kMaxBits)
                    throw std::invalid_argument("n_range entry out of [1, 28]: " + tok);
                cfg.n_range.push_back(n);
            }
        } else if (key == "trials") {
            cfg.trials = std::stoi(val);
        } else if (key == "solver") {
            if (val == "quantum") cfg.solver = SolverSel::Quantum;
            else if (val == "classical") cfg.solver = SolverSel::Classical;
            else if (val == "both") cfg.solver = SolverSel::Both;
            else throw std::invalid_argument("unknown solver: " + val);
        } else if (key == "mode") {
            if (val == "plain") cfg.mode = SolveMode::Plain;
            else if (val == "amplified") cfg.mode = SolveMode::Amplified;
            else if (val == "promise") cfg.mode = SolveMode::Promise;
            else throw std::invalid_argument("unknown mode: " + val);
        } else if (key == "delta") {
            cfg.delta = std::stod(val);
        } else if (key == "epsilon") {
            cfg.epsilon = std::stod(val);
        } else if (key == "max_queries") {
            cfg.max_queries = std::stoull(val);
        } else if (key == "master_seed") {
            cfg.master_seed = std::stoull(val, nullptr, 0);
        } else if (key == "output") {
            cfg.output = val;
        } else if (key == "format") {
            if (val == "csv") cfg.format = OutputFormat::Csv;
            else if (val == "json") cfg.format = OutputFormat::Json;
            else throw std::invalid_argument("unknown format: " + val);
        } else if (key == "sampler") {
            if (val == "auto") cfg.sampler = SamplerKind::Auto;
            else if (val == "circuit") cfg.sampler = SamplerKind::Circuit;
            else if (val == "direct") cfg.sampler = SamplerKind::Direct;
            else throw std::invalid_argument("unknown sampler: " + val);
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }

    if (cfg.n_range.empty()) throw std::invalid_argument("n_range must be nonempty");
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.family == Family::File && cfg.file_path.empty())
        throw std::invalid_argument("family=file requires file=<path>");
    if (cfg.mode == SolveMode::Promise && cfg.solver != SolverSel::Classical)
        promise_cutoff(cfg.n_range.front(), cfg.delta, cfg.epsilon);  // validates delta/epsilon
    return cfg;
}

inline std::string config_echo(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "family=" << to_string(cfg.family);
    if (cfg.family == Family::File) os << " file=" << cfg.file_path;
    os << " n_range=";
    for (std::size_t i = 0; i < cfg.n_range.size(); ++i)
        os << (i ? "|" : "") << cfg.n_range[i];
    os << " trials=" << cfg.trials;
    os << " solver="
       << (cfg.solver == SolverSel::Quantum ? "quantum"
           : cfg.solver == SolverSel::Classical ? "classical" : "both");
    os << " mode=" << to_string(cfg.mode);
    if (cfg.mode == SolveMode::Promise)
        os << " delta=" << detail::fmt("%.10g", cfg.delta)
           << " epsilon=" << detail::fmt("%.10g", cfg.epsilon);
    os << " max_queries=" << cfg.max_queries;
    os << " master_seed=" << detail::fmt_seed(cfg.master_seed);
    return os.str();
}

// ---------------------------------------------------------------------------
// Instance generation

struct GeneratedInstance {
    BhspInstance instance;
    double gamma_f;
};

/*
 * Deterministic instance for (family, n, seed). family=random resamples
 * until the table has no nontrivial self-shift, which for uniformly random
 * tables essentially always succeeds on the first try once n >= 4.
 */
inline GeneratedInstance make_instance(Family family, int n, std::uint64_t seed,
                                       const TruthTable* file_table = nullptr) {
    std::uint64_t f_seed = derive_seed(seed, 1, 0, 0);
    std::uint64_t shift_seed = derive_seed(seed, 2, 0, 0);
    std::uint32_t shift =
        static_cast<std::uint32_t>(Rng(shift_seed).below(std::uint64_t{1} << n));

    auto build = [&](TruthTable t, double gamma) {
        return GeneratedInstance{BhspInstance(std::move(t), shift, Posedness::AllowIllPosed),
                                 gamma};
    };

    switch (family) {
        case Family::Bent: {
            TruthTable t = make_bent(n, f_seed);
            return build(std::move(t), 0.5);
        }
        case Family::Delta: {
            std::uint32_t x0 =
                static_cast<std::uint32_t>(Rng(f_seed).below(std::uint64_t{1} << n));
            TruthTable t = make_delta(n, x0);
            return build(std::move(t), std::ldexp(1.0, 1 - n));
        }
        case Family::Random: {
            for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
                TruthTable t = make_random(n, mix64(f_seed + attempt));
                InfluenceProfile p = influence_profile(t);
                if (p.gamma_min > 0.0) return build(std::move(t), p.gamma_min);
            }
            throw std::runtime_error("could not draw a well-posed random function");
        }
        case Family::File: {
            if (!file_table) throw std::invalid_argument("file family needs a loaded table");
            if (file_table->n() != n)
                throw std::invalid_argument("file table has n=" + std::to_string(file_table->n()) +
                                            ", sweep asked for n=" + std::to_string(n));
            InfluenceProfile p = influence_profile(*file_table);
            if (p.gamma_min <= 0.0)
                throw std::invalid_argument("file table has a nontrivial self-shift");
            return build(*file_table, p.gamma_min);
        }
    }
    throw std::logic_error("unreachable family");
}

// ---------------------------------------------------------------------------
// Sweeps

namespace detail {

// peak working-set estimate per instance, bytes
inline double sweep_bytes_estimate(int n, SolverSel solver) {
    double points = std::ldexp(1.0, n);
    double common = points * (8.0 + 0.125);            // influence profile + table
    double quantum = points * 16.0;                    // direct sampler tables
    double classical = points * 0.25;                  // candidate + queried bitsets
    double need = common;
    if (solver != SolverSel::Classical) need += quantum;
    if (solver != SolverSel::Quantum) need += classical;
    return need;
}

inline constexpr double kMemoryBudgetBytes = 2.5 * 1024.0 * 1024.0 * 1024.0;

}  // namespace detail

/*
 * Runs the configured solver(s) over |n_range| x trials fresh instances.
 * Per-trial seeds derive from the master seed (see derive_seed); rows come
 * out sorted by (n, trial) with the instance shared between solvers of the
 * same trial. Fully reproducible: the same config yields byte-identical
 * reports.
 */
inline SweepReport run_sweep(const ExperimentConfig& cfg) {
    std::vector<int> ns = cfg.n_range;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    for (int n : ns)
        if (detail::sweep_bytes_estimate(n, cfg.solver) > detail::kMemoryBudgetBytes)
            throw CapacityError("n=" + std::to_string(n) +
                                " exceeds the sweep memory budget; reduce n_range");

    TruthTable file_table(1);
    const TruthTable* file_ptr = nullptr;
    if (cfg.family == Family::File) {
        file_table = truth_table_from_file(cfg.file_path);
        file_ptr = &file_table;
    }

    std::uint64_t max_q = cfg.max_queries == 0 ? UINT64_MAX : cfg.max_queries;
    bool want_quantum = cfg.solver != SolverSel::Classical;
    bool want_classical = cfg.solver != SolverSel::Quantum;

    SweepReport rep;
    rep.config_line = config_echo(cfg);
    for (int n : ns) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
            std::uint64_t instance_seed = derive_seed(cfg.master_seed,
                                                      static_cast<std::uint64_t>(n),
                                                      static_cast<std::uint64_t>(trial), 0);
            GeneratedInstance gen = make_instance(cfg.family, n, instance_seed, file_ptr);

            auto base_row = [&](const char* solver_name, const char* mode_name) {
                SweepRow r;
                r.solver = solver_name;
                r.mode = mode_name;
                r.family = to_string(cfg.family);
                r.n = n;
                r.trial = trial;
                r.gamma_f = gen.gamma_f;
                r.planted_shift = gen.instance.planted_shift();
                return r;
            };

            if (want_quantum) {
                SolveConfig sc;
                sc.mode = cfg.mode;
                sc.delta = cfg.delta;
                sc.epsilon = cfg.epsilon;
                sc.seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(n),
                                      static_cast<std::uint64_t>(trial), 1);
                sc.max_queries = max_q;
                sc.sampler = cfg.sampler;
                RunReport rr = solve_quantum(gen.instance, sc);

                SweepRow r = base_row("quantum", to_string(cfg.mode));
                r.seed = sc.seed;
                r.found_shift = rr.found_shift;
                r.success = rr.found_shift && *rr.found_shift == gen.instance.planted_shift();
                r.f_queries = rr.f_queries;
                r.g_queries = rr.g_queries;
                r.subroutine_runs = rr.subroutine_runs;
                r.status = to_string(rr.status);
                rep.rows.push_back(std::move(r));
            }
            if (want_classical) {
                std::uint64_t seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(n),
                                                 static_cast<std::uint64_t>(trial), 2);
                RunReport rr = solve_classical(gen.instance, seed, max_q);

                SweepRow r = base_row("classical", "-");
                r.seed = seed;
                r.found_shift = rr.found_shift;
                r.success = rr.found_shift && *rr.found_shift == gen.instance.planted_shift();
                r.f_queries = rr.f_queries;
                r.g_queries = rr.g_queries;
                r.subroutine_runs = rr.subroutine_runs;
                r.status = to_string(rr.status);
                rep.rows.push_back(std::move(r));
            }
        }
    }
    rep.aggregates = compute_aggregates(rep.rows);
    return rep;
}

// ---------------------------------------------------------------------------
// Scaling fits

struct ScalingFit {
    double slope = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    int distinct_n = 0;
    bool log2_scale = false;  // slope of log2(median) vs n (classical style)
};

namespace detail {

inline double ls_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    return num / den;
}

}  // namespace detail

/*
 * Least-squares slope of median total queries against n for one solver:
 * classical rows are fit on log2(median) (the exponent of the 2^{cn}
 * scaling), quantum rows on the median itself (queries per unit n).
 * The confidence interval is a 95% bootstrap over trials.
 */
inline ScalingFit fit_scaling(const std::vector<SweepRow>& rows, const std::string& solver,
                              int bootstrap = 200) {
    std::map<int, std::vector<std::uint64_t>> by_n;
    for (const SweepRow& r : rows)
        if (r.solver == solver) by_n[r.n].push_back(r.total_queries());

    ScalingFit fit;
    fit.distinct_n = static_cast<int>(by_n.size());
    fit.log2_scale = solver == "classical";
    if (fit.distinct_n < 4)
        throw std::invalid_argument("scaling fit needs >= 4 distinct n, have " +
                                    std::to_string(fit.distinct_n));

    auto slope_of = [&](const std::map<int, std::vector<std::uint64_t>>& groups) {
        std::vector<double> xs, ys;
        for (const auto& [n, totals] : groups) {
            std::vector<std::uint64_t> sorted = totals;
            std::sort(sorted.begin(), sorted.end());
            double med = detail::median_of_sorted(sorted);
            xs.push_back(static_cast<double>(n));
            ys.push_back(fit.log2_scale ? std::log2(med) : med);
        }
        return detail::ls_slope(xs, ys);
    };

    fit.slope = slope_of(by_n);

    std::vector<double> slopes;
    slopes.reserve(static_cast<std::size_t>(bootstrap));
    Rng rng(derive_seed(0xb007u, fit.log2_scale ? 1 : 2, 0, 0));
    for (int b = 0; b < bootstrap; ++b) {
        std::map<int, std::vector<std::uint64_t>> resampled;
        for (const auto& [n, totals] : by_n) {
            std::vector<std::uint64_t>& dst = resampled[n];
            dst.reserve(totals.size());
            for (std::size_t i = 0; i < totals.size(); ++i)
                dst.push_back(totals[rng.below(totals.size())]);
        }
        slopes.push_back(slope_of(resampled));
    }
    std::sort(slopes.begin(), slopes.end());
    std::size_t lo = static_cast<std::size_t>(std::floor(0.025 * (bootstrap - 1)));
    std::size_t hi = static_cast<std::size_t>(std::ceil(0.975 * (bootstrap - 1)));
    fit.ci_lo = slopes[lo];
    fit.ci_hi = slopes[hi];
    return fit;
}

// ---------------------------------------------------------------------------
// Invariant suite

struct VerifyCheck {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass = true;

    void add(const std::string& name, double dev, double tol) {
        bool ok = dev <= tol;
        checks.push_back(VerifyCheck{name, dev, tol, ok});
        if (!ok) all_pass = false;
    }
};

struct Corpus {
    std::vector<TruthTable> tables;
};

/*
 * Exhaustive tables for n in {1,2,3}, seeded random samples for n in
 * [4,10], plus the named families. Fixed seeds: the corpus is identical
 * on every run.
 */
inline Corpus builtin_corpus(int random_per_n = 50) {
    Corpus c;
    for (int n = 1; n <= 3; ++n) {
        std::size_t points = std::size_t{1} << n;
        std::size_t count = std::size_t{1} << points;
        for (std::size_t code = 0; code < count; ++code) {
            TruthTable t(n);
            for (std::size_t x = 0; x < points; ++x)
                if ((code >> x) & 1) t.set(static_cast<std::uint32_t>(x), true);
            c.tables.push_back(std::move(t));
        }
    }
    for (int n = 4; n <= 10; ++n)
        for (int i = 0; i < random_per_n; ++i)
            c.tables.push_back(make_random(n, derive_seed(0xc0ffee, static_cast<std::uint64_t>(n),
                                                          static_cast<std::uint64_t>(i), 0)));
    for (int n = 2; n <= 10; n += 2)
        for (std::uint64_t variant : {0ull, 1ull, 2ull})
            c.tables.push_back(make_bent(n, variant));
    for (int n = 1; n <= 10; ++n) {
        c.tables.push_back(make_delta(n, 0));
        c.tables.push_back(make_delta(n, static_cast<std::uint32_t>((1u << n) - 1)));
    }
    return c;
}

inline VerifyReport verify_corpus(int random_per_n = 50, std::uint64_t sample_budget = 20000) {
    Corpus corpus = builtin_corpus(random_per_n);
    VerifyReport rep;

    // spectra invariants
    double dev_parseval = 0.0, dev_dyadic = 0.0, dev_involution = 0.0;
    for (const TruthTable& t : corpus.tables) {
        Spectrum sp = wht(t);
        dev_parseval = std::max(dev_parseval, parseval_deviation(sp));
        dev_dyadic = std::max(dev_dyadic, dyadic_grid_deviation(sp));

        std::vector<std::int64_t> a = wht_exact(t);
        walsh_hadamard_inplace(std::span<std::int64_t>(a));
        for (std::size_t x = 0; x < t.size(); ++x) {
            std::int64_t back = a[x] >> t.n();
            std::int64_t orig = t.bit(static_cast<std::uint32_t>(x)) ? -1 : 1;
            dev_involution = std::max(dev_involution, std::abs(static_cast<double>(back - orig)));
        }
    }
    rep.add("parseval", dev_parseval, 1e-9);
    rep.add("dyadic_grid", dev_dyadic, 0.0);
    rep.add("wht_involution", dev_involution, 0.0);

    // influence: combinatorial vs spectral vs profile
    double dev_influence = 0.0, dev_profile = 0.0;
    for (const TruthTable& t : corpus.tables) {
        Spectrum sp = wht(t);
        InfluenceProfile prof = influence_profile(t);
        for (std::size_t v = 0; v < t.size(); ++v) {
            double comb = influence_of(t, static_cast<std::uint32_t>(v));
            double spec = influence_spectral(sp, static_cast<std::uint32_t>(v));
            dev_influence = std::max(dev_influence, std::abs(comb - spec));
            dev_profile = std::max(dev_profile, std::abs(prof.gamma[v] - comb));
        }
    }
    rep.add("influence_two_routes", dev_influence, 1e-9);
    rep.add("profile_consistency", dev_profile, 1e-12);

    // named families
    double dev_bent = 0.0;
    for (int n = 2; n <= 10; n += 2) {
        for (std::uint64_t variant : {0ull, 7ull, 13ull}) {
            Spectrum sp = wht(make_bent(n, variant));
            double flat = std::ldexp(1.0, -n / 2);
            for (double cstar : sp.coeffs)
                dev_bent = std::max(dev_bent, std::abs(std::abs(cstar) - flat));
        }
    }
    rep.add("bent_flatness", dev_bent, 1e-12);

    double dev_delta = 0.0;
    for (int n = 1; n <= 10; ++n) {
        InfluenceProfile prof = influence_profile(make_delta(n, (1u << n) >> 1));
        double want = std::ldexp(1.0, 1 - n);
        for (std::size_t v = 1; v < prof.gamma.size(); ++v)
            dev_delta = std::max(dev_delta, std::abs(prof.gamma[v] - want));
    }
    rep.add("delta_influence", dev_delta, 1e-12);

    double dev_cov = 0.0;
    for (const TruthTable& t : corpus.tables) {
        if (t.n() > 8) continue;
        std::uint32_t s = static_cast<std::uint32_t>(
            Rng(derive_seed(0x5417, t.words()[0], t.size(), 0)).below(t.size()));
        TruthTable shifted(t.n());
        for (std::size_t x = 0; x < t.size(); ++x)
            shifted.set(static_cast<std::uint32_t>(x), t.bit(static_cast<std::uint32_t>(x) ^ s));
        Spectrum a = wht(t), b = wht(shifted);
        for (std::size_t u = 0; u < a.coeffs.size(); ++u)
            dev_cov = std::max(dev_cov, std::abs(std::abs(a.coeffs[u]) - std::abs(b.coeffs[u])));
    }
    rep.add("shift_covariance", dev_cov, 0.0);

    // circuit-level invariants over well-posed instances
    double dev_fid = 0.0, dev_norm = 0.0, dev_gind = 0.0, dev_accounting = 0.0;
    double orth_violations = 0.0;
    std::uint64_t samples_done = 0;
    std::size_t instance_count = 0;
    for (const TruthTable& t : corpus.tables) {
        if (!well_posed(t)) continue;
        ++instance_count;
        std::uint64_t tag = derive_seed(0x1c57, t.words()[0], t.size(), instance_count);
        std::uint32_t s = static_cast<std::uint32_t>(Rng(tag).below(t.size()));
        BhspInstance inst(t, s, Posedness::AllowIllPosed);

        if (t.n() <= 6) {
            QueryCounters before = inst.counters();
            CircuitState gate = evolve(inst);
            dev_accounting = std::max(dev_accounting,
                                      std::abs(static_cast<double>(inst.counters().f - before.f) - 1.0) +
                                      std::abs(static_cast<double>(inst.counters().g - before.g) - 1.0));
            CircuitState formula = closed_form_state(t, s);
            for (std::size_t i = 0; i < gate.amps.size(); ++i)
                dev_fid = std::max(dev_fid, std::abs(gate.amps[i] - formula.amps[i]));
            dev_norm = std::max(dev_norm, norm_deviation(gate));

            std::vector<double> base = u_marginal(gate);
            for (std::uint32_t s2 = 0; s2 < t.size(); ++s2) {
                CircuitState other = detail::evolve_state(t, s2);
                std::vector<double> marg = u_marginal(other);
                for (std::size_t u = 0; u < marg.size(); ++u)
                    dev_gind = std::max(dev_gind, std::abs(marg[u] - base[u]));
            }
        }

        if (samples_done < sample_budget && t.n() <= 10) {
            Rng rng(mix64(tag));
            auto sampler = make_sampler(inst, (instance_count % 2) ? SamplerKind::Circuit
                                                                   : SamplerKind::Direct);
            for (int i = 0; i < 40 && samples_done < sample_budget; ++i, ++samples_done) {
                SampleOutcome out = sampler->sample(rng);
                if (out.b != dot(out.u, s)) orth_violations += 1.0;
            }
        }
    }
    rep.add("circuit_fidelity", dev_fid, 1e-12);
    rep.add("unitarity", dev_norm, 1e-9);
    rep.add("g_independence", dev_gind, 1e-12);
    rep.add("orthogonality_violations", orth_violations, 0.0);
    rep.add("query_accounting", dev_accounting, 0.0);

    // end-to-end solver soundness on a small fuzz batch
    double solver_failures = 0.0;
    for (int i = 0; i < 300; ++i) {
        std::uint64_t seed = derive_seed(0x50fa, static_cast<std::uint64_t>(i), 0, 0);
        int n = 1 + static_cast<int>(Rng(seed).below(10));
        GeneratedInstance gen = make_instance(Family::Random, n, seed);
        SolveConfig sc;
        sc.mode = (i % 2) ? SolveMode::Amplified : SolveMode::Plain;
        sc.seed = mix64(seed);
        RunReport rr = solve_quantum(gen.instance, sc);
        if (rr.status != SolveStatus::Found || !rr.found_shift ||
            *rr.found_shift != gen.instance.planted_shift())
            solver_failures += 1.0;
    }
    rep.add("solver_soundness", solver_failures, 0.0);

    return rep;
}

}  // namespace bhsp
