// Command-line harness for the hidden-shift library: single solves,
// spectrum export, seeded sweeps, the invariant suite, and scaling fits.
//
// Exit codes: 0 success, 1 solver failure / budget exhausted,
//             2 invalid input, 3 invariant failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bhsp/bhsp.hpp"

namespace {

constexpr int kExitSolverFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInvariantFailure = 3;

bhsp::Family parse_family(const std::string& s) {
    if (s == "bent") return bhsp::Family::Bent;
    if (s == "delta") return bhsp::Family::Delta;
    if (s == "random") return bhsp::Family::Random;
    if (s == "file") return bhsp::Family::File;
    throw CLI::ValidationError("--family", "must be bent|delta|random|file");
}

bhsp::SolveMode parse_mode(const std::string& s) {
    if (s == "plain") return bhsp::SolveMode::Plain;
    if (s == "amplified") return bhsp::SolveMode::Amplified;
    if (s == "promise") return bhsp::SolveMode::Promise;
    throw CLI::ValidationError("--mode", "must be plain|amplified|promise");
}

std::ostream* open_output(const std::string& path, std::ofstream& file) {
    if (path == "-") return &std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return &file;
}

int cmd_solve(const std::string& family_name, const std::string& file_path, int n,
              const std::string& shift_arg, const std::string& mode_name, double delta,
              double epsilon, std::uint64_t seed, std::uint64_t max_queries) {
    bhsp::Family family = parse_family(family_name);
    bhsp::SolveMode mode = parse_mode(mode_name);

    const bhsp::TruthTable* file_ptr = nullptr;
    bhsp::TruthTable file_table(1);
    if (family == bhsp::Family::File) {
        if (file_path.empty()) throw std::invalid_argument("--family file requires --file");
        file_table = bhsp::truth_table_from_file(file_path);
        file_ptr = &file_table;
        if (n != 0 && n != file_table.n())
            throw std::invalid_argument("--n contradicts the loaded table (n=" +
                                        std::to_string(file_table.n()) + ")");
        n = file_table.n();
    } else if (n == 0) {
        throw std::invalid_argument("--n is required unless --family file");
    }

    std::uint64_t instance_seed = bhsp::derive_seed(seed, static_cast<std::uint64_t>(n), 0, 0);
    bhsp::GeneratedInstance gen = bhsp::make_instance(family, n, instance_seed, file_ptr);
    if (shift_arg != "random") {
        std::uint32_t shift = static_cast<std::uint32_t>(std::stoul(shift_arg, nullptr, 16));
        if (shift >= gen.instance.size()) throw std::invalid_argument("--shift out of range");
        gen.instance = bhsp::BhspInstance(gen.instance.f_table(), shift,
                                          bhsp::Posedness::AllowIllPosed);
    }

    bhsp::SolveConfig sc;
    sc.mode = mode;
    sc.delta = delta;
    sc.epsilon = epsilon;
    sc.seed = bhsp::derive_seed(seed, static_cast<std::uint64_t>(n), 0, 1);
    sc.max_queries = max_queries == 0 ? UINT64_MAX : max_queries;
    bhsp::RunReport rep = bhsp::solve_quantum(gen.instance, sc);

    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%x", gen.instance.planted_shift());
    std::cout << "n=" << n << "\n";
    std::cout << "family=" << bhsp::to_string(family) << "\n";
    std::cout << "mode=" << bhsp::to_string(mode) << "\n";
    std::cout << "gamma_f=" << gen.gamma_f << "\n";
    std::cout << "planted_shift=" << buf << "\n";
    if (rep.found_shift) {
        std::snprintf(buf, sizeof buf, "0x%x", *rep.found_shift);
        std::cout << "found_shift=" << buf << "\n";
        std::cout << "match=" << (*rep.found_shift == gen.instance.planted_shift() ? 1 : 0)
                  << "\n";
    } else {
        std::cout << "found_shift=-\nmatch=0\n";
    }
    std::cout << "status=" << bhsp::to_string(rep.status) << "\n";
    std::cout << "f_queries=" << rep.f_queries << "\n";
    std::cout << "g_queries=" << rep.g_queries << "\n";
    std::cout << "subroutine_runs=" << rep.subroutine_runs << "\n";
    std::cout << "rank_at_stop=" << rep.rank_at_stop << "\n";
    std::cout << "wall_ms=" << rep.wall_seconds * 1000.0 << "\n";

    return rep.status == bhsp::SolveStatus::Found ? 0 : kExitSolverFailure;
}

int cmd_spectrum(const std::string& file_path, const std::string& out_path) {
    bhsp::TruthTable t = bhsp::truth_table_from_file(file_path);
    bhsp::Spectrum sp = bhsp::wht(t);
    std::ofstream file;
    std::ostream* out = open_output(out_path, file);
    bhsp::write_spectrum_csv(sp, *out);
    return 0;
}

int cmd_sweep(const std::string& config_path) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file " + config_path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    bhsp::ExperimentConfig cfg = bhsp::parse_experiment_config(text);

    bhsp::SweepReport rep = bhsp::run_sweep(cfg);
    std::ofstream file;
    std::ostream* out = open_output(cfg.output, file);
    if (cfg.format == bhsp::OutputFormat::Csv)
        bhsp::write_sweep_csv(rep, *out);
    else
        bhsp::write_sweep_json(rep, *out);
    return 0;
}

int cmd_verify() {
    bhsp::VerifyReport rep = bhsp::verify_corpus();
    for (const bhsp::VerifyCheck& c : rep.checks) {
        std::printf("%-26s max_dev=%-12.3g tol=%-8.3g %s\n", c.name.c_str(), c.max_deviation,
                    c.tolerance, c.pass ? "pass" : "FAIL");
    }
    std::printf("%s\n", rep.all_pass ? "all invariants pass" : "invariant FAILURES detected");
    return rep.all_pass ? 0 : kExitInvariantFailure;
}

int cmd_fit(const std::string& report_path) {
    std::ifstream in(report_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open report file " + report_path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    bhsp::SweepReport rep = bhsp::parse_sweep_csv(text);

    bool any = false;
    for (const char* solver : {"quantum", "classical"}) {
        bool present = false;
        for (const bhsp::SweepRow& r : rep.rows)
            if (r.solver == solver) { present = true; break; }
        if (!present) continue;
        any = true;
        bhsp::ScalingFit fit = bhsp::fit_scaling(rep.rows, solver);
        if (fit.log2_scale)
            std::printf("%s: slope_log2_median_queries=%.4f ci95=[%.4f, %.4f] distinct_n=%d\n",
                        solver, fit.slope, fit.ci_lo, fit.ci_hi, fit.distinct_n);
        else
            std::printf("%s: slope_median_queries=%.4f ci95=[%.4f, %.4f] distinct_n=%d\n",
                        solver, fit.slope, fit.ci_lo, fit.ci_hi, fit.distinct_n);
    }
    if (!any) throw std::invalid_argument("report contains no rows to fit");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boolean hidden shift: solvers, sampling simulator, experiment harness"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "solve one instance and print the run report");
    std::string family = "random", file_path, shift = "random", mode = "plain";
    int n = 0;
    double delta = 1.0 / 3.0, epsilon = 0.1;
    std::uint64_t seed = 0, max_queries = 0;
    solve->add_option("--family", family, "bent|delta|random|file");
    solve->add_option("--file", file_path, "truth-table file (family=file)");
    solve->add_option("--n", n, "number of input bits");
    solve->add_option("--shift", shift, "hidden shift as hex, or 'random'");
    solve->add_option("--mode", mode, "plain|amplified|promise");
    solve->add_option("--delta", delta, "promise-mode influence lower bound");
    solve->add_option("--epsilon", epsilon, "promise-mode failure budget");
    solve->add_option("--seed", seed, "seed for instance and solver randomness");
    solve->add_option("--max-queries", max_queries, "query budget, 0 = unlimited");

    auto* spectrum = app.add_subcommand("spectrum", "Walsh-Hadamard spectrum of a table as CSV");
    std::string spec_file, spec_out = "-";
    spectrum->add_option("--file", spec_file, "truth-table file")->required();
    spectrum->add_option("--out", spec_out, "output CSV path, '-' for stdout");

    auto* sweep = app.add_subcommand("sweep", "run a seeded experiment sweep from a config file");
    std::string config_path;
    sweep->add_option("--config", config_path, "flat key=value config file")->required();

    app.add_subcommand("verify", "run the invariant suite on the built-in corpus");

    auto* fit = app.add_subcommand("fit", "fit query-count scaling from a sweep CSV");
    std::string report_path;
    fit->add_option("--report", report_path, "sweep CSV produced by `sweep`")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (solve->parsed())
            return cmd_solve(family, file_path, n, shift, mode, delta, epsilon, seed,
                             max_queries);
        if (spectrum->parsed()) return cmd_spectrum(spec_file, spec_out);
        if (sweep->parsed()) return cmd_sweep(config_path);
        if (app.get_subcommand("verify")->parsed()) return cmd_verify();
        if (fit->parsed()) return cmd_fit(report_path);
    } catch (const bhsp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const bhsp::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return 0;
}
