#pragma once

#include <algorithm>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhsp/solver.hpp"

#include <json.hpp>

namespace bhsp {

inline constexpr int kReportSchema = 1;

enum class Family { Bent, Delta, Random, File };
enum class SolverSel { Quantum, Classical, Both };
enum class OutputFormat { Csv, Json };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::Bent: return "bent";
        case Family::Delta: return "delta";
        case Family::Random: return "random";
        case Family::File: return "file";
    }
    return "?";
}

inline const char* to_string(SolveMode m) {
    switch (m) {
        case SolveMode::Plain: return "plain";
        case SolveMode::Amplified: return "amplified";
        case SolveMode::Promise: return "promise";
    }
    return "?";
}

// One (n, trial, solver) record. Everything here is deterministic given
// the sweep config; wall time is deliberately not part of the report so
// that emitted reports are byte-identical across runs.
struct SweepRow {
    std::string solver;  // "quantum" | "classical"
    std::string mode;    // solve mode, "-" for classical
    std::string family;
    int n = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    double gamma_f = 0.0;
    std::uint32_t planted_shift = 0;
    std::optional<std::uint32_t> found_shift;
    bool success = false;
    std::uint64_t f_queries = 0;
    std::uint64_t g_queries = 0;
    std::uint64_t subroutine_runs = 0;
    std::string status;

    std::uint64_t total_queries() const { return f_queries + g_queries; }
};

struct Aggregate {
    std::string solver;
    int n = 0;
    std::size_t rows = 0;
    double success_rate = 0.0;
    double mean_queries = 0.0;
    double median_queries = 0.0;
    std::uint64_t p95_queries = 0;
};

struct SweepReport {
    std::string config_line;  // echo of the sweep configuration
    std::vector<SweepRow> rows;
    std::vector<Aggregate> aggregates;
};

namespace detail {

inline std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

inline std::string fmt_seed(std::uint64_t s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%016" PRIx64, s);
    return buf;
}

inline std::string fmt_vec(std::uint32_t v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", v);
    return buf;
}

inline double median_of_sorted(const std::vector<std::uint64_t>& sorted) {
    std::size_t m = sorted.size();
    if (m == 0) return 0.0;
    if (m % 2 == 1) return static_cast<double>(sorted[m / 2]);
    return 0.5 * (static_cast<double>(sorted[m / 2 - 1]) + static_cast<double>(sorted[m / 2]));
}

}  // namespace detail

// Aggregates are a pure function of the rows; re-running this on parsed
// rows must reproduce the embedded values exactly.
inline std::vector<Aggregate> compute_aggregates(const std::vector<SweepRow>& rows) {
    std::vector<std::pair<std::string, int>> keys;
    for (const SweepRow& r : rows) {
        std::pair<std::string, int> k{r.solver, r.n};
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    }
    std::sort(keys.begin(), keys.end());

    std::vector<Aggregate> out;
    for (const auto& [solver, n] : keys) {
        Aggregate a;
        a.solver = solver;
        a.n = n;
        std::vector<std::uint64_t> totals;
        std::size_t successes = 0;
        for (const SweepRow& r : rows) {
            if (r.solver != solver || r.n != n) continue;
            totals.push_back(r.total_queries());
            if (r.success) ++successes;
        }
        std::sort(totals.begin(), totals.end());
        a.rows = totals.size();
        a.success_rate = static_cast<double>(successes) / static_cast<double>(totals.size());
        double sum = 0.0;
        for (std::uint64_t q : totals) sum += static_cast<double>(q);
        a.mean_queries = sum / static_cast<double>(totals.size());
        a.median_queries = detail::median_of_sorted(totals);
        std::size_t idx = totals.empty() ? 0 : (totals.size() * 95 + 99) / 100 - 1;
        if (idx >= totals.size()) idx = totals.size() - 1;
        a.p95_queries = totals.empty() ? 0 : totals[idx];
        out.push_back(std::move(a));
    }
    return out;
}

inline void write_sweep_csv(const SweepReport& rep, std::ostream& out) {
    out << "schema=" << kReportSchema << "\n";
    out << "# config: " << rep.config_line << "\n";
    out << "solver,mode,family,n,trial,seed,gamma_f,planted_shift,found_shift,"
           "success,f_queries,g_queries,subroutine_runs,status\n";
    for (const SweepRow& r : rep.rows) {
        out << r.solver << ',' << r.mode << ',' << r.family << ',' << r.n << ',' << r.trial
            << ',' << detail::fmt_seed(r.seed) << ',' << detail::fmt("%.10g", r.gamma_f) << ','
            << detail::fmt_vec(r.planted_shift) << ','
            << (r.found_shift ? detail::fmt_vec(*r.found_shift) : std::string("-")) << ','
            << (r.success ? 1 : 0) << ',' << r.f_queries << ',' << r.g_queries << ','
            << r.subroutine_runs << ',' << r.status << "\n";
    }
    out << "aggregate,solver,n,rows,success_rate,mean_queries,median_queries,p95_queries\n";
    for (const Aggregate& a : rep.aggregates) {
        out << "aggregate," << a.solver << ',' << a.n << ',' << a.rows << ','
            << detail::fmt("%.6f", a.success_rate) << ',' << detail::fmt("%.6f", a.mean_queries)
            << ',' << detail::fmt("%.1f", a.median_queries) << ',' << a.p95_queries << "\n";
    }
}

inline void write_sweep_json(const SweepReport& rep, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["config"] = rep.config_line;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const SweepRow& r : rep.rows) {
        nlohmann::ordered_json row;
        row["solver"] = r.solver;
        row["mode"] = r.mode;
        row["family"] = r.family;
        row["n"] = r.n;
        row["trial"] = r.trial;
        row["seed"] = detail::fmt_seed(r.seed);
        row["gamma_f"] = r.gamma_f;
        row["planted_shift"] = detail::fmt_vec(r.planted_shift);
        row["found_shift"] = r.found_shift ? nlohmann::ordered_json(detail::fmt_vec(*r.found_shift))
                                           : nlohmann::ordered_json(nullptr);
        row["success"] = r.success;
        row["f_queries"] = r.f_queries;
        row["g_queries"] = r.g_queries;
        row["subroutine_runs"] = r.subroutine_runs;
        row["status"] = r.status;
        doc["rows"].push_back(std::move(row));
    }
    doc["aggregates"] = nlohmann::ordered_json::array();
    for (const Aggregate& a : rep.aggregates) {
        nlohmann::ordered_json agg;
        agg["solver"] = a.solver;
        agg["n"] = a.n;
        agg["rows"] = a.rows;
        agg["success_rate"] = a.success_rate;
        agg["mean_queries"] = a.mean_queries;
        agg["median_queries"] = a.median_queries;
        agg["p95_queries"] = a.p95_queries;
        doc["aggregates"].push_back(std::move(agg));
    }
    out << doc.dump(2) << "\n";
}

inline std::string sweep_to_string(const SweepReport& rep, OutputFormat format) {
    std::ostringstream os;
    if (format == OutputFormat::Csv)
        write_sweep_csv(rep, os);
    else
        write_sweep_json(rep, os);
    return os.str();
}

namespace detail {

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t at = line.find(sep, start);
        if (at == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, at - start));
        start = at + 1;
    }
}

}  // namespace detail

// Reads back what write_sweep_csv emits; used by `fit` and by the
// aggregate-consistency checks.
inline SweepReport parse_sweep_csv(const std::string& text) {
    SweepReport rep;
    std::istringstream in(text);
    std::string line;
    bool saw_schema = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind("schema=", 0) == 0) {
            if (line != "schema=1")
                throw std::runtime_error("unsupported report schema: " + line);
            saw_schema = true;
            continue;
        }
        if (line[0] == '#') {
            if (line.rfind("# config: ", 0) == 0) rep.config_line = line.substr(10);
            continue;
        }
        if (line.rfind("solver,", 0) == 0) continue;  // row header
        auto fields = detail::split(line, ',');
        if (fields[0] == "aggregate") {
            if (fields.size() >= 2 && fields[1] == "solver") continue;  // aggregate header
            if (fields.size() != 8) throw std::runtime_error("malformed aggregate line: " + line);
            Aggregate a;
            a.solver = fields[1];
            a.n = std::stoi(fields[2]);
            a.rows = static_cast<std::size_t>(std::stoull(fields[3]));
            a.success_rate = std::stod(fields[4]);
            a.mean_queries = std::stod(fields[5]);
            a.median_queries = std::stod(fields[6]);
            a.p95_queries = std::stoull(fields[7]);
            rep.aggregates.push_back(std::move(a));
            continue;
        }
        if (fields.size() != 14) throw std::runtime_error("malformed report row: " + line);
        SweepRow r;
        r.solver = fields[0];
        r.mode = fields[1];
        r.family = fields[2];
        r.n = std::stoi(fields[3]);
        r.trial = std::stoi(fields[4]);
        r.seed = std::stoull(fields[5], nullptr, 16);
        r.gamma_f = std::stod(fields[6]);
        r.planted_shift = static_cast<std::uint32_t>(std::stoul(fields[7], nullptr, 16));
        if (fields[8] != "-")
            r.found_shift = static_cast<std::uint32_t>(std::stoul(fields[8], nullptr, 16));
        r.success = fields[9] == "1";
        r.f_queries = std::stoull(fields[10]);
        r.g_queries = std::stoull(fields[11]);
        r.subroutine_runs = std::stoull(fields[12]);
        r.status = fields[13];
        rep.rows.push_back(std::move(r));
    }
    if (!saw_schema) throw std::runtime_error("missing schema header");
    return rep;
}

}  // namespace bhsp
