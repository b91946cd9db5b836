#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eudata/config.hpp"
#include "eudata/errors.hpp"
#include "eudata/euler.hpp"
#include "eudata/polar.hpp"
#include "eudata/strata.hpp"
#include "eudata/variety.hpp"

namespace eudata {

// Settings shared by every command invocation. The process-wide tunables in
// config() are overwritten from here before any computation starts.
struct RunConfig {
    std::uint64_t seed = 0;
    int trials = 3;
    long long coeff_bound = 997;
    int milnor_cap = 64;
    std::string format = "text";
    long long spair_limit = 200000;
    std::optional<std::string> point;  // "r1,r2,..." for the milnor command
};

inline void apply_run_config(const RunConfig& cfg) {
    validate_config(cfg.trials, cfg.coeff_bound, cfg.milnor_cap);
    if (cfg.format != "text" && cfg.format != "json")
        throw InvalidArgument("format must be 'text' or 'json'");
    if (cfg.spair_limit < 1) throw InvalidArgument("spair-limit must be >= 1");
    config().trials = cfg.trials;
    config().coeff_bound = cfg.coeff_bound;
    config().milnor_cap = cfg.milnor_cap;
    config().spair_limit = cfg.spair_limit;
}

struct RunResult {
    int exit_code = 0;
    nlohmann::json report;
};

namespace detail {

inline VarietySpec load_variety_checked(const std::string& path) {
    try {
        return variety_from_file(path);
    } catch (const ParseError& e) {
        throw ParseError(e.position(), path + ": " + e.what());
    }
}

inline nlohmann::json fixture_doc_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open fixture file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte, path + ": invalid JSON: " + e.what());
    }
}

inline RationalPoint parse_point(const std::string& text, std::size_t arity) {
    RationalPoint q;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ',')) {
        const auto first = piece.find_first_not_of(" \t");
        const auto last = piece.find_last_not_of(" \t");
        if (first == std::string::npos) throw ParseError(0, "empty coordinate in point");
        q.push_back(parse_rational(piece.substr(first, last - first + 1)));
    }
    if (q.size() != arity)
        throw InvalidArgument("point has " + std::to_string(q.size()) + " coordinates, expected " +
                              std::to_string(arity));
    return q;
}

inline nlohmann::json alpha_to_json(const AlphaSeries& a) {
    return nlohmann::json(a.values);
}

inline nlohmann::json milnor_to_json(const std::vector<MilnorRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rec : records) {
        nlohmann::json coords = nlohmann::json::array();
        for (const auto& c : rec.point) coords.push_back(to_string(c));
        arr.push_back({{"point", coords}, {"mu", rec.mu}, {"mu_sectional", rec.mu_sectional}});
    }
    return arr;
}

inline nlohmann::json duality_to_json(const DualityReport& d) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : d.rows) {
        nlohmann::json r{{"label", row.label}, {"status", row.status}};
        r["value"] = row.value ? nlohmann::json(*row.value) : nlohmann::json(nullptr);
        r["reference"] = row.reference ? nlohmann::json(*row.reference) : nlohmann::json(nullptr);
        rows.push_back(std::move(r));
    }
    nlohmann::json out{{"all_consistent", d.all_consistent}, {"rows", std::move(rows)}};
    out["engine_eu"] = d.engine_eu ? nlohmann::json(*d.engine_eu) : nlohmann::json(nullptr);
    out["engine_chi"] = d.engine_chi ? nlohmann::json(*d.engine_chi) : nlohmann::json(nullptr);
    out["chi_total"] = d.chi_total ? nlohmann::json(*d.chi_total) : nlohmann::json(nullptr);
    if (!d.engine_eu_error.empty()) out["engine_eu_error"] = d.engine_eu_error;
    if (!d.engine_chi_error.empty()) out["engine_chi_error"] = d.engine_chi_error;
    return out;
}

}  // namespace detail

// Dispatch one command. Never throws: failures are encoded in the report's
// status field and the exit code (0 success, 2 consistency mismatch,
// 1 any other error).
inline RunResult run_command(const std::string& command,
                             const std::vector<std::string>& paths, const RunConfig& cfg) {
    nlohmann::json report;
    for (const char* key :
         {"agreement", "alpha", "beta", "chi", "command", "eu", "input", "milnor", "seeds_used",
          "status"})
        report[key] = nullptr;
    report["command"] = command;
    report["input"] = paths;
    report["agreement"] = false;
    report["status"] = "ok";
    report["seeds_used"] = nlohmann::json::array();
    int exit_code = 0;

    auto one_path = [&]() -> const std::string& {
        if (paths.size() != 1)
            throw InvalidArgument("command '" + command + "' expects exactly one input file");
        return paths[0];
    };

    try {
        apply_run_config(cfg);
        if (command == "alpha") {
            const auto v = detail::load_variety_checked(one_path());
            const auto a = alpha_series(v, cfg.seed);
            report["alpha"] = detail::alpha_to_json(a);
            report["seeds_used"] = a.seeds_used;
            report["agreement"] = true;
        } else if (command == "eu") {
            const auto v = detail::load_variety_checked(one_path());
            const auto a = alpha_series(v, cfg.seed);
            report["alpha"] = detail::alpha_to_json(a);
            report["eu"] = euler_from_alpha(v.expected_dim(), a);
            report["seeds_used"] = a.seeds_used;
            report["agreement"] = true;
        } else if (command == "chi") {
            const auto v = detail::load_variety_checked(one_path());
            const auto r = invariant_report(v, cfg.seed, true);
            report["alpha"] = detail::alpha_to_json(r.alpha);
            report["eu"] = r.eu;
            report["chi"] = *r.chi;
            report["beta"] = r.beta->values;
            report["milnor"] = detail::milnor_to_json(r.milnor);
            report["seeds_used"] = r.seeds;
            report["agreement"] = r.agreement;
        } else if (command == "beta") {
            const auto v = detail::load_variety_checked(one_path());
            report["beta"] = beta_series_isolated(v, cfg.seed).values;
            report["seeds_used"] = std::vector<std::uint64_t>{cfg.seed};
            report["agreement"] = true;
        } else if (command == "milnor") {
            const auto v = detail::load_variety_checked(one_path());
            std::vector<MilnorRecord> records;
            if (cfg.point) {
                if (v.equations().size() != 1)
                    throw InvalidArgument("local invariants need a single defining equation");
                MilnorRecord rec;
                rec.point = detail::parse_point(*cfg.point, v.vars().size());
                rec.mu = milnor_number(v.equations()[0], rec.point);
                rec.mu_sectional =
                    sectional_milnor(v, rec.point, derive_seed(cfg.seed, "record-sectional", 0));
                records.push_back(std::move(rec));
            } else {
                records = milnor_records(v, cfg.seed);
            }
            report["milnor"] = detail::milnor_to_json(records);
            report["seeds_used"] = std::vector<std::uint64_t>{cfg.seed};
            report["agreement"] = true;
        } else if (command == "degree") {
            const auto v = detail::load_variety_checked(one_path());
            const auto a = alpha_series(v, cfg.seed);
            report["alpha"] = detail::alpha_to_json(a);
            report["degree"] = a.values.back();
            report["seeds_used"] = a.seeds_used;
            report["agreement"] = true;
        } else if (command == "duality") {
            StratificationFixture fixture = [&] {
                if (paths.size() == 1) return fixture_from_file(paths[0]);
                if (paths.size() == 2) {
                    nlohmann::json doc = detail::fixture_doc_from_file(paths[1]);
                    doc["variety"] = paths[0];
                    return fixture_from_json(doc, "");
                }
                throw InvalidArgument("command 'duality' expects one or two input files");
            }();
            const auto d = check_duality(fixture, cfg.seed);
            report["duality"] = detail::duality_to_json(d);
            if (d.engine_eu) report["eu"] = *d.engine_eu;
            if (d.engine_chi) report["chi"] = *d.engine_chi;
            report["seeds_used"] = std::vector<std::uint64_t>{cfg.seed};
            report["agreement"] = d.all_consistent;
            if (!d.all_consistent) {
                bool any_error = false;
                for (const auto& row : d.rows)
                    if (row.status.rfind("error:", 0) == 0) any_error = true;
                report["status"] = any_error ? "EvaluationError" : "Inconsistent";
                exit_code = any_error ? 1 : 2;
            }
        } else {
            throw InvalidArgument("unknown command '" + command + "'");
        }
    } catch (const Error& e) {
        report["status"] = e.kind();
        report["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        exit_code = (e.kind() == "ConsistencyFailure") ? 2 : 1;
    } catch (const std::exception& e) {
        report["status"] = "InternalError";
        report["error"] = {{"kind", "InternalError"}, {"message", e.what()}};
        exit_code = 1;
    }
    return {exit_code, report};
}

namespace detail {

// Spell out the alternating sum so a sign slip is visible at a glance:
// "eu = -alpha[1] + alpha[2] = -2 + 3 = 1".
inline std::string render_eu_sum(const nlohmann::json& alpha, long long eu) {
    const int d = static_cast<int>(alpha.size()) - 1;
    std::string symbols, numbers;
    for (int j = 1; j <= d + 1; ++j) {
        const bool positive = ((d - j + 1) % 2 == 0);
        const std::string sep = (j == 1) ? (positive ? "" : "-") : (positive ? " + " : " - ");
        symbols += sep + "alpha[" + std::to_string(j) + "]";
        numbers += sep + std::to_string(alpha[static_cast<std::size_t>(j - 1)].get<long long>());
    }
    return "eu = " + symbols + " = " + numbers + " = " + std::to_string(eu);
}

inline std::string render_series(const nlohmann::json& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(values[i].get<long long>());
    }
    return out.empty() ? "(empty)" : out;
}

inline std::string render_point(const nlohmann::json& coords) {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ", ";
        out += coords[i].get<std::string>();
    }
    return out + ")";
}

}  // namespace detail

// Human-readable view of a report; a pure function of the JSON document so
// both output formats always agree.
inline std::string render_text(const nlohmann::json& report) {
    std::ostringstream out;
    out << "command: " << report["command"].get<std::string>() << "\n";
    out << "input:";
    for (const auto& p : report["input"]) out << " " << p.get<std::string>();
    out << "\n";
    if (!report["alpha"].is_null())
        out << "alpha series: " << detail::render_series(report["alpha"]) << "\n";
    if (!report["eu"].is_null() && !report["alpha"].is_null() &&
        report["command"] != "duality")
        out << detail::render_eu_sum(report["alpha"], report["eu"].get<long long>()) << "\n";
    else if (!report["eu"].is_null())
        out << "eu = " << report["eu"].get<long long>() << "\n";
    if (report.contains("degree") && !report["degree"].is_null())
        out << "degree = " << report["degree"].get<long long>() << "\n";
    if (!report["beta"].is_null())
        out << "beta series: " << detail::render_series(report["beta"]) << "\n";
    if (!report["milnor"].is_null()) {
        out << "singular points:" << (report["milnor"].empty() ? " none" : "") << "\n";
        for (const auto& rec : report["milnor"])
            out << "  " << detail::render_point(rec["point"]) << ": mu = "
                << rec["mu"].get<long long>()
                << ", sectional mu = " << rec["mu_sectional"].get<long long>() << "\n";
    }
    if (!report["chi"].is_null()) out << "chi = " << report["chi"].get<long long>() << "\n";
    if (report.contains("duality")) {
        const auto& d = report["duality"];
        for (const auto& row : d["rows"]) {
            out << row["label"].get<std::string>() << ": value "
                << (row["value"].is_null() ? std::string("-")
                                           : std::to_string(row["value"].get<long long>()))
                << ", reference "
                << (row["reference"].is_null()
                        ? std::string("-")
                        : std::to_string(row["reference"].get<long long>()))
                << " -> " << row["status"].get<std::string>() << "\n";
        }
        out << "all consistent: " << (d["all_consistent"].get<bool>() ? "true" : "false")
            << "\n";
    }
    if (report.contains("error"))
        out << "error: " << report["error"]["message"].get<std::string>() << "\n";
    out << "status: " << report["status"].get<std::string>() << "\n";
    return out.str();
}

inline std::string render_report(const nlohmann::json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    return render_text(report);
}

}  // namespace eudata
