#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eudata/errors.hpp"
#include "eudata/euler.hpp"
#include "eudata/parser.hpp"
#include "eudata/polar.hpp"
#include "eudata/seeding.hpp"
#include "eudata/variety.hpp"

namespace eudata {

// One stratum of a stratification, with the local data the engine cannot
// compute on its own: its Euler characteristic, the normal Euler
// obstruction along it, the characteristic of its normal Morse datum, the
// obstruction of its closure, and optionally the reduced Betti number of
// its complex link plus equations for the closure.
struct StratumRecord {
    std::string name;
    int dim = 0;
    long long chi = 0;
    long long eu_normal = 0;
    long long chi_nmd = 0;
    long long eu_closure = 0;
    std::optional<long long> cl_betti;
    std::optional<std::vector<Polynomial>> equations;
};

struct StratificationFixture {
    VarietySpec variety;
    std::vector<StratumRecord> strata;
    std::optional<long long> chi_total;
    std::optional<long long> chi_slice;
};

// Structural sanity of a fixture; throws FixtureError on the first
// violation so transcription mistakes fail loudly before any evaluation.
inline void validate_fixture(const StratificationFixture& f) {
    const int d = f.variety.expected_dim();
    int top_count = 0;
    long long chi_sum = 0;
    for (const auto& s : f.strata) {
        if (s.dim < 0 || s.dim > d)
            throw FixtureError("stratum '" + s.name + "' has dimension " + std::to_string(s.dim) +
                               " outside [0, " + std::to_string(d) + "]");
        if (s.dim == d) {
            ++top_count;
            if (s.eu_normal != 1)
                throw FixtureError("top stratum '" + s.name + "' must have normal obstruction 1");
            if (s.chi_nmd != 1)
                throw FixtureError("top stratum '" + s.name +
                                   "' must have normal-Morse characteristic 1");
        }
        if (s.dim == 0 && s.eu_closure != 1)
            throw FixtureError("point stratum '" + s.name + "' must have closure obstruction 1");
        if (s.cl_betti) {
            if (*s.cl_betti < 0)
                throw FixtureError("stratum '" + s.name + "' has a negative Betti number");
            // For a link that is a bouquet of (d - dim - 1)-spheres, the
            // normal Morse datum satisfies chi_nmd = 1 - chi(link) with
            // chi(link) = 1 + (-1)^(d-dim-1) * betti.
            const int par = ((d - s.dim - 1) % 2 + 2) % 2;
            const long long chi_link = 1 + (par == 0 ? *s.cl_betti : -*s.cl_betti);
            if (s.chi_nmd != 1 - chi_link)
                throw FixtureError("stratum '" + s.name +
                                   "' has normal-Morse characteristic inconsistent with its "
                                   "link Betti number");
        }
        chi_sum += s.chi;
    }
    if (top_count != 1)
        throw FixtureError("fixture must have exactly one stratum of dimension " +
                           std::to_string(d));
    if (f.chi_total && chi_sum != *f.chi_total)
        throw FixtureError("stratum characteristics sum to " + std::to_string(chi_sum) +
                           ", not the stated total " + std::to_string(*f.chi_total));
}

inline StratificationFixture fixture_from_json(const nlohmann::json& doc,
                                               const std::string& base_dir) {
    if (!doc.is_object()) throw ParseError(0, "fixture document must be a JSON object");
    if (!doc.contains("variety")) throw ParseError(0, "fixture lacks a variety");
    if (!doc.contains("strata") || !doc["strata"].is_array())
        throw ParseError(0, "fixture lacks a strata list");

    auto load_variety = [&]() {
        const auto& v = doc["variety"];
        if (v.is_string()) {
            std::filesystem::path p(v.get<std::string>());
            if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
            return variety_from_file(p.string());
        }
        return variety_from_json(v);
    };

    StratificationFixture f{load_variety(), {}, std::nullopt, std::nullopt};

    for (const auto& s : doc["strata"]) {
        StratumRecord rec;
        for (const char* field : {"name", "dim", "chi", "eu_normal", "chi_nmd", "eu_closure"})
            if (!s.contains(field))
                throw ParseError(0, std::string("stratum record lacks field '") + field + "'");
        rec.name = s["name"].get<std::string>();
        rec.dim = s["dim"].get<int>();
        rec.chi = s["chi"].get<long long>();
        rec.eu_normal = s["eu_normal"].get<long long>();
        rec.chi_nmd = s["chi_nmd"].get<long long>();
        rec.eu_closure = s["eu_closure"].get<long long>();
        if (s.contains("cl_betti") && !s["cl_betti"].is_null())
            rec.cl_betti = s["cl_betti"].get<long long>();
        if (s.contains("equations") && !s["equations"].is_null()) {
            std::vector<Polynomial> eqs;
            for (const auto& e : s["equations"])
                eqs.push_back(parse_polynomial(e.get<std::string>(), f.variety.vars()));
            rec.equations = std::move(eqs);
        }
        f.strata.push_back(std::move(rec));
    }
    if (doc.contains("chi_total") && !doc["chi_total"].is_null())
        f.chi_total = doc["chi_total"].get<long long>();
    if (doc.contains("chi_slice") && !doc["chi_slice"].is_null())
        f.chi_slice = doc["chi_slice"].get<long long>();

    validate_fixture(f);
    return f;
}

inline StratificationFixture fixture_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open fixture file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte, std::string("invalid JSON: ") + e.what());
    }
    return fixture_from_json(doc, std::filesystem::path(path).parent_path().string());
}

// First stratified sum: the obstruction of the whole variety assembled from
// stratum characteristics weighted by normal obstructions.
inline long long eval_formula_one(const StratificationFixture& f) {
    validate_fixture(f);
    long long acc = 0;
    for (const auto& s : f.strata) acc += s.chi * s.eu_normal;
    return acc;
}

// Second stratified sum: the characteristic of the whole variety assembled
// from closure obstructions weighted by normal-Morse characteristics.
inline long long eval_formula_two(const StratificationFixture& f) {
    validate_fixture(f);
    long long acc = 0;
    for (const auto& s : f.strata) acc += s.eu_closure * s.chi_nmd;
    return acc;
}

// Pencil recursion: characteristic of a generic hyperplane section plus the
// signed critical-point contributions of every stratum closure.
inline long long eval_chi_pencil(const StratificationFixture& f, std::uint64_t seed) {
    validate_fixture(f);
    const int d = f.variety.expected_dim();

    long long chi_slice;
    if (f.chi_slice) {
        chi_slice = *f.chi_slice;
    } else {
        VarietySpec slice = generic_slice(f.variety, derive_seed(seed, "pencil-slice", 0));
        if (krull_dimension(singular_ideal(slice)).has_value())
            throw GenericityFailure("pencil hyperplane section is not smooth");
        chi_slice = global_euler_obstruction(slice, derive_seed(seed, "pencil-slice-sum", 0));
    }

    long long acc = chi_slice;
    for (std::size_t i = 0; i < f.strata.size(); ++i) {
        const auto& s = f.strata[i];
        long long a1 = 1;  // convention for point strata
        if (s.dim > 0) {
            std::vector<Polynomial> eqs;
            if (s.equations) {
                eqs = *s.equations;
            } else if (s.dim == d) {
                eqs = f.variety.equations();  // the top closure is the variety itself
            } else {
                throw FixtureError("stratum '" + s.name +
                                   "' is positive-dimensional but carries no closure equations");
            }
            VarietySpec closure(f.variety.ambient(), f.variety.vars(), std::move(eqs), s.dim);
            a1 = alpha_one(closure, derive_seed(seed, "pencil-critical", i));
        }
        const long long sign = (s.dim % 2 == 0) ? 1 : -1;
        acc += sign * a1 * s.chi_nmd;
    }
    return acc;
}

struct DualityRow {
    std::string label;
    std::optional<long long> value;
    std::optional<long long> reference;
    std::string status;  // "consistent" | "mismatch" | "unchecked" | "error:<Kind>"
};

struct DualityReport {
    std::vector<DualityRow> rows;
    std::optional<long long> engine_eu;
    std::optional<long long> engine_chi;
    std::optional<long long> chi_total;
    std::string engine_eu_error;
    std::string engine_chi_error;
    bool all_consistent = false;
};

// Evaluate all three stratified sums against the engine and the stated
// totals. Individual failures are recorded per row; this never throws for
// fixture or genericity problems discovered along the way.
inline DualityReport check_duality(const StratificationFixture& f, std::uint64_t seed) {
    DualityReport report;
    report.chi_total = f.chi_total;

    try {
        report.engine_eu =
            global_euler_obstruction(f.variety, derive_seed(seed, "duality-eu", 0));
    } catch (const Error& e) {
        report.engine_eu_error = e.kind();
    }
    try {
        report.engine_chi = chi_isolated(f.variety, derive_seed(seed, "duality-chi", 0));
    } catch (const Error& e) {
        report.engine_chi_error = e.kind();
    }

    auto push = [&report](const std::string& label, auto&& compute,
                          const std::optional<long long>& reference) {
        DualityRow row;
        row.label = label;
        row.reference = reference;
        try {
            row.value = compute();
            if (!reference)
                row.status = "unchecked";
            else
                row.status = (*row.value == *reference) ? "consistent" : "mismatch";
        } catch (const Error& e) {
            row.status = "error:" + e.kind();
        }
        report.rows.push_back(std::move(row));
    };

    const std::optional<long long> chi_ref =
        f.chi_total ? f.chi_total : report.engine_chi;

    push("obstruction-sum", [&] { return eval_formula_one(f); }, report.engine_eu);
    push("characteristic-sum", [&] { return eval_formula_two(f); }, chi_ref);
    push(
        "pencil-recursion",
        [&] { return eval_chi_pencil(f, derive_seed(seed, "duality-pencil", 0)); }, chi_ref);
    if (report.engine_chi && f.chi_total)
        push("engine-characteristic", [&] { return *report.engine_chi; }, f.chi_total);

    bool any_checked = false;
    bool clean = true;
    for (const auto& row : report.rows) {
        if (row.status == "consistent") any_checked = true;
        if (row.status == "mismatch" || row.status.rfind("error:", 0) == 0) clean = false;
    }
    report.all_consistent = clean && any_checked;
    return report;
}

}  // namespace eudata
