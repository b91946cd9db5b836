#include <catch2/catch_amalgamated.hpp>

#include <string>

#include <json.hpp>

#include "eudata/strata.hpp"

using namespace eudata;
using nlohmann::json;

namespace {

std::string data_dir() { return std::string(EUDATA_DATA_DIR); }

std::string data_path(const std::string& name) { return data_dir() + "/" + name; }

json base_node_fixture() {
    return json::parse(R"({
        "variety": "nodal_cubic.json",
        "chi_total": 0,
        "chi_slice": 3,
        "strata": [
            {"name": "regular_part", "dim": 1, "chi": -1,
             "eu_normal": 1, "chi_nmd": 1, "eu_closure": 1},
            {"name": "node", "dim": 0, "chi": 1,
             "eu_normal": 2, "chi_nmd": -1, "eu_closure": 1, "cl_betti": 1}
        ]
    })");
}

}  // namespace

TEST_CASE("fixtures load with variety by path or inline") {
    const auto f = fixture_from_file(data_path("nodal_cubic_strata.json"));
    CHECK(f.variety.expected_dim() == 1);
    REQUIRE(f.strata.size() == 2);
    CHECK(f.strata[0].name == "regular_part");
    CHECK(f.strata[1].eu_normal == 2);
    REQUIRE(f.chi_total.has_value());
    CHECK(*f.chi_total == 0);
    REQUIRE(f.strata[1].cl_betti.has_value());
    CHECK(*f.strata[1].cl_betti == 1);

    json doc = base_node_fixture();
    doc["variety"] = json::parse(R"json({
        "ambient": 2, "vars": ["x", "y"],
        "equations": ["y^2 - x^2*(x + 1)"], "expected_dim": 1
    })json");
    const auto g = fixture_from_json(doc, "");
    CHECK(g.variety.ambient() == 2);
    CHECK(g.strata.size() == 2);
}

TEST_CASE("fixture validation rejects malformed stratification data") {
    SECTION("missing stratum field") {
        json doc = base_node_fixture();
        doc["strata"][1].erase("chi_nmd");
        CHECK_THROWS_AS(fixture_from_json(doc, data_dir()), ParseError);
    }
    SECTION("two top-dimensional strata") {
        json doc = base_node_fixture();
        doc["strata"][1]["dim"] = 1;
        doc["strata"][1]["eu_normal"] = 1;
        doc["strata"][1]["chi_nmd"] = 1;
        doc["strata"][1].erase("cl_betti");
        CHECK_THROWS_AS(fixture_from_json(doc, data_dir()), FixtureError);
    }
    SECTION("stratum dimension above the variety dimension") {
        json doc = base_node_fixture();
        doc["strata"][1]["dim"] = 2;
        CHECK_THROWS_AS(fixture_from_json(doc, data_dir()), FixtureError);
    }
    SECTION("top stratum with nontrivial normal data") {
        json doc = base_node_fixture();
        doc["strata"][0]["eu_normal"] = 2;
        CHECK_THROWS_AS(fixture_from_json(doc, data_dir()), FixtureError);
    }
    SECTION("point stratum whose closure obstruction is not 1") {
        json doc = base_node_fixture();
        doc["strata"][1]["eu_closure"] = 3;
        CHECK_THROWS_AS(fixture_from_json(doc, data_dir()), FixtureError);
    }
    SECTION("stratum characteristics that do not sum to the stated total") {
        json doc = base_node_fixture();
        doc["strata"][1]["chi"] = 2;
        CHECK_THROWS_AS(fixture_from_json(doc, data_dir()), FixtureError);
    }
    SECTION("link Betti number inconsistent with the normal-Morse value") {
        json doc = base_node_fixture();
        doc["strata"][1]["chi_nmd"] = 1;
        CHECK_THROWS_AS(fixture_from_json(doc, data_dir()), FixtureError);
    }
}

TEST_CASE("stratified sums reproduce the node fixture invariants") {
    const auto f = fixture_from_file(data_path("nodal_cubic_strata.json"));
    CHECK(eval_formula_one(f) == 1);
    CHECK(eval_formula_two(f) == 0);
    CHECK(eval_chi_pencil(f, 0) == 0);
}

TEST_CASE("stratified sums reproduce the cone fixture invariants") {
    const auto f = fixture_from_file(data_path("quadric_cone_strata.json"));
    CHECK(eval_formula_one(f) == 0);
    CHECK(eval_formula_two(f) == 1);
    CHECK(eval_chi_pencil(f, 0) == 1);
}

TEST_CASE("stratified sums reproduce the cusp fixture invariants") {
    const auto f = fixture_from_file(data_path("cuspidal_cubic_strata.json"));
    CHECK(eval_formula_one(f) == 2);
    CHECK(eval_formula_two(f) == 1);
    CHECK(eval_chi_pencil(f, 0) == 1);
}

TEST_CASE("a smooth variety is a single-stratum fixture") {
    const auto f = fixture_from_file(data_path("smooth_cubic_strata.json"));
    REQUIRE(f.strata.size() == 1);
    CHECK(eval_formula_one(f) == -3);
    CHECK(eval_formula_two(f) == -3);
    CHECK(eval_chi_pencil(f, 0) == -3);
}

TEST_CASE("the pencil sum can compute its own hyperplane section") {
    json doc = json::parse(R"({
        "variety": "quadric_cone.json",
        "chi_total": 1,
        "strata": [
            {"name": "regular_part", "dim": 2, "chi": 0,
             "eu_normal": 1, "chi_nmd": 1, "eu_closure": 0},
            {"name": "vertex", "dim": 0, "chi": 1,
             "eu_normal": 0, "chi_nmd": 1, "eu_closure": 1, "cl_betti": 1}
        ]
    })");
    const auto f = fixture_from_json(doc, data_dir());
    CHECK_FALSE(f.chi_slice.has_value());
    CHECK(eval_chi_pencil(f, 0) == 1);
}

TEST_CASE("positive-dimensional strata need closure equations for the pencil sum") {
    json doc = json::parse(R"({
        "variety": "quadric_cone.json",
        "chi_slice": 0,
        "strata": [
            {"name": "regular_part", "dim": 2, "chi": 0,
             "eu_normal": 1, "chi_nmd": 1, "eu_closure": 0},
            {"name": "curve_piece", "dim": 1, "chi": 0,
             "eu_normal": 1, "chi_nmd": 0, "eu_closure": 1}
        ]
    })");
    const auto f = fixture_from_json(doc, data_dir());
    CHECK_THROWS_AS(eval_chi_pencil(f, 0), FixtureError);
    // With equations supplied the sum evaluates: the extra term carries
    // chi_nmd = 0, so the total is unchanged from the single-stratum value.
    doc["strata"][1]["equations"] = json::array({"x", "z"});
    const auto g = fixture_from_json(doc, data_dir());
    CHECK(eval_chi_pencil(g, 0) == 0 + (-1) * 1 * 0 + 0);
}

TEST_CASE("check_duality confirms consistent fixtures against the engine") {
    for (const char* name : {"nodal_cubic_strata.json", "quadric_cone_strata.json",
                             "cuspidal_cubic_strata.json", "smooth_cubic_strata.json"}) {
        INFO(name);
        const auto f = fixture_from_file(data_path(name));
        const auto report = check_duality(f, 0);
        CHECK(report.all_consistent);
        for (const auto& row : report.rows) {
            INFO(row.label << ": " << row.status);
            CHECK(row.status == "consistent");
        }
        REQUIRE(report.engine_eu.has_value());
        CHECK(*report.engine_eu == eval_formula_one(f));
        REQUIRE(report.engine_chi.has_value());
        REQUIRE(report.chi_total.has_value());
        CHECK(*report.engine_chi == *report.chi_total);
    }
}

TEST_CASE("check_duality reports exact engine values for the node fixture") {
    const auto f = fixture_from_file(data_path("nodal_cubic_strata.json"));
    const auto report = check_duality(f, 0);
    CHECK(*report.engine_eu == 1);
    CHECK(*report.engine_chi == 0);
    REQUIRE(report.rows.size() == 4);
    CHECK(report.rows[0].label == "obstruction-sum");
    CHECK(*report.rows[0].value == 1);
    CHECK(report.rows[1].label == "characteristic-sum");
    CHECK(*report.rows[1].value == 0);
    CHECK(report.rows[2].label == "pencil-recursion");
    CHECK(*report.rows[2].value == 0);
    CHECK(report.rows[3].label == "engine-characteristic");
}

TEST_CASE("a single corrupted field flips at least one duality check") {
    SECTION("normal obstruction of the node") {
        json doc = base_node_fixture();
        doc["strata"][1]["eu_normal"] = 3;  // passes structural validation
        const auto f = fixture_from_json(doc, data_dir());
        const auto report = check_duality(f, 0);
        CHECK_FALSE(report.all_consistent);
        CHECK(report.rows[0].status == "mismatch");
        CHECK(*report.rows[0].value == 2);
        // The other sums are untouched by this field.
        CHECK(report.rows[1].status == "consistent");
    }
    SECTION("closure obstruction of the regular part") {
        json doc = base_node_fixture();
        doc["strata"][0]["eu_closure"] = 5;
        const auto f = fixture_from_json(doc, data_dir());
        const auto report = check_duality(f, 0);
        CHECK_FALSE(report.all_consistent);
        CHECK(report.rows[0].status == "consistent");
        CHECK(report.rows[1].status == "mismatch");
        CHECK(*report.rows[1].value == 4);
    }
    SECTION("normal-Morse value of the node") {
        json doc = base_node_fixture();
        doc["strata"][1].erase("cl_betti");  // drop the value that would catch it at load
        doc["strata"][1]["chi_nmd"] = 1;
        const auto f = fixture_from_json(doc, data_dir());
        const auto report = check_duality(f, 0);
        CHECK_FALSE(report.all_consistent);
        CHECK(report.rows[1].status == "mismatch");
        CHECK(report.rows[2].status == "mismatch");
    }
}

TEST_CASE("check_duality records evaluation failures instead of throwing") {
    json doc = json::parse(R"({
        "variety": "quadric_cone.json",
        "chi_slice": 0,
        "strata": [
            {"name": "regular_part", "dim": 2, "chi": 0,
             "eu_normal": 1, "chi_nmd": 1, "eu_closure": 0},
            {"name": "bare_curve", "dim": 1, "chi": 1,
             "eu_normal": 1, "chi_nmd": -1, "eu_closure": 1}
        ]
    })");
    const auto f = fixture_from_json(doc, data_dir());
    DualityReport report;
    CHECK_NOTHROW(report = check_duality(f, 0));
    CHECK_FALSE(report.all_consistent);
    CHECK(report.rows[2].status == "error:FixtureError");
}

TEST_CASE("duality reports are seed independent for the bundled fixtures") {
    const auto f = fixture_from_file(data_path("quadric_cone_strata.json"));
    for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
        INFO("seed " << seed);
        CHECK(check_duality(f, seed).all_consistent);
    }
}
