#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "eudata/parser.hpp"
#include "eudata/polar.hpp"

using namespace eudata;

namespace {

std::string data_path(const std::string& name) {
    return std::string(EUDATA_DATA_DIR) + "/" + name;
}

VarietySpec plane_curve(const std::string& equation) {
    const std::vector<std::string> xy = {"x", "y"};
    return VarietySpec(2, xy, {parse_polynomial(equation, xy)}, 1);
}

}  // namespace

TEST_CASE("critical-point counts of generic linear functionals") {
    CHECK(alpha_one(plane_curve("x*y - 1"), 0) == 2);
    CHECK(alpha_one(plane_curve("y^2 - x^3"), 0) == 1);
    CHECK(alpha_one(plane_curve("y^2 - x^2*(x + 1)"), 0) == 2);
    CHECK(alpha_one(plane_curve("x^3 + y^3 - 1"), 0) == 6);
    CHECK(alpha_one(variety_from_file(data_path("quadric_cone.json")), 0) == 0);
    CHECK(alpha_one(variety_from_file(data_path("linear_line.json")), 0) == 0);
}

TEST_CASE("critical-point counting rejects zero-dimensional input") {
    const std::vector<std::string> xy = {"x", "y"};
    VarietySpec point(2, xy, {parse_polynomial("x", xy), parse_polynomial("y", xy)}, 0);
    CHECK_THROWS_AS(alpha_one(point, 0), DimensionMismatch);
}

TEST_CASE("polar series of the corpus") {
    auto expect = [](const VarietySpec& v, std::vector<long long> want) {
        auto series = alpha_series(v, 0);
        CHECK(series.values == want);
        CHECK(series.values.size() == static_cast<std::size_t>(v.expected_dim()) + 1);
        for (long long entry : series.values) CHECK(entry >= 0);
        CHECK(series.trials >= 1);
        CHECK_FALSE(series.seeds_used.empty());
    };

    expect(plane_curve("x*y - 1"), {2, 2});
    expect(plane_curve("y^2 - x^3"), {1, 3});
    expect(plane_curve("y^2 - x^2*(x + 1)"), {2, 3});
    expect(plane_curve("x^3 + y^3 - 1"), {6, 3});
    expect(variety_from_file(data_path("quadric_cone.json")), {0, 2, 2});
    expect(variety_from_file(data_path("linear_line.json")), {0, 1});
}

TEST_CASE("zero-dimensional specs get a single-entry series") {
    const std::vector<std::string> xy = {"x", "y"};
    VarietySpec two_points(2, xy, {parse_polynomial("x^2 - 1", xy), parse_polynomial("y", xy)}, 0);
    auto series = alpha_series(two_points, 0);
    REQUIRE(series.values.size() == 1);
    CHECK(series.values[0] == 2);
    CHECK(series.at(1) == 2);
    CHECK_THROWS_AS(series.at(2), InvalidArgument);
}

TEST_CASE("series entries shift under slicing") {
    // Slicing drops the first entry: entry k+1 of V equals entry k of a slice.
    auto check_shift = [](const VarietySpec& v) {
        auto full = alpha_series(v, 0);
        auto sliced = alpha_series(generic_slice(v, 41), 0);
        REQUIRE(full.values.size() == sliced.values.size() + 1);
        for (std::size_t k = 0; k < sliced.values.size(); ++k)
            CHECK(full.values[k + 1] == sliced.values[k]);
    };
    check_shift(variety_from_file(data_path("quadric_cone.json")));
    check_shift(plane_curve("x*y - 1"));
    check_shift(plane_curve("y^2 - x^3"));
    check_shift(plane_curve("x^3 + y^3 - 1"));
}

TEST_CASE("polar series are independent of the seed") {
    std::vector<VarietySpec> corpus;
    corpus.push_back(plane_curve("x*y - 1"));
    corpus.push_back(plane_curve("y^2 - x^3"));
    corpus.push_back(plane_curve("y^2 - x^2*(x + 1)"));
    corpus.push_back(plane_curve("x^3 + y^3 - 1"));
    corpus.push_back(variety_from_file(data_path("quadric_cone.json")));

    for (const auto& v : corpus) {
        auto base = alpha_series(v, 0);
        for (std::uint64_t seed : {1ULL, 2ULL}) {
            auto other = alpha_series(v, seed);
            CHECK(base.values == other.values);
        }
    }
}
