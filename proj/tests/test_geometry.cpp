#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "eudata/parser.hpp"
#include "eudata/variety.hpp"

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

TEST_CASE("variety specs validate their dimension at load") {
    CHECK_NOTHROW(plane_curve("x*y - 1"));
    const std::vector<std::string> xy = {"x", "y"};
    CHECK_THROWS_AS(VarietySpec(2, xy, {parse_polynomial("x*y - 1", xy)}, 0), DimensionMismatch);
    CHECK_THROWS_AS(
        VarietySpec(2, xy, {parse_polynomial("x", xy), parse_polynomial("x - 1", xy)}, 0),
        DimensionMismatch);
    CHECK_THROWS_AS(VarietySpec(2, xy, {parse_polynomial("x", xy)}, 2), InvalidArgument);
    CHECK_THROWS_AS(VarietySpec(3, xy, {}, 1), InvalidArgument);
}

TEST_CASE("variety files load and validate") {
    auto hyperbola = variety_from_file(data_path("hyperbola.json"));
    CHECK(hyperbola.ambient() == 2);
    CHECK(hyperbola.expected_dim() == 1);
    REQUIRE(hyperbola.equations().size() == 1);
    CHECK(hyperbola.equations()[0] == parse_polynomial("x*y - 1", {"x", "y"}));

    auto cone = variety_from_file(data_path("quadric_cone.json"));
    CHECK(cone.ambient() == 3);
    CHECK(cone.expected_dim() == 2);

    CHECK_THROWS_AS(variety_from_file(data_path("no_such_file.json")), IoError);
    CHECK_THROWS_AS(variety_from_json_text("{not json"), ParseError);
    CHECK_THROWS_AS(variety_from_json_text("{\"ambient\": 2}"), ParseError);
    CHECK_THROWS_AS(variety_from_json_text(
                        "{\"ambient\": 2, \"vars\": [\"x\", \"y\"], "
                        "\"equations\": [\"x*y - 1\"], \"expected_dim\": 0}"),
                    DimensionMismatch);
}

TEST_CASE("singular ideals locate the singular locus") {
    // Smooth members: the singular system has no solutions at all.
    CHECK_FALSE(krull_dimension(singular_ideal(plane_curve("x*y - 1"))).has_value());
    CHECK_FALSE(krull_dimension(singular_ideal(plane_curve("x^3 + y^3 - 1"))).has_value());
    CHECK_FALSE(
        krull_dimension(singular_ideal(variety_from_file(data_path("linear_line.json"))))
            .has_value());

    // Nodal cubic: exactly one singular point, the origin.
    auto node_sing = singular_ideal(plane_curve("y^2 - x^2*(x + 1)"));
    CHECK(krull_dimension(node_sing) == 0);
    CHECK(distinct_point_count(node_sing, 0).count == 1);
    for (const auto& g : node_sing.generators()) CHECK(g.evaluate({Rational(0), Rational(0)}) == 0);

    // Cuspidal cubic: again only the origin.
    auto cusp_sing = singular_ideal(plane_curve("y^2 - x^3"));
    CHECK(krull_dimension(cusp_sing) == 0);
    CHECK(distinct_point_count(cusp_sing, 0).count == 1);

    // Quadric cone: the vertex.
    auto cone = variety_from_file(data_path("quadric_cone.json"));
    auto cone_sing = singular_ideal(cone);
    CHECK(krull_dimension(cone_sing) == 0);
    CHECK(distinct_point_count(cone_sing, 0).count == 1);
}

TEST_CASE("generic forms are reproducible, bounded, and seed sensitive") {
    auto a = generic_linear_form(2, 0, 997);
    auto b = generic_linear_form(2, 0, 997);
    CHECK(a.coefficients == b.coefficients);
    CHECK(a.constant == 0);

    auto c = generic_linear_form(2, 1, 997);
    CHECK(a.coefficients != c.coefficients);

    for (int n : {1, 3, 6}) {
        auto f = generic_linear_form(n, 42, 5);
        REQUIRE(f.coefficients.size() == static_cast<std::size_t>(n));
        for (const auto& coeff : f.coefficients) {
            CHECK(coeff != 0);
            CHECK(abs(rational_num(coeff)) <= 5);
            CHECK(rational_den(coeff) == 1);
        }
    }

    CHECK_THROWS_AS(generic_linear_form(2, 0, 1), InvalidArgument);
    CHECK_THROWS_AS(generic_affine_form(2, 0, 1), InvalidArgument);

    auto affine = generic_affine_form(3, 9, 11);
    CHECK(affine.constant != 0);
    CHECK(affine.to_polynomial({"x", "y", "z"}).degree() == 1);
}

TEST_CASE("generic slices drop the dimension by one") {
    auto hyperbola = plane_curve("x*y - 1");
    auto sliced = generic_slice(hyperbola, 0);
    CHECK(sliced.ambient() == 1);
    CHECK(sliced.expected_dim() == 0);
    CHECK(quotient_vector_dimension(sliced.ideal()) == 2);
    CHECK(distinct_point_count(sliced.ideal(), 0).count == 2);

    auto cone = variety_from_file(data_path("quadric_cone.json"));
    auto conic = generic_slice(cone, 0);
    CHECK(conic.ambient() == 2);
    CHECK(conic.expected_dim() == 1);
    // The generic plane misses the vertex, so the section is smooth.
    CHECK_FALSE(krull_dimension(singular_ideal(conic)).has_value());

    CHECK_THROWS_AS(generic_slice(sliced, 0), DimensionMismatch);
}

TEST_CASE("slices through a prescribed point contain its image") {
    auto cone = variety_from_file(data_path("quadric_cone.json"));
    RationalPoint vertex = {Rational(0), Rational(0), Rational(0)};
    auto through = generic_slice(cone, 3, vertex);
    for (const auto& f : through.equations())
        CHECK(f.evaluate({Rational(0), Rational(0)}) == 0);

    auto node = plane_curve("y^2 - x^2*(x + 1)");
    RationalPoint origin2 = {Rational(0), Rational(0)};
    auto pencil_member = generic_slice(node, 1, origin2);
    CHECK(pencil_member.ambient() == 1);
    for (const auto& f : pencil_member.equations()) CHECK(f.evaluate({Rational(0)}) == 0);
}

TEST_CASE("slicing is deterministic in the seed") {
    auto cone = variety_from_file(data_path("quadric_cone.json"));
    auto s1 = generic_slice(cone, 5);
    auto s2 = generic_slice(cone, 5);
    CHECK(s1.equations() == s2.equations());
    auto s3 = generic_slice(cone, 6);
    CHECK(s1.equations() != s3.equations());
}

TEST_CASE("plane section counts equal the degree on the corpus") {
    CHECK(plane_section_count(plane_curve("x*y - 1"), 0) == 2);
    CHECK(plane_section_count(plane_curve("y^2 - x^3"), 0) == 3);
    CHECK(plane_section_count(plane_curve("y^2 - x^2*(x + 1)"), 0) == 3);
    CHECK(plane_section_count(plane_curve("x^3 + y^3 - 1"), 0) == 3);
    CHECK(plane_section_count(variety_from_file(data_path("quadric_cone.json")), 0) == 2);
    CHECK(plane_section_count(variety_from_file(data_path("linear_line.json")), 0) == 1);
}

TEST_CASE("section counts survive slicing") {
    // Counting after one slice agrees with counting the original.
    auto cone = variety_from_file(data_path("quadric_cone.json"));
    CHECK(plane_section_count(cone, 0) == plane_section_count(generic_slice(cone, 11), 7));

    auto cubic = plane_curve("x^3 + y^3 - 1");
    auto cut = generic_slice(cubic, 2);
    CHECK(plane_section_count(cubic, 0) == plane_section_count(cut, 0));
}
