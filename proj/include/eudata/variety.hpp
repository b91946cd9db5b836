#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eudata/config.hpp"
#include "eudata/errors.hpp"
#include "eudata/ideal.hpp"
#include "eudata/matrix.hpp"
#include "eudata/parser.hpp"
#include "eudata/polynomial.hpp"
#include "eudata/rational.hpp"
#include "eudata/seeding.hpp"

namespace eudata {

// An affine variety presented by equations, with its dimension pinned down
// at construction time. The backing ideal is kept alongside so repeated
// queries reuse the memoized bases.
class VarietySpec {
public:
    VarietySpec(int ambient, std::vector<std::string> vars, std::vector<Polynomial> equations,
                int expected_dim)
        : ambient_(ambient),
          vars_(std::move(vars)),
          equations_(std::move(equations)),
          expected_dim_(expected_dim),
          ideal_(vars_, equations_) {
        if (ambient_ < 1 || vars_.size() != static_cast<std::size_t>(ambient_))
            throw InvalidArgument("variable list must match the ambient dimension");
        if (expected_dim_ < 0 || expected_dim_ >= ambient_)
            throw InvalidArgument("expected dimension must satisfy 0 <= d < ambient");
        for (const auto& f : equations_)
            if (f.vars() != vars_)
                throw InvalidArgument("every equation must live in the declared ring");
        auto dim = krull_dimension(ideal_);
        if (!dim.has_value())
            throw DimensionMismatch("equations have no common solution; expected dimension " +
                                    std::to_string(expected_dim_));
        if (*dim != expected_dim_)
            throw DimensionMismatch("equations cut out dimension " + std::to_string(*dim) +
                                    ", expected " + std::to_string(expected_dim_));
    }

    int ambient() const { return ambient_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Polynomial>& equations() const { return equations_; }
    int expected_dim() const { return expected_dim_; }
    const Ideal& ideal() const { return ideal_; }

private:
    int ambient_;
    std::vector<std::string> vars_;
    std::vector<Polynomial> equations_;
    int expected_dim_;
    Ideal ideal_;
};

inline VarietySpec variety_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError(0, "variety document must be a JSON object");
    for (const char* field : {"ambient", "vars", "equations", "expected_dim"})
        if (!doc.contains(field))
            throw ParseError(0, std::string("variety document lacks field '") + field + "'");
    if (!doc["ambient"].is_number_integer() || !doc["expected_dim"].is_number_integer() ||
        !doc["vars"].is_array() || !doc["equations"].is_array())
        throw ParseError(0, "variety document fields have the wrong types");

    std::vector<std::string> vars;
    for (const auto& v : doc["vars"]) {
        if (!v.is_string()) throw ParseError(0, "variable names must be strings");
        vars.push_back(v.get<std::string>());
    }
    std::vector<Polynomial> eqs;
    for (const auto& e : doc["equations"]) {
        if (!e.is_string()) throw ParseError(0, "equations must be polynomial strings");
        eqs.push_back(parse_polynomial(e.get<std::string>(), vars));
    }
    return VarietySpec(doc["ambient"].get<int>(), std::move(vars), std::move(eqs),
                       doc["expected_dim"].get<int>());
}

inline VarietySpec variety_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte, std::string("invalid JSON: ") + e.what());
    }
    return variety_from_json(doc);
}

inline VarietySpec variety_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open variety file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return variety_from_json_text(buffer.str());
}

// Equations plus the rank-drop minors of their Jacobian: vanishes exactly on
// the singular locus when the equations present the variety with generically
// full Jacobian rank.
inline Ideal singular_ideal(const VarietySpec& v) {
    const std::size_t rows = v.equations().size();
    const std::size_t cols = v.vars().size();
    const std::size_t size = cols - static_cast<std::size_t>(v.expected_dim());
    PolyMatrix jac(rows, cols, v.vars());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) jac.at(r, c) = v.equations()[r].derivative(c);
    std::vector<Polynomial> gens = v.equations();
    for (auto& m : minors(jac, size)) gens.push_back(std::move(m));
    return Ideal(v.vars(), std::move(gens));
}

// A seeded linear (or affine) functional with small nonzero integer
// coefficients; "generic" in the probability-one sense, with the call sites
// double-checking by trial agreement.
struct GenericForm {
    std::vector<Rational> coefficients;
    Rational constant = Rational(0);
    std::uint64_t seed = 0;

    Polynomial to_polynomial(const std::vector<std::string>& vars) const {
        if (vars.size() != coefficients.size())
            throw InvalidArgument("form arity does not match the ring");
        Polynomial p = Polynomial::constant(vars, constant);
        for (std::size_t i = 0; i < coefficients.size(); ++i) {
            Monomial m(vars.size(), 0);
            m[i] = 1;
            p.add_term(m, coefficients[i]);
        }
        return p;
    }
};

inline GenericForm generic_linear_form(int n, std::uint64_t seed, long long bound) {
    if (n < 1) throw InvalidArgument("a linear form needs at least one variable");
    if (bound < 2) throw InvalidArgument("coefficient bound must be at least 2");
    SeedStream stream(derive_seed(seed, "generic-linear-form", 0));
    GenericForm f;
    f.seed = seed;
    for (int i = 0; i < n; ++i) f.coefficients.emplace_back(stream.nonzero_in_bound(bound));
    return f;
}

inline GenericForm generic_affine_form(int n, std::uint64_t seed, long long bound) {
    if (n < 0) throw InvalidArgument("negative arity");
    if (bound < 2) throw InvalidArgument("coefficient bound must be at least 2");
    SeedStream stream(derive_seed(seed, "generic-affine-form", 0));
    GenericForm f;
    f.seed = seed;
    for (int i = 0; i < n; ++i) f.coefficients.emplace_back(stream.nonzero_in_bound(bound));
    f.constant = Rational(stream.nonzero_in_bound(bound));
    return f;
}

// Cut by a generic hyperplane: the last variable is replaced by a seeded
// affine form in the others (arranged to pass through `through` when given),
// dropping both the ambient and the expected dimension by one. Draws fresh
// coefficients up to three more times if the dimension check fails.
inline VarietySpec generic_slice(const VarietySpec& v, std::uint64_t seed,
                                 const std::optional<RationalPoint>& through = std::nullopt) {
    if (v.expected_dim() == 0)
        throw DimensionMismatch("cannot slice a zero-dimensional variety");
    const std::size_t n = v.vars().size();
    if (through && through->size() != n)
        throw InvalidArgument("through-point arity does not match the ambient dimension");

    const long long bound = config().coeff_bound;
    for (std::uint64_t attempt = 0; attempt < 4; ++attempt) {
        SeedStream stream(derive_seed(seed, "generic-slice", attempt));
        Polynomial repl(v.vars());
        Rational dot(0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            Rational c(stream.nonzero_in_bound(bound));
            Monomial m(n, 0);
            m[i] = 1;
            repl.add_term(m, c);
            if (through) dot += c * (*through)[i];
        }
        Rational constant =
            through ? (*through)[n - 1] - dot : Rational(stream.nonzero_in_bound(bound));
        repl.add_term(Monomial(n, 0), constant);

        std::vector<Polynomial> sliced;
        for (const auto& f : v.equations()) sliced.push_back(substitute_affine(f, n - 1, repl));
        std::vector<std::string> small_vars(v.vars().begin(), v.vars().end() - 1);
        try {
            return VarietySpec(v.ambient() - 1, std::move(small_vars), std::move(sliced),
                               v.expected_dim() - 1);
        } catch (const DimensionMismatch&) {
            continue;  // unlucky coefficients; draw again
        }
    }
    throw GenericityFailure("hyperplane slice kept the wrong dimension after retries");
}

// Points of the intersection with a generic plane of complementary
// dimension: slice down to dimension zero, then count distinct points.
inline long long plane_section_count(const VarietySpec& v, std::uint64_t seed) {
    VarietySpec cur = v;
    const int d = v.expected_dim();
    for (int k = 0; k < d; ++k)
        cur = generic_slice(cur, derive_seed(seed, "plane-section", static_cast<std::uint64_t>(k)));
    return distinct_point_count(cur.ideal(), derive_seed(seed, "plane-section-count", 0)).count;
}

}  // namespace eudata
