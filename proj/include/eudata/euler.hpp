#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eudata/config.hpp"
#include "eudata/errors.hpp"
#include "eudata/ideal.hpp"
#include "eudata/polar.hpp"
#include "eudata/seeding.hpp"
#include "eudata/univariate.hpp"
#include "eudata/variety.hpp"

namespace eudata {

// Alternating sum over the polar sequence of a d-dimensional variety:
// entry j enters with sign (-1)^(d-j+1). For d = 0 this is the point count.
inline long long euler_from_alpha(int d, const AlphaSeries& alpha) {
    long long acc = 0;
    for (std::size_t j = 1; j <= alpha.values.size(); ++j) {
        const int exponent = d - static_cast<int>(j) + 1;
        const long long term = alpha.values[j - 1];
        acc += (exponent % 2 == 0) ? term : -term;
    }
    return acc;
}

inline long long global_euler_obstruction(const VarietySpec& v, std::uint64_t seed) {
    return euler_from_alpha(v.expected_dim(), alpha_series(v, seed));
}

namespace detail {

inline void monomials_of_degree(std::size_t nvars, int degree, std::size_t pos, Monomial& cur,
                                std::vector<Monomial>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = degree;
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        cur[pos] = e;
        monomials_of_degree(nvars, degree - e, pos + 1, cur, out);
    }
}

inline std::vector<Polynomial> degree_level(const std::vector<std::string>& vars, int degree) {
    std::vector<Monomial> monos;
    Monomial cur(vars.size(), 0);
    monomials_of_degree(vars.size(), degree, 0, cur, monos);
    std::vector<Polynomial> out;
    for (const auto& m : monos) {
        Polynomial p(vars);
        p.add_term(m, Rational(1));
        out.push_back(p);
    }
    return out;
}

}  // namespace detail

// Local Milnor number of a hypersurface at a rational point, through the
// stabilizing dimensions of the Jacobian algebra truncated at increasing
// orders. Nested truncations with equal dimension coincide, so the first
// repeat is already the limit value.
inline long long milnor_number(const Polynomial& f, const RationalPoint& q) {
    if (f.evaluate(q) != 0) throw InvalidArgument("the point does not lie on the hypersurface");
    const auto& vars = f.vars();
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (f.derivative(i).evaluate(q) != 0) return 0;  // smooth point

    Polynomial local = f.translate_to_origin(q);
    std::vector<Polynomial> jacobian;
    for (std::size_t i = 0; i < vars.size(); ++i) jacobian.push_back(local.derivative(i));

    const int cap = config().milnor_cap;
    long long prev = -1;
    for (int k = 1; k <= cap; ++k) {
        std::vector<Polynomial> gens = jacobian;
        for (auto& m : detail::degree_level(vars, k)) gens.push_back(std::move(m));
        long long dk = quotient_vector_dimension(Ideal(vars, std::move(gens)));
        if (dk == prev) return dk;
        prev = dk;
    }
    throw NonIsolatedSingularity("Jacobian algebra dimensions did not stabilize by order " +
                                 std::to_string(cap));
}

// Milnor number of a generic hyperplane section through q, the next entry
// of the local multiplicity sequence below mu itself. Validated by trial
// agreement across independently seeded slices.
inline long long sectional_milnor(const VarietySpec& v, const RationalPoint& q,
                                  std::uint64_t seed) {
    if (v.equations().size() != 1)
        throw InvalidArgument("sectional Milnor number needs a hypersurface");
    if (v.expected_dim() < 1)
        throw DimensionMismatch("sectional Milnor number needs positive dimension");
    if (v.equations()[0].evaluate(q) != 0)
        throw InvalidArgument("the point does not lie on the hypersurface");

    const int trials = config().trials;
    std::vector<long long> vals;
    for (int t = 0; t < trials; ++t) {
        VarietySpec w = generic_slice(
            v, derive_seed(seed, "sectional-slice", static_cast<std::uint64_t>(t)), q);
        RationalPoint image(q.begin(), q.end() - 1);
        vals.push_back(milnor_number(w.equations()[0], image));
    }
    return detail::agree_or_fail(vals, "sectional Milnor number");
}

// All singular points of a hypersurface with an isolated singular locus,
// provided every coordinate is rational. Points are recovered per-variable
// by elimination and rational root search, then confirmed by substitution.
inline std::vector<RationalPoint> singular_points(const VarietySpec& v) {
    if (v.equations().size() != 1)
        throw InvalidArgument("singular-point extraction needs a hypersurface");
    Ideal sing = singular_ideal(v);
    auto dim = krull_dimension(sing);
    if (!dim.has_value()) return {};
    if (*dim > 0)
        throw NonIsolatedSingularity("singular locus has dimension " + std::to_string(*dim));

    const auto& vars = v.vars();
    std::vector<std::vector<Rational>> per_coord;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        std::vector<std::string> drop;
        for (std::size_t j = 0; j < vars.size(); ++j)
            if (j != i) drop.push_back(vars[j]);
        Ideal axis = eliminate(sing, drop);
        if (axis.generators().size() != 1)
            throw InvalidArgument("unexpected elimination output for a finite point set");
        UnivPoly p = to_univariate(axis.generators()[0], 0);
        auto roots = rational_roots(p);
        if (static_cast<int>(roots.size()) < squarefree_part_degree(p))
            throw UnsupportedSingularLocus("singular point with an irrational " + vars[i] +
                                           "-coordinate");
        per_coord.push_back(std::move(roots));
    }

    std::vector<RationalPoint> out;
    std::vector<std::size_t> pick(vars.size(), 0);
    while (true) {
        RationalPoint candidate;
        for (std::size_t i = 0; i < vars.size(); ++i) candidate.push_back(per_coord[i][pick[i]]);
        bool on_locus = true;
        for (const auto& g : sing.generators())
            if (g.evaluate(candidate) != 0) {
                on_locus = false;
                break;
            }
        if (on_locus) out.push_back(std::move(candidate));
        std::size_t i = 0;
        for (; i < vars.size(); ++i) {
            if (++pick[i] < per_coord[i].size()) break;
            pick[i] = 0;
        }
        if (i == vars.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// One singular point with its two local invariants.
struct MilnorRecord {
    RationalPoint point;
    long long mu = 0;
    long long mu_sectional = 0;
};

inline std::vector<MilnorRecord> milnor_records(const VarietySpec& v, std::uint64_t seed) {
    std::vector<MilnorRecord> out;
    auto points = singular_points(v);
    for (std::size_t i = 0; i < points.size(); ++i) {
        MilnorRecord rec;
        rec.mu = milnor_number(v.equations()[0], points[i]);
        rec.mu_sectional =
            sectional_milnor(v, points[i], derive_seed(seed, "record-sectional", i));
        rec.point = std::move(points[i]);
        out.push_back(std::move(rec));
    }
    return out;
}

// Lower-strata correction sequence for a hypersurface whose singularities
// are isolated: entry 1 sums the sectional Milnor numbers over the singular
// points; deeper entries vanish because generic slices miss the finitely
// many singular points, which is verified rather than assumed.
struct BetaSeries {
    std::vector<long long> values;

    long long at(int k) const {
        if (k < 1 || static_cast<std::size_t>(k) > values.size())
            throw InvalidArgument("series index " + std::to_string(k) + " out of range");
        return values[static_cast<std::size_t>(k - 1)];
    }
};

inline BetaSeries beta_series_isolated(const VarietySpec& v, std::uint64_t seed) {
    if (v.equations().size() != 1)
        throw InvalidArgument("lower-strata series needs a hypersurface");
    if (v.expected_dim() < 1)
        throw DimensionMismatch("lower-strata series needs positive dimension");

    BetaSeries out;
    auto points = singular_points(v);
    long long total = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
        total += sectional_milnor(v, points[i], derive_seed(seed, "beta-sectional", i));
    out.values.push_back(total);

    VarietySpec w = v;
    for (int k = 2; k <= v.expected_dim(); ++k) {
        w = generic_slice(w, derive_seed(seed, "beta-slice", static_cast<std::uint64_t>(k)));
        if (krull_dimension(singular_ideal(w)).has_value())
            throw GenericityFailure("slice expected to be smooth has singular points");
        out.values.push_back(0);
    }
    return out;
}

// Euler characteristic for an isolated-singularity hypersurface, computed
// two ways: directly from the obstruction plus the signed sectional-Milnor
// sum, and independently through the hyperplane-pencil recursion
// chi = chi(slice) + (-1)^d (alpha_1 + beta_1). Both must agree.
inline long long chi_isolated(const VarietySpec& v, std::uint64_t seed) {
    if (v.equations().size() != 1)
        throw InvalidArgument("euler characteristic needs a hypersurface");
    if (v.expected_dim() < 1)
        throw DimensionMismatch("euler characteristic pipeline needs positive dimension");

    const int d = v.expected_dim();
    const long long sign = (d % 2 == 0) ? 1 : -1;

    long long eu = global_euler_obstruction(v, seed);
    auto points = singular_points(v);
    long long mu_sum = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
        mu_sum += sectional_milnor(v, points[i], derive_seed(seed, "chi-sectional", i));
    const long long chi = eu + sign * mu_sum;

    VarietySpec slice = generic_slice(v, derive_seed(seed, "chi-slice", 0));
    if (krull_dimension(singular_ideal(slice)).has_value())
        throw GenericityFailure("pencil slice is not smooth");
    const long long chi_slice =
        global_euler_obstruction(slice, derive_seed(seed, "chi-slice-sum", 0));
    const long long a1 = alpha_one(v, derive_seed(seed, "chi-critical", 0));
    const long long b1 = beta_series_isolated(v, derive_seed(seed, "chi-beta", 0)).values[0];
    const long long chi_pencil = chi_slice + sign * (a1 + b1);

    if (chi != chi_pencil)
        throw ConsistencyFailure("euler characteristics disagree: direct " + std::to_string(chi) +
                                 " vs pencil recursion " + std::to_string(chi_pencil));
    return chi;
}

// The difference chi - Eu as the alternating sum of the lower-strata
// series: entry k carries sign (-1)^(d-k+1).
inline long long chi_minus_eu(const VarietySpec& v, std::uint64_t seed) {
    BetaSeries beta = beta_series_isolated(v, seed);
    const int d = v.expected_dim();
    long long acc = 0;
    for (int k = 1; k <= d; ++k) {
        const int exponent = d - k + 1;
        const long long term = beta.values[static_cast<std::size_t>(k - 1)];
        acc += (exponent % 2 == 0) ? term : -term;
    }
    return acc;
}

// Bundle of every invariant the engine can attach to one variety, for
// reporting. chi/beta/milnor are present only when the isolated-singularity
// hypersurface pipeline was requested and applicable.
struct InvariantReport {
    int dim = 0;
    AlphaSeries alpha;
    long long eu = 0;
    std::optional<long long> chi;
    std::optional<BetaSeries> beta;
    std::vector<MilnorRecord> milnor;
    std::vector<std::uint64_t> seeds;
    bool agreement = false;
};

inline InvariantReport invariant_report(const VarietySpec& v, std::uint64_t seed, bool with_chi) {
    InvariantReport r;
    r.dim = v.expected_dim();
    r.alpha = alpha_series(v, seed);
    r.eu = euler_from_alpha(r.dim, r.alpha);
    r.seeds = r.alpha.seeds_used;
    if (with_chi) {
        r.beta = beta_series_isolated(v, seed);
        r.milnor = milnor_records(v, seed);
        r.chi = chi_isolated(v, seed);
        // The two Euler data may differ only by the alternating sum of the
        // lower-strata series; refuse to emit a report violating that.
        long long diff = 0;
        for (int k = 1; k <= r.dim; ++k) {
            const long long term = r.beta->values[static_cast<std::size_t>(k - 1)];
            diff += ((r.dim - k + 1) % 2 == 0) ? term : -term;
        }
        if (*r.chi - r.eu != diff)
            throw ConsistencyFailure("report violates the Euler-data difference identity");
    }
    r.agreement = true;
    return r;
}

}  // namespace eudata
