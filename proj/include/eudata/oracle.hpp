#pragma once

// Brute-force verifiers for cross-checking the main engine. Everything here
// is built on resultants and closed-form topology; deliberately no use of
// the Groebner machinery, so agreement between the two is meaningful.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eudata/config.hpp"
#include "eudata/errors.hpp"
#include "eudata/matrix.hpp"
#include "eudata/polynomial.hpp"
#include "eudata/seeding.hpp"
#include "eudata/univariate.hpp"

namespace eudata {

struct BivariateSystem {
    Polynomial p, q;

    BivariateSystem(Polynomial pp, Polynomial qq) : p(std::move(pp)), q(std::move(qq)) {
        if (p.num_vars() != 2 || p.vars() != q.vars())
            throw InvalidArgument("bivariate system needs two polynomials in one 2-variable ring");
        if (p.is_zero() || q.is_zero())
            throw InvalidArgument("bivariate system members must be nonzero");
    }
};

namespace detail {

// View p in Q[x][y]: coefficient polynomials indexed by the power of the
// second variable.
inline std::vector<Polynomial> coeffs_in_second_var(const Polynomial& p) {
    const std::vector<std::string> xring = {p.vars()[0]};
    int dy = p.degree_in(1);
    std::vector<Polynomial> out(static_cast<std::size_t>(dy < 0 ? 0 : dy) + 1,
                                Polynomial(xring));
    for (const auto& [m, c] : p.terms())
        out[static_cast<std::size_t>(m[1])].add_term(Monomial{m[0]}, c);
    return out;
}

// Resultant eliminating the second variable, as the Sylvester determinant.
// Convention for degree-zero inputs: Res(f, g) = f_0^{deg g} when f is free
// of the variable; the doubly-free case degenerates to zero.
inline Polynomial resultant_second_var(const Polynomial& p, const Polynomial& q) {
    auto F = coeffs_in_second_var(p);
    auto G = coeffs_in_second_var(q);
    const std::size_t m = F.size() - 1, n = G.size() - 1;
    const std::vector<std::string> xring = {p.vars()[0]};
    if (m == 0 && n == 0) return Polynomial(xring);
    if (m == 0) return F[0].pow(static_cast<unsigned>(n));
    if (n == 0) return G[0].pow(static_cast<unsigned>(m));

    PolyMatrix syl(m + n, m + n, xring);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) syl.at(r, r + k) = F[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) syl.at(n + r, r + k) = G[n - k];
    return determinant(syl);
}

inline Polynomial swap_vars(const Polynomial& p) {
    std::vector<std::string> flipped = {p.vars()[1], p.vars()[0]};
    return p.permuted(flipped, {1, 0});
}

// Coordinate shear x := x + a*y applied to both members.
inline BivariateSystem sheared_system(const BivariateSystem& s, long long a) {
    const auto& vars = s.p.vars();
    std::vector<Polynomial> images = {
        Polynomial::variable(vars, 0) + Rational(a) * Polynomial::variable(vars, 1),
        Polynomial::variable(vars, 1)};
    return BivariateSystem(s.p.compose(vars, images), s.q.compose(vars, images));
}

}  // namespace detail

// Number of distinct common solutions in C^2 of a bivariate system with no
// shared curve component. The count is the squarefree-part degree of the
// resultant eliminating the second variable after a seeded shear that
// separates the fibers, confirmed by a second independent shear.
inline long long resultant_point_count(const BivariateSystem& sys, std::uint64_t seed = 0) {
    if (sys.p.is_constant() || sys.q.is_constant()) return 0;  // a nonzero constant never vanishes

    // Component screen: identically-zero resultants in both elimination
    // directions that persist under a shear betray a shared component.
    Polynomial ry = detail::resultant_second_var(sys.p, sys.q);
    Polynomial rx = detail::resultant_second_var(detail::swap_vars(sys.p),
                                                 detail::swap_vars(sys.q));
    if (ry.is_zero() && rx.is_zero()) {
        SeedStream probe(derive_seed(seed, "resultant-component-probe", 0));
        auto moved = detail::sheared_system(sys, probe.nonzero_in_bound(config().coeff_bound));
        if (detail::resultant_second_var(moved.p, moved.q).is_zero())
            throw CommonComponent("the two curves share a component");
    }

    long long counts[2] = {0, 0};
    for (int shear_index = 0; shear_index < 2; ++shear_index) {
        bool done = false;
        for (int attempt = 0; attempt < 5 && !done; ++attempt) {
            SeedStream draw(derive_seed(seed, "resultant-shear",
                                        static_cast<std::uint64_t>(shear_index * 8 + attempt)));
            auto moved = detail::sheared_system(sys, draw.nonzero_in_bound(config().coeff_bound));
            // The shear must keep full degree in the eliminated variable so
            // that specialization commutes with the resultant.
            if (moved.p.degree_in(1) != sys.p.degree() || moved.q.degree_in(1) != sys.q.degree())
                continue;
            Polynomial r = detail::resultant_second_var(moved.p, moved.q);
            if (r.is_zero()) throw CommonComponent("the two curves share a component");
            counts[shear_index] = squarefree_part_degree(to_univariate(r, 0));
            done = true;
        }
        if (!done) throw GenericityFailure("no degree-preserving shear found");
    }
    if (counts[0] != counts[1])
        throw GenericityFailure("point counts from independent shears disagree (" +
                                std::to_string(counts[0]) + " vs " + std::to_string(counts[1]) + ")");
    return counts[0];
}

// Euler characteristic of a smooth affine plane curve of the given degree
// whose projective closure is smooth and transverse at infinity: the closed
// curve has characteristic 2 - (n-1)(n-2); remove the points at infinity.
inline long long chi_smooth_plane_curve(int degree, int points_at_infinity) {
    if (degree < 1) throw InvalidArgument("curve degree must be positive");
    if (points_at_infinity < 1) throw InvalidArgument("a degree-n curve meets infinity");
    return 2 - static_cast<long long>(degree - 1) * (degree - 2) - points_at_infinity;
}

}  // namespace eudata
