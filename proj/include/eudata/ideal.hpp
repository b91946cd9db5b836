#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "eudata/config.hpp"
#include "eudata/errors.hpp"
#include "eudata/monomial.hpp"
#include "eudata/polynomial.hpp"
#include "eudata/seeding.hpp"
#include "eudata/univariate.hpp"

namespace eudata {

// A polynomial ideal with a write-once-per-order memo of reduced Groebner
// bases. Generators are immutable; copies share the cache.
class Ideal {
public:
    Ideal(std::vector<std::string> vars, std::vector<Polynomial> generators)
        : vars_(std::move(vars)), cache_(std::make_shared<Cache>()) {
        for (auto& g : generators) {
            if (g.vars() != vars_) throw InvalidArgument("generator lives in a different ring");
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    Ideal with_extra_generators(std::vector<Polynomial> more) const {
        std::vector<Polynomial> gens = gens_;
        for (auto& p : more) gens.push_back(std::move(p));
        return Ideal(vars_, std::move(gens));
    }

    using CacheKey = std::pair<int, std::size_t>;

    const std::vector<Polynomial>* cached_basis(const MonomialOrder& order) const {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->bases.find(key_of(order));
        return it == cache_->bases.end() ? nullptr : &it->second;
    }

    const std::vector<Polynomial>& store_basis(const MonomialOrder& order,
                                               std::vector<Polynomial> basis) const {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto [it, inserted] = cache_->bases.try_emplace(key_of(order), std::move(basis));
        return it->second;
    }

private:
    static CacheKey key_of(const MonomialOrder& order) {
        return {static_cast<int>(order.kind), order.block};
    }

    struct Cache {
        std::mutex mutex;
        std::map<CacheKey, std::vector<Polynomial>> bases;
    };

    std::vector<std::string> vars_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

namespace detail {

inline Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) return p;
    return (Rational(1) / p.leading_term(order).second) * p;
}

// Full multivariate division: every term of the remainder is reducible by
// no basis leading monomial.
inline Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& basis,
                              const MonomialOrder& order) {
    Polynomial remainder(p.vars());
    std::vector<std::pair<Monomial, Rational>> lts;
    lts.reserve(basis.size());
    for (const auto& g : basis) lts.push_back(g.leading_term(order));

    while (!p.is_zero()) {
        auto [m, c] = p.leading_term(order);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (divides(lts[i].first, m)) {
                Monomial quot = monomial_div(m, lts[i].first);
                Polynomial shift(p.vars());
                shift.add_term(quot, c / lts[i].second);
                p = p - shift * basis[i];
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.add_term(m, c);
            Polynomial drop(p.vars());
            drop.add_term(m, c);
            p = p - drop;
        }
    }
    return remainder;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& order) {
    auto [mf, cf] = f.leading_term(order);
    auto [mg, cg] = g.leading_term(order);
    Monomial l = monomial_lcm(mf, mg);
    Polynomial a(f.vars()), b(f.vars());
    a.add_term(monomial_div(l, mf), Rational(1) / cf);
    b.add_term(monomial_div(l, mg), Rational(1) / cg);
    return a * f - b * g;
}

// Buchberger with the coprime-LM criterion, the chain criterion, and a
// degree-ordered pair queue. Throws ResourceLimit past `spair_limit`.
inline std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                          const MonomialOrder& order, long long spair_limit) {
    std::vector<Polynomial> g;
    for (auto& p : gens)
        if (!p.is_zero()) g.push_back(make_monic(p, order));
    if (g.empty()) return {};

    std::vector<Monomial> lm;
    for (const auto& p : g) lm.push_back(p.leading_term(order).first);

    using PairKey = std::tuple<int, std::size_t, std::size_t>;  // (deg lcm, i, j)
    std::set<PairKey> pending;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pending.insert({total_degree(monomial_lcm(lm[i], lm[j])), i, j});
    };
    for (std::size_t j = 1; j < g.size(); ++j) push_pairs_for(j);

    auto is_pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return pending.count({total_degree(monomial_lcm(lm[a], lm[b])), a, b}) > 0;
    };

    long long processed = 0;
    while (!pending.empty()) {
        auto [deg, i, j] = *pending.begin();
        pending.erase(pending.begin());
        if (++processed > spair_limit)
            throw ResourceLimit("S-pair budget of " + std::to_string(spair_limit) + " exceeded");

        if (coprime(lm[i], lm[j])) continue;
        Monomial l = monomial_lcm(lm[i], lm[j]);
        bool skip = false;
        for (std::size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (divides(lm[k], l) && !is_pending(i, k) && !is_pending(j, k)) skip = true;
        }
        if (skip) continue;

        Polynomial h = reduce_full(s_polynomial(g[i], g[j], order), g, order);
        if (h.is_zero()) continue;
        g.push_back(make_monic(h, order));
        lm.push_back(g.back().leading_term(order).first);
        push_pairs_for(g.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another surviving leading monomial.
    std::vector<bool> keep(g.size(), true);
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t k = 0; k < g.size() && keep[i]; ++k) {
            if (k == i || !keep[k]) continue;
            if (divides(lm[k], lm[i]) && !(lm[k] == lm[i] && k > i)) keep[i] = false;
        }
    }
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (keep[i]) minimal.push_back(g[i]);

    // Tail-reduce each element against the rest for the unique reduced basis.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> rest;
        for (std::size_t k = 0; k < minimal.size(); ++k)
            if (k != i) rest.push_back(minimal[k]);
        Polynomial r = rest.empty() ? minimal[i] : reduce_full(minimal[i], rest, order);
        reduced.push_back(make_monic(r, order));
    }
    std::sort(reduced.begin(), reduced.end(), [&order](const Polynomial& a, const Polynomial& b) {
        return order.greater(a.leading_term(order).first, b.leading_term(order).first);
    });
    return reduced;
}

}  // namespace detail

// Reduced Groebner basis for the given order, memoized on the ideal.
inline const std::vector<Polynomial>& groebner_basis(const Ideal& ideal,
                                                     const MonomialOrder& order,
                                                     long long spair_limit = 0) {
    if (const auto* hit = ideal.cached_basis(order)) return *hit;
    if (spair_limit <= 0) spair_limit = config().spair_limit;
    auto basis = detail::buchberger(ideal.generators(), order, spair_limit);
    return ideal.store_basis(order, std::move(basis));
}

// Canonical remainder of p modulo the ideal; zero iff p is a member.
inline Polynomial normal_form(const Polynomial& p, const Ideal& ideal,
                              const MonomialOrder& order = MonomialOrder::grevlex()) {
    const auto& basis = groebner_basis(ideal, order);
    if (basis.empty()) return p;
    return detail::reduce_full(p, basis, order);
}

inline bool contains_one(const Ideal& ideal) {
    const auto& basis = groebner_basis(ideal, MonomialOrder::grevlex());
    for (const auto& g : basis)
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

// Dimension of the vanishing set from the leading-monomial staircase;
// nullopt means the variety is empty (1 lies in the ideal).
inline std::optional<int> krull_dimension(const Ideal& ideal) {
    const auto& basis = groebner_basis(ideal, MonomialOrder::grevlex());
    const std::size_t n = ideal.vars().size();
    if (n >= 20) throw ResourceLimit("staircase dimension search limited to <20 variables");
    std::vector<unsigned> supports;
    for (const auto& g : basis) {
        if (g.is_constant() && !g.is_zero()) return std::nullopt;
        Monomial m = g.leading_term(MonomialOrder::grevlex()).first;
        unsigned s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] > 0) s |= 1u << i;
        supports.push_back(s);
    }
    // Largest variable subset that contains no leading-monomial support.
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (unsigned s : supports) {
            if ((s & mask) == s) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, std::popcount(mask));
    }
    return best;
}

// Monomials outside the leading-term ideal, for zero-dimensional ideals.
// The empty variety yields an empty basis. Throws NotZeroDimensional when
// the staircase is infinite.
inline std::vector<Monomial> standard_monomials(const Ideal& ideal) {
    const auto& basis = groebner_basis(ideal, MonomialOrder::grevlex());
    const std::size_t n = ideal.vars().size();
    std::vector<Monomial> lms;
    for (const auto& g : basis) {
        if (g.is_constant() && !g.is_zero()) return {};
        lms.push_back(g.leading_term(MonomialOrder::grevlex()).first);
    }
    // Zero-dimensional iff every variable has a pure power among the LMs.
    std::vector<int> bound(n, -1);
    for (const auto& m : lms) {
        int var = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] > 0) {
                if (var >= 0) pure = false;
                var = static_cast<int>(i);
            }
        }
        if (pure && var >= 0)
            bound[static_cast<std::size_t>(var)] =
                bound[static_cast<std::size_t>(var)] < 0
                    ? m[static_cast<std::size_t>(var)]
                    : std::min(bound[static_cast<std::size_t>(var)], m[static_cast<std::size_t>(var)]);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] < 0)
            throw NotZeroDimensional("ideal is not zero-dimensional (variable " +
                                     ideal.vars()[i] + " is free)");

    std::vector<Monomial> out;
    Monomial cur(n, 0);
    while (true) {
        bool standard = true;
        for (const auto& m : lms) {
            if (divides(m, cur)) {
                standard = false;
                break;
            }
        }
        if (standard) out.push_back(cur);
        // odometer over the box [0, bound_i)
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++cur[i] < bound[i]) break;
            cur[i] = 0;
        }
        if (i == n) break;
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return MonomialOrder::grevlex().less(a, b);
    });
    return out;
}

// Vector-space dimension of the quotient algebra of a zero-dimensional
// ideal (0 for the empty variety).
inline long long quotient_vector_dimension(const Ideal& ideal) {
    return static_cast<long long>(standard_monomials(ideal).size());
}

namespace detail {

inline Polynomial insert_var_front(const Polynomial& p, const std::vector<std::string>& big_vars) {
    Polynomial out(big_vars);
    for (const auto& [m, c] : p.terms()) {
        Monomial nm(big_vars.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) nm[i + 1] = m[i];
        out.add_term(nm, c);
    }
    return out;
}

inline Polynomial drop_var_front(const Polynomial& p, const std::vector<std::string>& small_vars) {
    Polynomial out(small_vars);
    for (const auto& [m, c] : p.terms()) {
        Monomial nm(m.begin() + 1, m.end());
        out.add_term(nm, c);
    }
    return out;
}

}  // namespace detail

// Intersection of the ideal with the subring omitting the dropped
// variables, via an elimination-block order.
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop) {
    const auto& vars = ideal.vars();
    std::vector<std::size_t> dropped, kept;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        bool is_dropped = std::find(drop.begin(), drop.end(), vars[i]) != drop.end();
        (is_dropped ? dropped : kept).push_back(i);
    }
    if (dropped.size() != drop.size()) throw InvalidArgument("eliminate: unknown variable");

    // Reorder so the dropped block comes first.
    std::vector<std::size_t> perm = dropped;
    perm.insert(perm.end(), kept.begin(), kept.end());
    std::vector<std::string> perm_vars;
    for (std::size_t i : perm) perm_vars.push_back(vars[i]);

    std::vector<Polynomial> perm_gens;
    for (const auto& g : ideal.generators()) perm_gens.push_back(g.permuted(perm_vars, perm));
    Ideal permuted(perm_vars, std::move(perm_gens));

    const auto& basis = groebner_basis(permuted, MonomialOrder::elimination(dropped.size()));

    std::vector<std::string> small_vars;
    for (std::size_t i : kept) small_vars.push_back(vars[i]);
    std::vector<Polynomial> out;
    for (const auto& g : basis) {
        bool free_of_dropped = true;
        for (const auto& [m, c] : g.terms())
            for (std::size_t i = 0; i < dropped.size(); ++i)
                if (m[i] > 0) free_of_dropped = false;
        if (!free_of_dropped) continue;
        Polynomial small(small_vars);
        for (const auto& [m, c] : g.terms()) {
            Monomial nm(small_vars.size(), 0);
            for (std::size_t j = 0; j < kept.size(); ++j) nm[j] = m[dropped.size() + j];
            small.add_term(nm, c);
        }
        out.push_back(small);
    }
    return Ideal(small_vars, std::move(out));
}

inline Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    if (a.vars() != b.vars()) throw InvalidArgument("intersection needs a common ring");
    std::vector<std::string> big_vars = {"@t"};
    big_vars.insert(big_vars.end(), a.vars().begin(), a.vars().end());
    Polynomial t = Polynomial::variable(big_vars, 0);
    Polynomial one_minus_t = Polynomial::constant(big_vars, Rational(1)) - t;

    std::vector<Polynomial> gens;
    for (const auto& p : a.generators()) gens.push_back(t * detail::insert_var_front(p, big_vars));
    for (const auto& q : b.generators())
        gens.push_back(one_minus_t * detail::insert_var_front(q, big_vars));
    Ideal big(big_vars, std::move(gens));
    Ideal small = eliminate(big, {"@t"});

    std::vector<Polynomial> out;
    for (const auto& g : small.generators()) {
        Polynomial mapped(a.vars());
        for (const auto& [m, c] : g.terms()) mapped.add_term(m, c);
        out.push_back(mapped);
    }
    return Ideal(a.vars(), std::move(out));
}

namespace detail {

// I : g^infinity by the auxiliary-variable trick.
inline Ideal saturate_single(const Ideal& ideal, const Polynomial& g) {
    std::vector<std::string> big_vars = {"@t"};
    big_vars.insert(big_vars.end(), ideal.vars().begin(), ideal.vars().end());
    std::vector<Polynomial> gens;
    for (const auto& p : ideal.generators()) gens.push_back(insert_var_front(p, big_vars));
    Polynomial rel = Polynomial::constant(big_vars, Rational(1)) -
                     Polynomial::variable(big_vars, 0) * insert_var_front(g, big_vars);
    gens.push_back(rel);
    Ideal big(big_vars, std::move(gens));
    Ideal small = eliminate(big, {"@t"});

    std::vector<Polynomial> out;
    for (const auto& h : small.generators()) {
        Polynomial mapped(ideal.vars());
        for (const auto& [m, c] : h.terms()) mapped.add_term(m, c);
        out.push_back(mapped);
    }
    return Ideal(ideal.vars(), std::move(out));
}

}  // namespace detail

// I : J^infinity, the ideal of the closure of V(I) \ V(J). Computed as the
// intersection of the single-generator saturations; generators of J already
// vanishing on V(I) contribute the whole ring and are skipped.
inline Ideal saturation(const Ideal& ideal, const Ideal& by) {
    if (ideal.vars() != by.vars()) throw InvalidArgument("saturation needs a common ring");
    std::optional<Ideal> acc;
    for (const auto& g : by.generators()) {
        if (normal_form(g, ideal).is_zero()) continue;  // I : g^inf is the whole ring
        Ideal part = detail::saturate_single(ideal, g);
        acc = acc ? ideal_intersection(*acc, part) : part;
    }
    if (!acc) {
        // Every generator vanishes on V(I): nothing survives the removal.
        return Ideal(ideal.vars(),
                     {Polynomial::constant(ideal.vars(), Rational(1))});
    }
    return *acc;
}

namespace detail {

// Coordinates of the normal form of p in the standard-monomial basis.
inline std::vector<Rational> quotient_coords(const Polynomial& p,
                                             const std::vector<Monomial>& basis) {
    std::vector<Rational> v(basis.size(), Rational(0));
    for (const auto& [m, c] : p.terms()) {
        auto it = std::find(basis.begin(), basis.end(), m);
        if (it == basis.end())
            throw InvalidArgument("normal form leaves the standard-monomial span");
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

// Monic minimal polynomial of the multiplication operator of u on the
// quotient algebra, found as the first linear dependence among the normal
// forms of 1, u, u^2, ...
inline UnivPoly minimal_polynomial(const Polynomial& u, const Ideal& ideal,
                                   const std::vector<Monomial>& basis) {
    const std::size_t q = basis.size();
    struct Row {
        std::size_t pivot;
        std::vector<Rational> value;  // reduced power coordinates
        std::vector<Rational> comb;   // expression in terms of v_0..v_k
    };
    std::vector<Row> rows;
    Polynomial power = Polynomial::constant(u.vars(), Rational(1));
    for (std::size_t k = 0; k <= q; ++k) {
        if (k > 0) power = normal_form(power * u, ideal);
        std::vector<Rational> v = quotient_coords(power, basis);
        std::vector<Rational> comb(k + 1, Rational(0));
        comb[k] = Rational(1);
        for (const auto& row : rows) {
            if (v[row.pivot] == 0) continue;
            Rational f = v[row.pivot] / row.value[row.pivot];
            for (std::size_t i = 0; i < q; ++i) v[i] -= f * row.value[i];
            for (std::size_t i = 0; i < row.comb.size(); ++i) comb[i] -= f * row.comb[i];
        }
        std::size_t pivot = q;
        for (std::size_t i = 0; i < q; ++i) {
            if (v[i] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == q) return comb;  // v_k depends on earlier powers; comb is monic of degree k
        rows.push_back(Row{pivot, std::move(v), std::move(comb)});
    }
    throw InvalidArgument("no linear dependence within the quotient dimension");
}

inline Polynomial seeded_linear_form(const std::vector<std::string>& vars, std::uint64_t seed) {
    SeedStream stream(seed);
    Polynomial u(vars);
    const long long bound = config().coeff_bound;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        Monomial m(vars.size(), 0);
        m[i] = 1;
        u.add_term(m, Rational(stream.nonzero_in_bound(bound)));
    }
    return u;
}

}  // namespace detail

struct PointCount {
    long long count = 0;              // distinct solutions over the complex numbers
    long long with_multiplicity = 0;  // quotient vector-space dimension
};

// Number of distinct complex points of a zero-dimensional ideal: the
// squarefree-part degree of the minimal polynomial of a random linear form,
// accepted once two independent draws agree.
inline PointCount distinct_point_count(const Ideal& ideal, std::uint64_t seed,
                                       int retries = 5) {
    std::vector<Monomial> basis = standard_monomials(ideal);
    PointCount out;
    out.with_multiplicity = static_cast<long long>(basis.size());
    if (basis.empty()) return out;

    long long prev = -1;
    for (int attempt = 0; attempt <= retries; ++attempt) {
        Polynomial u = detail::seeded_linear_form(
            ideal.vars(), derive_seed(seed, "distinct-point-form",
                                      static_cast<std::uint64_t>(attempt)));
        UnivPoly mp = detail::minimal_polynomial(u, ideal, basis);
        long long sf = squarefree_part_degree(mp);
        if (prev == sf) {
            out.count = sf;
            return out;
        }
        prev = sf;
    }
    throw GenericityFailure("distinct point count did not stabilize across draws");
}

}  // namespace eudata
