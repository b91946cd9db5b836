#pragma once

#include <algorithm>
#include <vector>

#include "eudata/errors.hpp"
#include "eudata/polynomial.hpp"
#include "eudata/rational.hpp"

namespace eudata {

// Dense univariate utilities over Q. Coefficient vectors are indexed by
// degree; the zero polynomial is the empty vector.
using UnivPoly = std::vector<Rational>;

inline void univ_trim(UnivPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int univ_degree(const UnivPoly& p) { return static_cast<int>(p.size()) - 1; }

// Extract the dense coefficient vector of a polynomial that only uses the
// variable `var` of its ring.
inline UnivPoly to_univariate(const Polynomial& p, std::size_t var) {
    UnivPoly out;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != var && m[i] > 0)
                throw InvalidArgument("polynomial is not univariate in the requested variable");
        std::size_t e = static_cast<std::size_t>(m.at(var));
        if (out.size() <= e) out.resize(e + 1, Rational(0));
        out[e] = c;
    }
    univ_trim(out);
    return out;
}

inline UnivPoly univ_derivative(const UnivPoly& p) {
    UnivPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<int>(i));
    univ_trim(out);
    return out;
}

inline Rational univ_eval(const UnivPoly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// Remainder of a modulo b (b nonzero).
inline UnivPoly univ_mod(UnivPoly a, const UnivPoly& b) {
    univ_trim(a);
    while (univ_degree(a) >= univ_degree(b)) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
        univ_trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Monic gcd via the Euclidean algorithm.
inline UnivPoly univ_gcd(UnivPoly a, UnivPoly b) {
    univ_trim(a);
    univ_trim(b);
    while (!b.empty()) {
        UnivPoly r = univ_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

// Number of distinct complex roots: deg p - deg gcd(p, p').
inline int squarefree_part_degree(const UnivPoly& p) {
    if (univ_degree(p) <= 0) return 0;
    UnivPoly g = univ_gcd(p, univ_derivative(p));
    return univ_degree(p) - univ_degree(g);
}

namespace detail {

// Positive divisors by trial division, with a hard iteration cap so that
// pathological inputs fail loudly instead of spinning.
inline std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    if (n == 0) throw InvalidArgument("divisors of zero requested");
    std::vector<Integer> divs;
    Integer d = 1;
    long long steps = 0;
    for (; d * d <= n; ++d) {
        if (++steps > 4000000)
            throw ResourceLimit("divisor enumeration exceeded its budget");
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    return divs;
}

}  // namespace detail

// All distinct rational roots, sorted ascending, via the rational root
// theorem on the integer-cleared form.
inline std::vector<Rational> rational_roots(const UnivPoly& p) {
    UnivPoly q = p;
    univ_trim(q);
    if (q.empty()) throw InvalidArgument("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    // Strip powers of x first.
    std::size_t low = 0;
    while (low < q.size() && q[low] == 0) ++low;
    if (low > 0) {
        roots.push_back(Rational(0));
        q.erase(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (univ_degree(q) <= 0) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    // Clear denominators.
    Integer scale = 1;
    for (const auto& c : q) scale = lcm(scale, rational_den(c));
    std::vector<Integer> z;
    z.reserve(q.size());
    for (const auto& c : q) z.push_back(rational_num(c) * (scale / rational_den(c)));

    const auto ps = detail::positive_divisors(z.front());
    const auto qs = detail::positive_divisors(z.back());
    for (const auto& num : ps) {
        for (const auto& den : qs) {
            if (gcd(num, den) != 1) continue;
            for (int sign : {1, -1}) {
                Rational cand(sign * num, den);
                if (univ_eval(q, cand) == 0) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace eudata
