#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eudata/errors.hpp"
#include "eudata/monomial.hpp"
#include "eudata/rational.hpp"

namespace eudata {

// Exact multivariate polynomial over Q. Terms live in a canonical map (no
// zero coefficients), so equal polynomials have identical representations
// regardless of how they were built. Immutable in spirit: every operation
// returns a fresh value.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;

    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(std::vector<std::string> vars, const Rational& c) {
        Polynomial p(std::move(vars));
        if (c != 0) p.terms_[Monomial(p.vars_.size(), 0)] = c;
        return p;
    }

    static Polynomial variable(std::vector<std::string> vars, std::size_t index) {
        Polynomial p(std::move(vars));
        Monomial m(p.vars_.size(), 0);
        m.at(index) = 1;
        p.terms_[m] = Rational(1);
        return p;
    }

    static Polynomial from_terms(std::vector<std::string> vars, TermMap terms) {
        Polynomial p(std::move(vars));
        for (auto& [m, c] : terms) {
            if (c != 0) p.terms_.emplace(m, c);
        }
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t num_vars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        auto it = terms_.find(Monomial(vars_.size(), 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const {
        int d = -1;  // convention: deg 0 = -1 handled by callers that care
        for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
        return d;
    }

    int degree_in(std::size_t var) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.at(var));
        return d;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool uses_var(std::size_t var) const {
        for (const auto& [m, c] : terms_)
            if (m.at(var) > 0) return true;
        return false;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    Polynomial operator-() const {
        Polynomial out(vars_);
        for (const auto& [m, c] : terms_) out.terms_[m] = -c;
        return out;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_same_ring(b);
        Polynomial out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check_same_ring(b);
        Polynomial out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_ring(b);
        Polynomial out(a.vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
        return out;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial out(p.vars_);
        if (c == 0) return out;
        for (const auto& [m, pc] : p.terms_) out.terms_[m] = c * pc;
        return out;
    }

    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

    Polynomial pow(unsigned e) const {
        Polynomial acc = constant(vars_, Rational(1));
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1u) acc = acc * base;
            base = base * base;
            e >>= 1u;
        }
        return acc;
    }

    // Formal partial derivative with respect to vars()[var].
    Polynomial derivative(std::size_t var) const {
        Polynomial out(vars_);
        for (const auto& [m, c] : terms_) {
            int e = m.at(var);
            if (e == 0) continue;
            Monomial reduced = m;
            reduced[var] = e - 1;
            out.add_term(reduced, c * e);
        }
        return out;
    }

    // Exact evaluation at a rational point.
    Rational evaluate(const RationalPoint& point) const {
        if (point.size() != vars_.size())
            throw InvalidArgument("evaluation point has wrong arity");
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0) t *= pow_rational(point[i], static_cast<unsigned>(m[i]));
            acc += t;
        }
        return acc;
    }

    // Simultaneous substitution x_i := images[i] where every image lives in
    // the ring `target_vars`. The workhorse behind translation and shears.
    Polynomial compose(const std::vector<std::string>& target_vars,
                       const std::vector<Polynomial>& images) const {
        if (images.size() != vars_.size())
            throw InvalidArgument("compose needs one image per variable");
        Polynomial acc(target_vars);
        for (const auto& [m, c] : terms_) {
            Polynomial t = Polynomial::constant(target_vars, c);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0) t = t * images[i].pow(static_cast<unsigned>(m[i]));
            acc = acc + t;
        }
        return acc;
    }

    // p(x + q): translate so that the point q moves to the origin.
    Polynomial translate_to_origin(const RationalPoint& q) const {
        if (q.size() != vars_.size()) throw InvalidArgument("translation point has wrong arity");
        std::vector<Polynomial> images;
        images.reserve(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i)
            images.push_back(Polynomial::variable(vars_, i) +
                             Polynomial::constant(vars_, q[i]));
        return compose(vars_, images);
    }

    // Rename/permute variables: new_vars[i] receives the old variable at
    // perm[i]. Every old variable must be covered exactly once.
    Polynomial permuted(const std::vector<std::string>& new_vars,
                        const std::vector<std::size_t>& perm) const {
        Polynomial out(new_vars);
        for (const auto& [m, c] : terms_) {
            Monomial nm(new_vars.size(), 0);
            for (std::size_t i = 0; i < perm.size(); ++i) nm[i] = m.at(perm[i]);
            out.terms_[nm] = c;
        }
        return out;
    }

    // Leading term with respect to an order; polynomial must be nonzero.
    std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.greater(it->first, best->first)) best = it;
        return {best->first, best->second};
    }

    // Terms sorted descending under the order; used by the division loops.
    std::vector<std::pair<Monomial, Rational>> sorted_terms(const MonomialOrder& order) const {
        std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(),
                  [&order](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
        return out;
    }

    std::string to_string() const;

    // Internal accumulation; keeps the no-zero-coefficient invariant.
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    void check_same_ring(const Polynomial& other) const {
        if (vars_ != other.vars_)
            throw InvalidArgument("polynomials live in different rings");
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

// Substitution of a single variable by an affine replacement (total degree
// <= 1, not involving the variable). The result lives in the smaller ring
// with `var` removed; this is how hyperplane slices are realized.
inline Polynomial substitute_affine(const Polynomial& p, std::size_t var,
                                    const Polynomial& replacement) {
    if (var >= p.num_vars()) throw InvalidArgument("substitute_affine: no such variable");
    if (replacement.vars() != p.vars())
        throw InvalidSubstitution("replacement must live in the same ring");
    if (replacement.degree() > 1)
        throw InvalidSubstitution("replacement must have total degree <= 1");
    if (replacement.uses_var(var))
        throw InvalidSubstitution("replacement must not involve the substituted variable");

    std::vector<std::string> small_vars;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < p.num_vars(); ++i) {
        if (i == var) continue;
        small_vars.push_back(p.vars()[i]);
        keep.push_back(i);
    }

    // Images in the smaller ring: kept variables map to themselves, the
    // substituted one to the replacement re-expressed without it.
    std::vector<Polynomial> images(p.num_vars(), Polynomial(small_vars));
    for (std::size_t j = 0; j < keep.size(); ++j)
        images[keep[j]] = Polynomial::variable(small_vars, j);
    Polynomial repl_small(small_vars);
    for (const auto& [m, c] : replacement.terms()) {
        Monomial nm(small_vars.size(), 0);
        for (std::size_t j = 0; j < keep.size(); ++j) nm[j] = m.at(keep[j]);
        repl_small.add_term(nm, c);
    }
    images[var] = repl_small;
    return p.compose(small_vars, images);
}

inline std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // Print grevlex-descending: highest degree first, stable and readable.
    auto ts = sorted_terms(MonomialOrder::grevlex());
    std::string out;
    bool first = true;
    for (const auto& [m, c] : ts) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out += eudata::to_string(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += eudata::to_string(a) + "*" + mono;
        }
    }
    return out;
}

}  // namespace eudata
