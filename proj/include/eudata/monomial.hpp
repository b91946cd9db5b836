#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "eudata/errors.hpp"

namespace eudata {

// Exponent vector; its length always equals the ambient variable count of
// the polynomial that owns it.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

// Quotient a/b; caller must make sure b divides a.
inline Monomial monomial_div(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// A total monomial order compatible with multiplication. Term orders are a
// parameter of operations; polynomial storage is order-independent.
struct MonomialOrder {
    enum class Kind { lex, grevlex, elimination_block };

    Kind kind = Kind::grevlex;
    // For elimination_block: the first `block` variables are eliminated.
    std::size_t block = 0;

    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder elimination(std::size_t k) { return {Kind::elimination_block, k}; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

    // Strict comparison: returns true when a comes before b (a < b), i.e. b
    // is the larger monomial under the order.
    bool less(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::lex: return lex_cmp(a, b, 0, a.size()) < 0;
            case Kind::grevlex: return grevlex_cmp(a, b, 0, a.size()) < 0;
            case Kind::elimination_block: {
                int c = grevlex_cmp(a, b, 0, block);
                if (c != 0) return c < 0;
                return grevlex_cmp(a, b, block, a.size()) < 0;
            }
        }
        return false;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

private:
    static int lex_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static int grevlex_cmp(const Monomial& a, const Monomial& b, std::size_t lo,
                           std::size_t hi) {
        int da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        // Equal degree: smaller exponent in the rightmost differing slot wins.
        for (std::size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }
};

}  // namespace eudata
