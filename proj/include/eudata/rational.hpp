#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "eudata/errors.hpp"

namespace eudata {

// Exact arithmetic everywhere. cpp_rational keeps values reduced with a
// positive denominator, which is exactly the invariant we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_num(const Rational& r) { return numerator(r); }
inline Integer rational_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "a" or "a/b" with optional sign, arbitrary precision.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&](const char* why) -> ParseError {
        return ParseError(0, std::string(why) + ": '" + text + "'");
    };
    if (text.empty()) throw bad("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw bad("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw bad("malformed rational literal");
    }
}

inline Rational pow_rational(const Rational& base, unsigned exp) {
    Rational acc(1);
    Rational b = base;
    while (exp > 0) {
        if (exp & 1u) acc *= b;
        b *= b;
        exp >>= 1u;
    }
    return acc;
}

// A point with exact rational coordinates.
using RationalPoint = std::vector<Rational>;

inline std::string to_string(const RationalPoint& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += to_string(p[i]);
    }
    out += ")";
    return out;
}

}  // namespace eudata
