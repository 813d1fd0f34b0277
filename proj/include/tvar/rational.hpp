#pragma once

// Exact arithmetic base types. Everything in this library computes over
// arbitrary-precision integers and rationals; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "tvar/errors.hpp"

namespace tvar {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

// True iff q is an integer; if so stores it in out.
inline bool as_integer(const Rat& q, Int& out) {
    if (den(q) != 1) return false;
    out = num(q);
    return true;
}

// Renders "p/q", or just "p" for integers.
inline std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

// Parses an optionally signed "p" or "p/q". Decimal notation is rejected so
// exactness is preserved at the boundary.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    std::string s = text;
    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        neg = (s[i] == '-');
        ++i;
    }
    std::string numpart, denpart;
    bool in_den = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (in_den) throw ParseError("bad rational '" + text + "'");
            in_den = true;
        } else if (c >= '0' && c <= '9') {
            (in_den ? denpart : numpart) += c;
        } else {
            throw ParseError("bad rational '" + text + "'");
        }
    }
    if (numpart.empty() || (in_den && denpart.empty()))
        throw ParseError("bad rational '" + text + "'");
    Int n(numpart);
    Int d = in_den ? Int(denpart) : Int(1);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    if (neg) n = -n;
    return Rat(n, d);
}

} // namespace tvar
