#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

// All arithmetic in this library is exact: arbitrary-precision integers for
// lattice data, rationals everywhere a division can occur.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Vec = std::vector<Int>;   // lattice vector, ambient rank = size()
using Mat = std::vector<Vec>;   // rows

inline int sign(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sign(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// gcd of all coordinates; 0 for the zero vector.
inline Int content(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    return g;
}

inline bool is_zero(const Vec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Int(0)); }

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vec scale(const Int& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Strict lexicographic order on integer vectors.
inline bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

/// First nonzero coordinate is positive. The zero vector is not lex-positive.
inline bool lex_positive(const Vec& v) {
    for (const Int& x : v) {
        if (x != 0) return x > 0;
    }
    return false;
}

/// v divided by the gcd of its coordinates, orientation preserved.
inline Vec primitive_vector(const Vec& v) {
    Int g = content(v);
    if (g == 0) throw std::invalid_argument("no primitive representative: zero vector");
    if (g == 1) return v;
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

inline bool is_primitive(const Vec& v) { return content(v) == 1; }

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

inline std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

/// Parses "p" or "p/q" with optional sign; q > 0 enforced by normalization.
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline Rat factorial_rat(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rat(f);
}

}  // namespace toric
