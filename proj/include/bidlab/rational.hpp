#pragma once

// Exact scalars. Integers and rationals are boost::multiprecision's cpp_int and
// cpp_rational; cpp_rational keeps gcd(|num|, den) = 1 with den > 0 after every
// operation, which is the canonical form the rest of the library relies on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "bidlab/errors.hpp"

namespace bidlab {

// Expression templates are off so that results are plain values (std::min/std::max, auto).
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// n/d for any nonzero d (the two-argument constructor rejects negative denominators).
inline Rational ratio(const Integer& n, const Integer& d) {
    if (d == 0) throw DomainError("zero denominator");
    return d < 0 ? Rational(Integer(-n), Integer(-d)) : Rational(n, d);
}

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline Integer floor_int(const Rational& q) {
    Integer n = num(q), d = den(q);
    Integer f = n / d;  // truncates toward zero
    if (n < 0 && f * d != n) --f;
    return f;
}

inline Integer ceil_int(const Rational& q) {
    Integer f = floor_int(q);
    return Rational(f) == q ? f : f + 1;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / gcd(a, b) * b);
}

inline Integer ipow(const Integer& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

/// Nonnegative residue of a modulo m (m > 0).
inline Integer mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

inline std::int64_t to_i64(const Integer& v) {
    if (v > Integer(INT64_MAX) || v < Integer(INT64_MIN))
        throw DomainError("integer does not fit in 64 bits: " + v.str());
    return v.convert_to<std::int64_t>();
}

/// "3", "-7/4".
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto is_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto to_int = [](std::string_view s) {
        if (!s.empty() && s[0] == '+') s.remove_prefix(1);
        return Integer(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw ParseError("not a rational number: '" + std::string(text) + "'");
        return Rational(to_int(text));
    }
    auto n = trim(text.substr(0, slash));
    auto d = trim(text.substr(slash + 1));
    if (!is_int(n) || !is_int(d)) throw ParseError("not a rational number: '" + std::string(text) + "'");
    Integer di = to_int(d);
    if (di == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return ratio(to_int(n), di);
}

}  // namespace bidlab
