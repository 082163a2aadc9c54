#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "bidlab/errors.hpp"
#include "bidlab/rational.hpp"

namespace bidlab {

/// Exponent vector of a monomial; entries may be negative or fractional.
struct Exponent {
    std::vector<Rational> c;

    Exponent() = default;
    explicit Exponent(std::size_t dim) : c(dim, Rational(0)) {}
    explicit Exponent(std::vector<Rational> v) : c(std::move(v)) {}
    Exponent(std::initializer_list<Rational> v) : c(v) {}

    static Exponent scalar(const Rational& v) { return Exponent{v}; }
    static Exponent unit(std::size_t dim, std::size_t i, const Rational& v = 1) {
        Exponent e(dim);
        e.c[i] = v;
        return e;
    }

    std::size_t dim() const { return c.size(); }
    const Rational& operator[](std::size_t i) const { return c[i]; }
    Rational& operator[](std::size_t i) { return c[i]; }

    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](const Rational& v) { return v == 0; });
    }

    Rational sum() const {
        Rational s = 0;
        for (const auto& v : c) s += v;
        return s;
    }

    Rational max_coord() const { return *std::max_element(c.begin(), c.end()); }
    Rational min_coord() const { return *std::min_element(c.begin(), c.end()); }

    Integer common_denominator() const {
        Integer l = 1;
        for (const auto& v : c) l = lcm(l, den(v));
        return l;
    }

    /// Same vector padded with zeros to `dim` coordinates.
    Exponent lifted(std::size_t dim) const {
        if (dim < c.size()) throw DomainError("cannot lift exponent to a smaller dimension");
        Exponent e(dim);
        std::copy(c.begin(), c.end(), e.c.begin());
        return e;
    }

    Exponent& operator+=(const Exponent& o) {
        check_dim(o);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    Exponent& operator-=(const Exponent& o) {
        check_dim(o);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
        return *this;
    }
    Exponent& operator*=(const Rational& s) {
        for (auto& v : c) v *= s;
        return *this;
    }
    friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
    friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
    friend Exponent operator*(Exponent a, const Rational& s) { return a *= s; }
    friend Exponent operator-(Exponent a) {
        for (auto& v : a.c) v = -v;
        return a;
    }

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.c == b.c; }
    friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }

    /// Plain lexicographic order, for use as a map key.
    friend bool operator<(const Exponent& a, const Exponent& b) { return a.c < b.c; }

    bool leq(const Exponent& o) const {
        check_dim(o);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] > o.c[i]) return false;
        return true;
    }

    void check_dim(const Exponent& o) const {
        if (o.c.size() != c.size())
            throw DomainError("exponent dimension mismatch: " + std::to_string(c.size()) + " vs " +
                              std::to_string(o.c.size()));
    }

    /// "2/3" in dimension one, "(1,1,0)" otherwise.
    std::string str() const {
        if (c.size() == 1) return to_string(c[0]);
        std::string out = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ",";
            out += to_string(c[i]);
        }
        return out + ")";
    }

    static Exponent parse(std::string_view text) {
        while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
        while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
        if (!text.empty() && text.front() == '(') {
            if (text.back() != ')') throw ParseError("unbalanced parenthesis in exponent '" + std::string(text) + "'");
            text = text.substr(1, text.size() - 2);
        }
        if (text.empty()) throw ParseError("empty exponent");
        Exponent e;
        std::size_t start = 0;
        for (;;) {
            auto comma = text.find(',', start);
            e.c.push_back(parse_rational(text.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return e;
    }
};

/// Canonical order: ascending coordinate sum, ties broken by descending lexicographic order.
/// In dimension one this is the usual order on rationals.
inline bool canonical_less(const Exponent& a, const Exponent& b) {
    Rational sa = a.sum(), sb = b.sum();
    if (sa != sb) return sa < sb;
    return b.c < a.c;
}

inline void canonical_sort(std::vector<Exponent>& v) {
    // sort on precomputed sums; canonical_less recomputes them per comparison
    std::vector<std::pair<Rational, std::size_t>> keys;
    keys.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) keys.emplace_back(v[i].sum(), i);
    std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return v[b.second].c < v[a.second].c;
    });
    std::vector<Exponent> out;
    out.reserve(v.size());
    for (const auto& k : keys)
        if (out.empty() || out.back() != v[k.second]) out.push_back(std::move(v[k.second]));
    v = std::move(out);
}

inline Exponent coordwise_min(const std::vector<Exponent>& v) {
    if (v.empty()) throw DomainError("coordinatewise minimum of empty list");
    Exponent out = v.front();
    for (const auto& e : v) {
        out.check_dim(e);
        for (std::size_t i = 0; i < out.dim(); ++i) out.c[i] = std::min(out.c[i], e.c[i]);
    }
    return out;
}

inline Exponent coordwise_max(const std::vector<Exponent>& v) {
    if (v.empty()) throw DomainError("coordinatewise maximum of empty list");
    Exponent out = v.front();
    for (const auto& e : v) {
        out.check_dim(e);
        for (std::size_t i = 0; i < out.dim(); ++i) out.c[i] = std::max(out.c[i], e.c[i]);
    }
    return out;
}

inline std::string join(const std::vector<Exponent>& v, std::string_view sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].str();
    }
    return out;
}

}  // namespace bidlab
