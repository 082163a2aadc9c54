#pragma once

// Test-only helpers: seeded generators and brute-force oracles that share no code paths with the
// library's own algorithms beyond the value types.

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "bidlab/exponent.hpp"
#include "bidlab/polynomial.hpp"

namespace bidlab::testing {

inline Polynomial random_poly(const ContextPtr& ctx, std::mt19937& rng, int max_deg, int max_terms, int coef = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms), deg(0, max_deg), c(-coef, coef);
    Polynomial p(ctx);
    while (p.is_zero()) {
        int n = nterms(rng);
        for (int t = 0; t < n; ++t) {
            Monomial m(ctx->size(), 0);
            int budget = deg(rng);
            for (int k = 0; k < budget; ++k) m[std::uniform_int_distribution<std::size_t>(0, ctx->size() - 1)(rng)] += 1;
            int v = c(rng);
            p += Polynomial::term(ctx, m, v == 0 ? 1 : v);
        }
    }
    return p;
}

/// All polynomials with total degree <= deg and coefficients in {-1, 0, 1} (excluding 0).
inline std::vector<Polynomial> small_polys(const ContextPtr& ctx, int deg) {
    std::vector<Monomial> monos;
    Monomial m(ctx->size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == ctx->size()) {
            monos.push_back(m);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m[i] = e;
            rec(i + 1, left - e);
        }
        m[i] = 0;
    };
    rec(0, deg);
    std::vector<Polynomial> out;
    std::vector<int> coef(monos.size(), -1);
    for (;;) {
        Polynomial p(ctx);
        for (std::size_t i = 0; i < monos.size(); ++i)
            if (coef[i]) p += Polynomial::term(ctx, monos[i], coef[i]);
        if (!p.is_zero()) out.push_back(p);
        std::size_t i = 0;
        while (i < coef.size() && coef[i] == 1) coef[i++] = -1;
        if (i == coef.size()) break;
        ++coef[i];
    }
    return out;
}

/// Brute coin check: is p a nonnegative integer combination of coins?
inline bool coin_reachable(long p, const std::vector<long>& coins) {
    if (p < 0) return false;
    std::vector<bool> r(static_cast<std::size_t>(p) + 1, false);
    r[0] = true;
    for (long v = 1; v <= p; ++v)
        for (long c : coins)
            if (c <= v && r[static_cast<std::size_t>(v - c)]) {
                r[static_cast<std::size_t>(v)] = true;
                break;
            }
    return r[static_cast<std::size_t>(p)];
}

/// Root-family membership by brute combination search: clear denominators to b^n and use every coin
/// b^n, g*b^(n-m) for 1 <= m <= n.
inline bool root_member_brute(const Rational& x, long b, long g, unsigned n, bool unit = true) {
    Integer scale = ipow(Integer(b), n);
    Rational y = x * Rational(scale);
    if (!is_integer(y)) return false;
    std::vector<long> coins;
    if (unit) coins.push_back(to_i64(scale));
    for (unsigned m = 1; m <= n; ++m) coins.push_back(g * to_i64(ipow(Integer(b), n - m)));
    return coin_reachable(to_i64(num(y)), coins);
}

inline Exponent E(std::initializer_list<long> v) {
    Exponent e;
    for (long x : v) e.c.emplace_back(x);
    return e;
}

inline Exponent Q(long n, long d) { return Exponent::scalar(Rational(n, d)); }

inline std::vector<Exponent> ints(std::initializer_list<long> v) {
    std::vector<Exponent> out;
    for (long x : v) out.push_back(Exponent::scalar(x));
    return out;
}

}  // namespace bidlab::testing
