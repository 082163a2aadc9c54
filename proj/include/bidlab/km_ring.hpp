#pragma once

// D = k + m inside T = k(X)[Y]_(Y), m = Y T. Elements are rational functions in X, Y whose denominator
// does not vanish at Y = 0.

#include <optional>
#include <string>
#include <vector>

#include "bidlab/errors.hpp"
#include "bidlab/linear_algebra.hpp"
#include "bidlab/rational_function.hpp"

namespace bidlab {

inline ContextPtr km_context() {
    static const ContextPtr ctx = make_context({"X", "Y"});
    return ctx;
}

inline RationalFunction km_element(std::string_view text) { return RationalFunction::parse(km_context(), text); }

namespace detail {

constexpr std::size_t kY = 1;

/// (num(X, 0), den(X, 0)); throws when the element is not in T.
inline std::pair<Polynomial, Polynomial> at_y_zero(const RationalFunction& e) {
    if (e.context_ptr()->names != std::vector<std::string>{"X", "Y"}) throw ContextError("expected variables X, Y");
    Polynomial d0 = e.den().coefficient_in(kY, 0);
    if (d0.is_zero()) throw DomainError(e.str() + " has a pole along Y = 0");
    return {e.num().coefficient_in(kY, 0), d0};
}

}  // namespace detail

inline bool km_in_T(const RationalFunction& e) {
    if (e.context_ptr()->names != std::vector<std::string>{"X", "Y"}) throw ContextError("expected variables X, Y");
    return !e.den().coefficient_in(detail::kY, 0).is_zero();
}

/// e(X, 0) is a constant.
inline bool km_in_D(const RationalFunction& e) {
    auto [n0, d0] = detail::at_y_zero(e);
    if (n0.is_zero()) return true;
    auto q = exact_divide(n0, d0);
    return q && q->is_constant();
}

inline bool km_in_m(const RationalFunction& e) { return detail::at_y_zero(e).first.is_zero(); }

/// Y-adic order and the coefficient of Y^order, a function of X alone.
struct LowestTerm {
    std::int64_t order;
    RationalFunction coefficient;
};

inline LowestTerm lowest_y_term(const RationalFunction& e) {
    if (e.is_zero()) throw DomainError("zero has no lowest term");
    auto [n0, d0] = detail::at_y_zero(e);
    (void)n0;
    std::int64_t v = e.num().min_degree_in(detail::kY);
    return {v, RationalFunction(e.num().coefficient_in(detail::kY, v), d0)};
}

/// Is `target` in the k-span of `fs` (functions of X)? Clears denominators and compares coefficient
/// vectors.
inline bool in_k_span(const std::vector<RationalFunction>& fs, const RationalFunction& target) {
    Polynomial L = target.den();
    for (const auto& f : fs) L = multivar_lcm(L, f.den());
    auto cleared = [&](const RationalFunction& f) {
        auto s = exact_divide(L, f.den());
        if (!s) throw EngineError("lcm not divisible by denominator");
        return f.num() * *s;
    };
    std::vector<Polynomial> polys;
    for (const auto& f : fs) polys.push_back(cleared(f));
    Polynomial t = cleared(target);
    std::vector<Monomial> cols;
    auto collect = [&](const Polynomial& p) {
        for (const auto& [m, c] : p.terms())
            if (std::find(cols.begin(), cols.end(), m) == cols.end()) cols.push_back(m);
    };
    for (const auto& p : polys) collect(p);
    collect(t);
    auto row = [&](const Polynomial& p) {
        Row r(cols.size(), Rational(0));
        for (const auto& [m, c] : p.terms()) r[std::find(cols.begin(), cols.end(), m) - cols.begin()] = c;
        return r;
    };
    Matrix rows;
    for (const auto& p : polys) rows.push_back(row(p));
    if (rows.empty()) return t.is_zero();
    return in_rowspace(rows, row(t));
}

struct KmProbeReport {
    std::string a1, a2;
    std::int64_t h_lo = -5, h_hi = 5, h_star = 7;
    bool a1_outside = false;                      // a1 not in (a1) & (a2)
    std::vector<std::pair<std::int64_t, bool>> members;  // a1*Y*X^h in the intersection
    std::size_t samples = 0;                      // grid elements with both quotients in m
    bool samples_ok = true;                       // ... all of which lie in the intersection
    bool target_in_ideal = false;                 // a1*Y*X^h* lies in the intersection
    bool refutation = false;                      // ... but not in the ideal of the grid elements
    std::string refutation_detail;

    bool passed() const {
        return a1_outside && samples_ok && target_in_ideal && refutation &&
               std::all_of(members.begin(), members.end(), [](const auto& m) { return m.second; });
    }
};

/// f in (a)D.
inline bool km_in_principal(const RationalFunction& f, const RationalFunction& a) {
    auto q = f / a;
    return km_in_T(q) && km_in_D(q);
}

inline KmProbeReport km_intersection_probe(const RationalFunction& a1, const RationalFunction& a2, std::int64_t h_lo = -5,
                                           std::int64_t h_hi = 5, std::int64_t h_star = 7) {
    for (const auto* a : {&a1, &a2})
        if (a->is_zero() || !km_in_T(*a) || !km_in_m(*a)) throw PreconditionError(a->str() + " is not a nonzero nonunit of D");
    if (km_in_principal(a1, a2) || km_in_principal(a2, a1))
        throw PreconditionError(a1.str() + " and " + a2.str() + " are comparable");
    const auto ctx = km_context();
    auto X = [&](std::int64_t h) {
        return h >= 0 ? RationalFunction(Polynomial::variable(ctx, "X", h))
                      : RationalFunction(Polynomial::constant(ctx, 1), Polynomial::variable(ctx, "X", -h));
    };
    const RationalFunction Y(Polynomial::variable(ctx, "Y"));
    auto in_I = [&](const RationalFunction& f) { return km_in_principal(f, a1) && km_in_principal(f, a2); };

    KmProbeReport r;
    r.a1 = a1.str();
    r.a2 = a2.str();
    r.h_lo = h_lo;
    r.h_hi = h_hi;
    r.h_star = h_star;
    r.a1_outside = !in_I(a1);

    // (i) grid elements Y^e X^h u with both quotients in m
    const std::vector<RationalFunction> units = {RationalFunction(Polynomial::constant(ctx, 1)),
                                                 km_element("(1+X)/(1+X+Y)"), km_element("1+Y")};
    for (std::int64_t e = 1; e <= 3; ++e)
        for (std::int64_t h = h_lo; h <= h_hi; ++h)
            for (const auto& u : units) {
                RationalFunction f = Y * X(h) * u;
                for (std::int64_t k = 1; k < e; ++k) f = f * Y;
                auto q1 = f / a1, q2 = f / a2;
                if (!km_in_T(q1) || !km_in_T(q2) || !km_in_m(q1) || !km_in_m(q2)) continue;
                ++r.samples;
                if (!in_I(f)) r.samples_ok = false;
            }

    // (ii) a1 * m-elements with arbitrary X-powers
    std::vector<RationalFunction> gens;
    for (std::int64_t h = h_lo; h <= h_hi; ++h) {
        RationalFunction b = a1 * Y * X(h);
        r.members.emplace_back(h, in_I(b));
        gens.push_back(b);
    }

    // (iii) the grid elements cannot generate a1*Y*X^h*: D-multipliers are constants at lowest Y-order
    RationalFunction target = a1 * Y * X(h_star);
    r.target_in_ideal = in_I(target);
    auto t = lowest_y_term(target);
    std::vector<RationalFunction> lowest;
    bool applicable = true;
    for (const auto& g : gens) {
        auto lt = lowest_y_term(g);
        if (lt.order < t.order) applicable = false;
        if (lt.order == t.order) lowest.push_back(lt.coefficient);
    }
    if (!applicable) {
        r.refutation_detail = "a proposed generator has lower Y-order than the target";
    } else if (in_k_span(lowest, t.coefficient)) {
        r.refutation_detail = "lowest coefficient " + t.coefficient.str() + " lies in the k-span";
    } else {
        r.refutation = true;
        r.refutation_detail = "lowest coefficient " + t.coefficient.str() + " of Y^" + std::to_string(t.order) +
                              " is outside the k-span of " + std::to_string(lowest.size()) + " generator coefficients";
    }
    return r;
}

}  // namespace bidlab
