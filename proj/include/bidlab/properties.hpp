#pragma once

// Seeded property suites over random finitely generated monomial ideals. Each property reports the
// first counterexample it meets, so a failing suite can be replayed from (seed, ring, property).

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bidlab/bid.hpp"
#include "bidlab/ideal.hpp"

namespace bidlab {

struct PropertyOutcome {
    PropertyOutcome() = default;
    PropertyOutcome(std::string n, std::string r) : name(std::move(n)), ring(std::move(r)) {}

    std::string name;
    std::string ring;
    std::size_t samples = 0;
    std::size_t checks = 0;
    std::optional<std::string> counterexample;

    bool passed() const { return !counterexample; }
};

struct PropertyRing {
    std::string name;
    Ctx ctx;
    Window window;
};

namespace detail {

inline std::vector<std::vector<Exponent>> random_ideals(const Ctx& ctx, std::size_t count, const Window& w,
                                                        std::mt19937_64& rng) {
    auto pool = detail::nonzero_members(*ctx, std::max(Rational(1), w.bound / 2), w.cap);
    if (pool.empty()) throw EngineError("no nonzero members below the window");
    std::vector<std::vector<Exponent>> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t k = 1 + rng() % 3;
        std::vector<Exponent> gens;
        for (std::size_t j = 0; j < k; ++j) gens.push_back(pool[rng() % pool.size()]);
        out.push_back(reduce_generators(*ctx, gens));
    }
    return out;
}

/// `count` lattice points from the box [lo, hi], drawn with replacement.
inline std::vector<Exponent> random_points(const Ctx& ctx, const Exponent& lo, const Rational& hi, const Integer& cap,
                                           std::size_t count, std::mt19937_64& rng) {
    auto g = ctx->monoid.grid(lo, hi, cap);
    std::vector<Exponent> out;
    if (g.empty()) return out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(g[rng() % g.size()]);
    return out;
}

inline Exponent lowered(const std::vector<Exponent>& gens, const Rational& by) {
    Exponent lo = coordwise_min(gens);
    for (auto& v : lo.c) v -= by;
    return lo;
}

inline std::string case_str(const std::vector<Exponent>& I, const Exponent& x) { return "I = (" + join(I) + "), x = " + x.str(); }

inline std::string gens_str(const std::vector<Exponent>& g) { return "(" + join(g) + ")"; }

}  // namespace detail

/// xi closure laws: translation, monotonicity, extensivity, w-positive implies
/// xi-positive.
inline std::vector<PropertyOutcome> xi_properties(const PropertyRing& R, const std::vector<std::vector<Exponent>>& ideals,
                                                  std::mt19937_64& rng, std::size_t points = 3) {
    const auto& ctx = R.ctx;
    const auto& w = R.window;
    TraceCatalog catalog(ctx, w, TraceCatalog::default_kmax(*ctx));
    auto xi = [&](const std::vector<Exponent>& I, const Exponent& x) { return xi_closure(ctx, I, x, w, &catalog).member; };
    PropertyOutcome tr{"xi translation", R.name}, mono{"xi monotone", R.name}, ext{"xi extensive", R.name},
        wxi{"w implies xi", R.name};
    auto shifts = detail::nonzero_members(*ctx, std::max(Rational(1), w.bound / 4), w.cap);
    auto pool = detail::nonzero_members(*ctx, std::max(Rational(1), w.bound / 2), w.cap);
    for (const auto& I : ideals) {
        for (auto* o : {&tr, &mono, &ext, &wxi}) ++o->samples;
        auto xs = detail::random_points(ctx, detail::lowered(I, w.bound / 2), w.bound / 2, w.cap, points, rng);

        const Exponent& s = shifts[rng() % shifts.size()];
        std::vector<Exponent> Is;
        for (const auto& g : I) Is.push_back(g + s);
        std::vector<Exponent> J = I;
        J.push_back(pool[rng() % pool.size()]);
        J = reduce_generators(*ctx, J);

        for (const auto& x : xs) {
            bool in = xi(I, x);
            ++tr.checks;
            if (!tr.counterexample && in != xi(Is, x + s))
                tr.counterexample = detail::case_str(I, x) + ", shift " + s.str();
            ++mono.checks;
            if (!mono.counterexample && in && !xi(J, x))
                mono.counterexample = detail::case_str(I, x) + ", larger ideal " + detail::gens_str(J);
            ++wxi.checks;
            if (!wxi.counterexample && !in && w_closure(ctx, I, x, w).member) wxi.counterexample = detail::case_str(I, x);
        }
        const Exponent& g = I[rng() % I.size()];
        Exponent y = g + pool[rng() % pool.size()];
        ++ext.checks;
        if (!ext.counterexample && (!xi(I, g) || !xi(I, y))) ext.counterexample = detail::case_str(I, y);
    }
    return {tr, mono, ext, wxi};
}

/// J^-1 = (1/a) * intersection of the (a/a_i), a the product of the generators.
inline PropertyOutcome inverse_identity(const PropertyRing& R, const std::vector<std::vector<Exponent>>& ideals) {
    PropertyOutcome o{"inverse identity", R.name};
    for (const auto& J : ideals) {
        ++o.samples;
        Exponent a(R.ctx->dim());
        for (const auto& g : J) a += g;
        std::vector<Exponent> parts;
        for (const auto& g : J) parts.push_back(a - g);
        auto inv = ideal_inverse(R.ctx, J);
        auto inter = intersect_principals(R.ctx, parts);
        Exponent lo(R.ctx->dim());
        for (auto& v : lo.c) v = -R.window.bound;
        for (const auto& x : R.ctx->monoid.grid(lo, R.window.bound, R.window.cap)) {
            ++o.checks;
            if (inv.contains(x) != inter.contains(x + a)) {
                o.counterexample = detail::case_str(J, x);
                return o;
            }
        }
    }
    return o;
}

/// v is extensive, idempotent and monotone on window generators.
inline std::vector<PropertyOutcome> v_axioms(const PropertyRing& R, const std::vector<std::vector<Exponent>>& ideals,
                                             std::mt19937_64& rng) {
    PropertyOutcome ext{"v extensive", R.name}, idem{"v idempotent", R.name}, mono{"v monotone", R.name};
    auto pool = detail::nonzero_members(*R.ctx, std::max(Rational(1), R.window.bound / 2), R.window.cap);
    for (const auto& I : ideals) {
        for (auto* o : {&ext, &idem, &mono}) ++o->samples;
        auto v = v_closure(R.ctx, I, R.window);
        auto vg = exact_generators(v.filter, R.window).gens;
        ++ext.checks;
        for (const auto& g : I)
            if (!ext.counterexample && !v.filter.contains(g)) ext.counterexample = detail::gens_str(I) + " misses " + g.str();
        ++idem.checks;
        auto vv = exact_generators(v_closure(R.ctx, vg, R.window).filter, R.window).gens;
        if (!idem.counterexample && vv != vg)
            idem.counterexample = detail::gens_str(I) + ": " + detail::gens_str(vg) + " then " + detail::gens_str(vv);
        std::vector<Exponent> J = I;
        J.push_back(pool[rng() % pool.size()]);
        auto Jv = v_closure(R.ctx, reduce_generators(*R.ctx, J), R.window);
        ++mono.checks;
        for (const auto& g : vg)
            if (!mono.counterexample && !Jv.filter.contains(g))
                mono.counterexample = detail::gens_str(I) + " inside " + detail::gens_str(J) + ", closure misses " + g.str();
    }
    return {ext, idem, mono};
}

/// Tr(Tr(I)) = Tr(I).
inline PropertyOutcome trace_idempotent(const PropertyRing& R, const std::vector<std::vector<Exponent>>& ideals) {
    PropertyOutcome o{"trace idempotent", R.name};
    for (const auto& I : ideals) {
        ++o.samples;
        ++o.checks;
        auto t = exact_generators(trace(R.ctx, I), R.window).gens;
        auto tt = exact_generators(trace(R.ctx, t), R.window).gens;
        if (t != tt) {
            o.counterexample = detail::gens_str(I) + ": " + detail::gens_str(t) + " then " + detail::gens_str(tt);
            return o;
        }
    }
    return o;
}

inline PropertyOutcome xi_equals_w(const PropertyRing& R, std::size_t samples, std::uint64_t seed) {
    PropertyOutcome o{"xi equals w", R.name};
    auto r = xi_equals_w_probe(R.ctx, samples, R.window.bound, seed, R.window.cap);
    o.samples = r.ideals_tested;
    o.checks = r.pairs_tested;
    if (!r.pass) o.counterexample = detail::case_str(*r.ideal, *r.x) + ", xi witness " + detail::gens_str(r.xi_witness);
    return o;
}

/// The full battery: closure properties on {2,3}, {3,4,5} and two even-degree variables; xi = w on
/// the integrally closed rings N and two even-degree variables.
inline std::vector<PropertyOutcome> run_property_suite(std::uint64_t seed, std::size_t samples) {
    const std::vector<PropertyRing> rings = {
        {"<2,3>", make_ctx(NumericalSemigroup({2, 3})), {12, 1}},
        {"<3,4,5>", make_ctx(NumericalSemigroup({3, 4, 5})), {12, 1}},
        {"even-degree(2)", make_ctx(EvenDegree(2)), {4, 1}},
    };
    std::vector<PropertyOutcome> out;
    for (std::size_t i = 0; i < rings.size(); ++i) {
        std::mt19937_64 rng(seed * 1000003 + i);
        auto ideals = detail::random_ideals(rings[i].ctx, samples, rings[i].window, rng);
        for (auto& o : xi_properties(rings[i], ideals, rng)) out.push_back(std::move(o));
        out.push_back(inverse_identity(rings[i], ideals));
        for (auto& o : v_axioms(rings[i], ideals, rng)) out.push_back(std::move(o));
        out.push_back(trace_idempotent(rings[i], ideals));
    }
    out.push_back(xi_equals_w({"N", make_ctx(NumericalSemigroup({1})), {12, 1}}, samples, seed));
    out.push_back(xi_equals_w({"even-degree(2)", make_ctx(EvenDegree(2)), {6, 1}}, samples, seed));
    return out;
}

}  // namespace bidlab
