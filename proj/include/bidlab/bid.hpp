#pragma once

// BID / SBID witness search and the probes around the local characterization.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bidlab/errors.hpp"
#include "bidlab/ideal.hpp"
#include "bidlab/parallel.hpp"

namespace bidlab {

inline bool pairwise_incomparable(const Ctx& ctx, const std::vector<Exponent>& exps) {
    if (exps.size() < 2) throw PreconditionError("incomparability needs at least two elements");
    for (std::size_t i = 0; i < exps.size(); ++i)
        for (std::size_t j = 0; j < exps.size(); ++j)
            if (i != j && ctx->divides(exps[i], exps[j])) return false;
    return true;
}

struct Violation {
    std::vector<Exponent> tuple;
    FinitenessVerdict verdict;
    bool bid = false;  // FG_NON_PRINCIPAL; otherwise a PRINCIPAL intersection (SBID only)
};

struct WitnessReport {
    std::string ring;
    std::size_t tuple_size = 2;
    Rational exponent_bound;
    Rational classify_bound;
    std::size_t tuples_examined = 0;
    std::vector<Violation> violations;
    std::vector<std::pair<std::vector<Exponent>, FinitenessVerdict>> inconclusive;

    bool bid_violated() const {
        return std::any_of(violations.begin(), violations.end(), [](const Violation& v) { return v.bid; });
    }
    bool sbid_violated() const { return !violations.empty(); }
};

/// Height added to the exponent bound so that classification windows of the searched tuples are
/// exact.
inline Rational classify_margin(const MonoidRingCtx& ctx) { return ctx.monoid.exact_margin().value_or(Rational(0)); }

namespace detail {

inline bool tuple_less(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
    if (a.back() != b.back()) return canonical_less(a.back(), b.back());
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
}

inline void antichains(const MonoidRingCtx& ctx, const std::vector<Exponent>& pool, std::size_t size, std::size_t start,
                       std::vector<Exponent>& cur, std::vector<std::vector<Exponent>>& out) {
    if (cur.size() == size) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        bool ok = std::all_of(cur.begin(), cur.end(), [&](const Exponent& c) {
            return !ctx.divides(c, pool[i]) && !ctx.divides(pool[i], c);
        });
        if (!ok) continue;
        cur.push_back(pool[i]);
        antichains(ctx, pool, size, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Exponent> nonzero_members(const MonoidRingCtx& ctx, const Rational& bound, const Integer& cap) {
    std::vector<Exponent> out;
    for (auto& x : ctx.monoid.enumerate_up_to(bound, cap))
        if (!x.is_zero()) out.push_back(std::move(x));
    return out;
}

}  // namespace detail

/// Pairwise-incomparable tuples of window members of M \ {0}, ordered by largest element and then
/// lexicographically.
inline std::vector<std::vector<Exponent>> incomparable_tuples(const Ctx& ctx, std::size_t size, const Rational& bound,
                                                              const Integer& cap) {
    auto pool = detail::nonzero_members(*ctx, bound, cap);
    std::vector<Exponent> cur;
    std::vector<std::vector<Exponent>> out;
    detail::antichains(*ctx, pool, size, 0, cur, out);
    std::sort(out.begin(), out.end(), detail::tuple_less);
    return out;
}

inline WitnessReport witness_search(const Ctx& ctx, std::size_t tuple_size, const Rational& exponent_bound,
                                    const Integer& cap = 1) {
    if (tuple_size < 2) throw PreconditionError("tuple size must be at least 2");
    WitnessReport r;
    r.ring = ctx->monoid.describe();
    r.tuple_size = tuple_size;
    r.exponent_bound = exponent_bound;
    r.classify_bound = exponent_bound + classify_margin(*ctx);
    auto tuples = incomparable_tuples(ctx, tuple_size, exponent_bound, cap);
    r.tuples_examined = tuples.size();
    auto verdicts = parallel_map(tuples, [&](const std::vector<Exponent>& t) {
        return classify_finiteness(intersect_principals(ctx, t), r.classify_bound);
    });
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        const auto& v = verdicts[i];
        if (v.kind == VerdictKind::FgNonPrincipal) r.violations.push_back({tuples[i], v, true});
        if (v.kind == VerdictKind::Principal) r.violations.push_back({tuples[i], v, false});
        if (v.kind == VerdictKind::Inconclusive) r.inconclusive.emplace_back(tuples[i], v);
    }
    return r;
}

struct TLocalOutcome {
    bool none_found = true;
    Rational bound;
    std::vector<Exponent> maximal_generators;
    std::optional<std::vector<Exponent>> gv_ideal;  // a proper GV ideal, when found
    std::vector<std::pair<std::vector<Exponent>, Exponent>> candidate_witnesses;
};

/// Looks for a proper monomial GV ideal. Any proper monomial ideal in the window lies inside the
/// window ideal of the maximal ideal, whose inverse is then contained in theirs, so testing that
/// single ideal covers them all.
inline TLocalOutcome t_local_probe(const Ctx& ctx, const Rational& bound, const Integer& cap = 1) {
    if (!ctx->localized) throw PreconditionError("t-locality probe needs a localized ring");
    TLocalOutcome out;
    out.bound = bound;
    auto m = minimal_generators_up_to(IdealFilter::maximal(ctx), bound, cap);
    out.maximal_generators = m.gens;
    if (m.gens.empty()) return out;
    auto gv = is_GV(ctx, m.gens, {bound, cap});
    if (gv.gv) {
        out.none_found = false;
        out.gv_ideal = m.gens;
        return out;
    }
    if (m.gens.size() <= 6) {
        const std::size_t n = m.gens.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<Exponent> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) sub.push_back(m.gens[i]);
            auto w = is_GV(ctx, sub, {bound, cap});
            if (w.gv) throw EngineError("sub-ideal of a non-GV ideal reported GV");
            out.candidate_witnesses.emplace_back(sub, *w.witness);
        }
    }
    return out;
}

struct XiWOutcome {
    bool pass = true;
    Rational bound;
    std::size_t ideals_tested = 0;
    std::size_t pairs_tested = 0;
    std::optional<std::vector<Exponent>> ideal;
    std::optional<Exponent> x;
    std::vector<Exponent> xi_witness;
};

namespace detail {

inline std::vector<std::vector<Exponent>> probe_ideals(const Ctx& ctx, std::size_t samples, const Rational& bound,
                                                       const Integer& cap, std::uint64_t seed) {
    auto pool = nonzero_members(*ctx, bound, cap);
    std::vector<std::vector<Exponent>> out;
    if (pool.empty()) return out;
    // canonical small ideals: principal and two-generated, drawn from the lower half of the window
    auto small = nonzero_members(*ctx, std::max(Rational(1), bound / 2), cap);
    std::vector<Exponent> cur;
    for (std::size_t k = 1; k <= 2; ++k) {
        std::vector<std::vector<Exponent>> chunk;
        antichains(*ctx, small, k, 0, cur, chunk);
        std::sort(chunk.begin(), chunk.end(), tuple_less);
        out.insert(out.end(), chunk.begin(), chunk.end());
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        std::size_t k = 1 + rng() % 3;
        std::vector<Exponent> gens;
        for (std::size_t j = 0; j < k; ++j) gens.push_back(pool[rng() % pool.size()]);
        out.push_back(reduce_generators(*ctx, gens));
    }
    return out;
}

}  // namespace detail

/// First (I, x) with x in I_xi but not in I_w, over canonical small ideals and then seeded samples.
inline XiWOutcome xi_equals_w_probe(const Ctx& ctx, std::size_t sample_count, const Rational& bound,
                                    std::uint64_t seed = 1, const Integer& cap = 1) {
    XiWOutcome out;
    out.bound = bound;
    const Window w{bound, cap};
    TraceCatalog catalog(ctx, w, TraceCatalog::default_kmax(*ctx));
    for (const auto& I : detail::probe_ideals(ctx, sample_count, bound, cap, seed)) {
        ++out.ideals_tested;
        Exponent lo = coordwise_min(I);
        for (auto& v : lo.c) v -= bound;
        MonomialIdeal ideal(ctx, I);
        for (const auto& x : ctx->monoid.grid(lo, bound, cap)) {
            if (ideal.contains(x)) continue;
            ++out.pairs_tested;
            auto colon = IdealFilter::colon(ctx, ideal.generators(), x, true);
            auto C = exact_generators(colon, w);
            // w implies xi, so only w-negative points can separate them
            if (detail::w_given_colon(ctx, C, w).member) continue;
            auto xi = detail::xi_given_colon(ctx, colon, C, w, &catalog);
            if (xi.member) {
                out.pass = false;
                out.ideal = I;
                out.x = x;
                out.xi_witness = xi.witness;
                return out;
            }
        }
    }
    return out;
}

}  // namespace bidlab
