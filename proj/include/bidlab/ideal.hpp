#pragma once

// Monomial fractional ideals over a monoid ring and the closure calculus on them.
//
// An IdealFilter is the exponent set of a monomial (fractional) ideal given by a membership
// predicate. Finite generator lists are read off a window [floor, bound]^d on the lattice
// (1/cap)Z^d. Whether a window is exact depends on the monoid:
//
//  * numerical semigroup S: every filter built here contains [T, inf) for some T, and all its
//    minimal generators lie below T + m, so bound >= max(anchor) + max(Apery) suffices.
//  * root family: with p(x) the residue of x in Z/g, M = {x >= p(x)}. For the threshold kinds the
//    filter is a union over residues r of {x : p(x) = r, x >= T_r} where T_r is an anchor plus an
//    integer in [0, g), so it is generated by the T_r. Exact once the cap is divisible by every
//    anchor denominator and bound >= max(anchor) + g - 1. The maximal ideal is not of this kind.
//  * even degree: each filter is a finite union of translated orthants with a parity condition,
//    whose minimal points exceed the corner by at most one unit vector.
//  * finitely generated cones: no exactness claim.
//
// Closures are monomial-relative: "some finitely generated ideal" ranges over monomial ideals.
// For w this loses nothing in a graded ring; for xi it only gives a lower bound.

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bidlab/errors.hpp"
#include "bidlab/exponent.hpp"
#include "bidlab/monoid.hpp"

namespace bidlab {

struct MonoidRingCtx {
    ExponentMonoid monoid;
    bool localized = false;

    std::size_t dim() const { return monoid.dim(); }
    bool member(const Exponent& x) const { return monoid.member(x); }
    bool divides(const Exponent& a, const Exponent& b) const { return monoid.divides(a, b); }
};

using Ctx = std::shared_ptr<const MonoidRingCtx>;

inline Ctx make_ctx(ExponentMonoid m, bool localized = false) {
    return std::make_shared<const MonoidRingCtx>(MonoidRingCtx{std::move(m), localized});
}

/// Divisibility-minimal subset of gens, canonically sorted.
inline std::vector<Exponent> reduce_generators(const MonoidRingCtx& ctx, std::vector<Exponent> gens) {
    canonical_sort(gens);
    std::vector<Exponent> out;
    for (const auto& g : gens) {
        bool redundant = std::any_of(out.begin(), out.end(), [&](const Exponent& h) { return ctx.divides(h, g); });
        if (!redundant) out.push_back(g);
    }
    // a later h dividing an earlier g would need g - h in M with nonpositive sum, so g = h
    return out;
}

/// Finitely generated monomial ideal with a reduced generator list.
class MonomialIdeal {
public:
    MonomialIdeal(Ctx ctx, std::vector<Exponent> gens) : ctx_(std::move(ctx)) {
        if (gens.empty()) throw DomainError("monomial ideal needs a generator");
        for (const auto& g : gens)
            if (g.dim() != ctx_->dim()) throw DomainError("generator " + g.str() + " has wrong dimension");
        gens_ = reduce_generators(*ctx_, std::move(gens));
    }

    const Ctx& ctx() const { return ctx_; }
    const std::vector<Exponent>& generators() const { return gens_; }
    bool contains(const Exponent& x) const {
        return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return ctx_->divides(g, x); });
    }
    bool integral() const {
        return std::all_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return ctx_->member(g); });
    }
    std::string str() const { return "(" + join(gens_) + ")"; }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens_ == b.gens_; }

private:
    Ctx ctx_;
    std::vector<Exponent> gens_;
};

enum class FilterKind { Generated, Intersection, Inverse, Colon, Trace, Maximal };

inline const char* to_string(FilterKind k) {
    switch (k) {
        case FilterKind::Generated: return "GENERATED";
        case FilterKind::Intersection: return "INTERSECTION";
        case FilterKind::Inverse: return "INVERSE";
        case FilterKind::Colon: return "COLON";
        case FilterKind::Trace: return "TRACE";
        case FilterKind::Maximal: return "MAXIMAL";
    }
    return "?";
}

class IdealFilter {
public:
    static IdealFilter generated(Ctx ctx, std::vector<Exponent> gens) {
        return IdealFilter(std::move(ctx), FilterKind::Generated, std::move(gens));
    }
    static IdealFilter intersection(Ctx ctx, std::vector<Exponent> exps) {
        return IdealFilter(std::move(ctx), FilterKind::Intersection, std::move(exps));
    }
    static IdealFilter inverse(Ctx ctx, std::vector<Exponent> gens) {
        return IdealFilter(std::move(ctx), FilterKind::Inverse, std::move(gens));
    }
    /// {c : c + x in (gens)}, intersected with M when `integral`.
    static IdealFilter colon(Ctx ctx, std::vector<Exponent> gens, Exponent x, bool integral = false) {
        IdealFilter f(std::move(ctx), FilterKind::Colon, std::move(gens));
        if (x.dim() != f.ctx_->dim()) throw DomainError("colon shift " + x.str() + " has wrong dimension");
        f.shift_ = std::move(x);
        f.integral_ = integral;
        return f;
    }
    static IdealFilter trace(Ctx ctx, std::vector<Exponent> gens) {
        return IdealFilter(std::move(ctx), FilterKind::Trace, std::move(gens));
    }
    static IdealFilter maximal(Ctx ctx) {
        IdealFilter f(std::move(ctx), FilterKind::Maximal, {});
        return f;
    }

    const Ctx& ctx() const { return ctx_; }
    FilterKind kind() const { return kind_; }
    const std::vector<Exponent>& operands() const { return ops_; }
    const std::optional<Exponent>& shift() const { return shift_; }
    bool integral_colon() const { return integral_; }

    bool contains(const Exponent& x) const {
        const auto& M = *ctx_;
        switch (kind_) {
            case FilterKind::Generated:
                return std::any_of(ops_.begin(), ops_.end(), [&](const Exponent& g) { return M.divides(g, x); });
            case FilterKind::Intersection:
                return std::all_of(ops_.begin(), ops_.end(), [&](const Exponent& e) { return M.divides(e, x); });
            case FilterKind::Inverse:
                return std::all_of(ops_.begin(), ops_.end(), [&](const Exponent& g) { return M.member(x + g); });
            case FilterKind::Colon: {
                if (integral_ && !M.member(x)) return false;
                Exponent y = x + *shift_;
                return std::any_of(ops_.begin(), ops_.end(), [&](const Exponent& g) { return M.divides(g, y); });
            }
            case FilterKind::Trace:
                // x = g + v with v in I^-1
                return std::any_of(ops_.begin(), ops_.end(), [&](const Exponent& g) {
                    Exponent v = x - g;
                    return std::all_of(ops_.begin(), ops_.end(),
                                       [&](const Exponent& h) { return M.member(v + h); });
                });
            case FilterKind::Maximal:
                return !x.is_zero() && M.member(x);
        }
        return false;
    }

    /// Points whose coordinatewise minimum bounds every member from below and whose maximum drives
    /// the exact-window height.
    std::vector<Exponent> anchors() const {
        std::vector<Exponent> out;
        switch (kind_) {
            case FilterKind::Generated:
            case FilterKind::Intersection: out = ops_; break;
            case FilterKind::Inverse:
                for (const auto& g : ops_) out.push_back(-g);
                break;
            case FilterKind::Colon:
                for (const auto& g : ops_) out.push_back(g - *shift_);
                if (integral_) out.push_back(Exponent(ctx_->dim()));
                break;
            case FilterKind::Trace:
                for (const auto& g : ops_)
                    for (const auto& h : ops_) out.push_back(g - h);
                break;
            case FilterKind::Maximal: out = maximal_anchors(); break;
        }
        return out;
    }

    /// Coordinatewise lower bound for all members.
    Exponent floor() const {
        if (kind_ == FilterKind::Maximal) return Exponent(ctx_->dim());
        Exponent lo = coordwise_min(anchors());
        if (kind_ == FilterKind::Colon && integral_)
            for (auto& v : lo.c) v = std::max(v, Rational(0));
        return lo;
    }

    /// Threshold filters have finitely many minimal generators read off an exact window.
    bool threshold() const {
        if (ctx_->monoid.as<FinGenCone>()) return false;
        if (kind_ == FilterKind::Maximal && ctx_->monoid.as<RootFamily>()) return false;
        return true;
    }

    /// The same filter in the even-degree monoid with `extra` more variables.
    IdealFilter lifted(std::size_t extra) const {
        auto ed = ctx_->monoid.as<EvenDegree>();
        if (!ed) throw UnsupportedError("only even-degree filters can be lifted");
        Ctx big = make_ctx(EvenDegree(ed->dim() + extra), ctx_->localized);
        std::vector<Exponent> ops;
        for (const auto& e : ops_) ops.push_back(e.lifted(ed->dim() + extra));
        IdealFilter f(big, kind_, std::move(ops));
        if (shift_) f.shift_ = shift_->lifted(ed->dim() + extra);
        f.integral_ = integral_;
        return f;
    }

    std::string describe() const {
        std::string s = to_string(kind_);
        if (kind_ == FilterKind::Maximal) return s;
        s += "(" + join(ops_);
        if (shift_) s += "; " + shift_->str();
        s += ")";
        if (integral_) s += " & M";
        return s;
    }

private:
    IdealFilter(Ctx ctx, FilterKind k, std::vector<Exponent> ops) : ctx_(std::move(ctx)), kind_(k), ops_(std::move(ops)) {
        if (!ctx_) throw ContextError("null ring context");
        if (k != FilterKind::Maximal && ops_.empty()) throw DomainError("ideal filter needs at least one operand");
        for (const auto& e : ops_)
            if (e.dim() != ctx_->dim()) throw DomainError("operand " + e.str() + " has wrong dimension");
        if (k == FilterKind::Generated || k == FilterKind::Inverse || k == FilterKind::Trace || k == FilterKind::Colon)
            ops_ = reduce_generators(*ctx_, std::move(ops_));
        else
            canonical_sort(ops_);
    }

    std::vector<Exponent> maximal_anchors() const {
        const auto& m = ctx_->monoid;
        std::vector<Exponent> out;
        if (auto ns = m.as<NumericalSemigroup>()) {
            for (auto g : ns->minimal_generators()) out.push_back(Exponent::scalar(g));
        } else if (auto ed = m.as<EvenDegree>()) {
            std::size_t d = ed->dim();
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i; j < d; ++j) out.push_back(Exponent::unit(d, i) + Exponent::unit(d, j));
        } else if (auto fc = m.as<FinGenCone>()) {
            out = fc->generators();
        } else {
            out.push_back(Exponent(1));
        }
        return out;
    }

    Ctx ctx_;
    FilterKind kind_;
    std::vector<Exponent> ops_;
    std::optional<Exponent> shift_;
    bool integral_ = false;
};

struct Window {
    Rational bound;
    Integer cap = 1;
};

/// Smallest window on which the filter's minimal generators are provably complete.
inline std::optional<Window> exact_window(const IdealFilter& f) {
    if (!f.threshold()) return std::nullopt;
    auto margin = f.ctx()->monoid.exact_margin();
    if (!margin) return std::nullopt;
    Window w;
    Rational top = 0;
    bool first = true;
    for (const auto& a : f.anchors()) {
        for (const auto& v : a.c) {
            if (first || v > top) top = v;
            first = false;
        }
        w.cap = lcm(w.cap, a.common_denominator());
    }
    w.bound = std::max(Rational(0), top + *margin);
    return w;
}

inline bool window_is_exact(const IdealFilter& f, const Rational& bound, const Integer& cap) {
    auto w = exact_window(f);
    if (!w) return false;
    if (bound < w->bound) return false;
    return f.ctx()->monoid.as<RootFamily>() ? cap % w->cap == 0 : true;
}

/// Window that is exact when possible and at least as large as the requested one.
inline Window widen(const IdealFilter& f, const Window& requested) {
    Window w = requested;
    if (auto e = exact_window(f)) {
        w.bound = std::max(w.bound, e->bound);
        if (f.ctx()->monoid.as<RootFamily>()) {
            Integer c = w.cap;
            while (c % e->cap != 0) c *= f.ctx()->monoid.as<RootFamily>()->base();
            w.cap = c;
        }
    }
    return w;
}

struct GeneratorWindow {
    std::vector<Exponent> gens;
    bool complete = false;
    Rational bound;
    Integer cap = 1;
};

/// Divisibility-minimal filter members inside the window, canonically sorted.
inline GeneratorWindow minimal_generators_up_to(const IdealFilter& f, const Rational& bound, const Integer& cap = 1) {
    GeneratorWindow out;
    out.bound = bound;
    out.cap = cap;
    const auto& M = *f.ctx();
    for (auto& x : M.monoid.grid(f.floor(), bound, cap)) {
        if (!f.contains(x)) continue;
        // members dividing x lie below x, and hence earlier in canonical order
        bool redundant = std::any_of(out.gens.begin(), out.gens.end(), [&](const Exponent& g) { return M.divides(g, x); });
        if (!redundant) out.gens.push_back(std::move(x));
    }
    out.complete = window_is_exact(f, bound, cap);
    return out;
}

inline GeneratorWindow minimal_generators_up_to(const IdealFilter& f, const Window& w) {
    return minimal_generators_up_to(f, w.bound, w.cap);
}

/// Window generators on the widened window.
inline GeneratorWindow exact_generators(const IdealFilter& f, const Window& requested) {
    return minimal_generators_up_to(f, widen(f, requested));
}

inline IdealFilter intersect_principals(const Ctx& ctx, std::vector<Exponent> exps) {
    return IdealFilter::intersection(ctx, std::move(exps));
}

inline IdealFilter ideal_inverse(const Ctx& ctx, std::vector<Exponent> gens) {
    return IdealFilter::inverse(ctx, std::move(gens));
}

inline IdealFilter trace(const Ctx& ctx, std::vector<Exponent> gens) {
    return IdealFilter::trace(ctx, std::move(gens));
}

struct ClosureFilter {
    IdealFilter filter;
    bool exact = false;
};

/// I_v = (I^-1)^-1, built from the generators of I^-1 read off a window. For finitely generated I
/// this is also I_t.
inline ClosureFilter v_closure(const Ctx& ctx, std::vector<Exponent> gens, const Window& w = {}) {
    auto inv = exact_generators(ideal_inverse(ctx, std::move(gens)), w);
    if (inv.gens.empty()) throw EngineError("inverse window is empty; enlarge the window");
    return {IdealFilter::inverse(ctx, inv.gens), inv.complete};
}

inline ClosureFilter t_closure(const Ctx& ctx, std::vector<Exponent> gens, const Window& w = {}) {
    return v_closure(ctx, std::move(gens), w);
}

struct GvResult {
    bool gv = false;
    std::optional<Exponent> witness;  // v outside M with v + J inside M
    bool exact = false;
};

inline GvResult is_GV(const Ctx& ctx, const std::vector<Exponent>& gens, const Window& w = {}) {
    MonomialIdeal J(ctx, gens);
    if (!J.integral()) throw PreconditionError("GV test needs an integral ideal, got " + J.str());
    auto inv = exact_generators(ideal_inverse(ctx, J.generators()), w);
    GvResult r;
    r.exact = inv.complete;
    for (const auto& v : inv.gens)
        if (!ctx->member(v)) {
            r.witness = v;
            return r;
        }
    r.gv = true;
    return r;
}

struct TraceTest {
    bool trace = false;
    bool exact = false;
    std::vector<Exponent> trace_generators;
};

/// J is a trace ideal iff Tr(J) = J. Tr(J) contains J for integral J, so compare generators.
inline TraceTest is_trace_ideal(const Ctx& ctx, const std::vector<Exponent>& gens, const Window& w = {}) {
    MonomialIdeal J(ctx, gens);
    TraceTest r;
    auto tr = exact_generators(trace(ctx, J.generators()), w);
    r.exact = tr.complete;
    r.trace_generators = tr.gens;
    if (!J.integral()) return r;
    r.trace = std::all_of(tr.gens.begin(), tr.gens.end(), [&](const Exponent& x) { return J.contains(x); });
    return r;
}

/// I invertible iff I I^-1 = D iff 0 lies in the trace.
inline bool is_invertible(const Ctx& ctx, const std::vector<Exponent>& gens) {
    return trace(ctx, gens).contains(Exponent(ctx->dim()));
}

struct ClosureMembership {
    bool member = false;
    std::vector<Exponent> witness;  // generators of J; {0} stands for J = D
    bool exact = false;
};

namespace detail {

inline GeneratorWindow colon_window(const Ctx& ctx, const MonomialIdeal& I, const Exponent& x, const Window& w) {
    return exact_generators(IdealFilter::colon(ctx, I.generators(), x, true), w);
}

inline ClosureMembership w_given_colon(const Ctx& ctx, const GeneratorWindow& C, const Window& w) {
    ClosureMembership r;
    r.exact = C.complete;
    if (C.gens.empty()) return r;
    auto gv = is_GV(ctx, C.gens, w);
    r.exact = r.exact && gv.exact;
    if (gv.gv) {
        r.member = true;
        r.witness = C.gens;
    }
    return r;
}

}  // namespace detail

/// x in I_w iff (I : x) contains a GV ideal. GV is inherited by larger finitely generated ideals, so
/// the ideal spanned by the window generators of (I : x) & M is the only candidate to test.
inline ClosureMembership w_closure(const Ctx& ctx, const std::vector<Exponent>& gens, const Exponent& x,
                                   const Window& w = {}) {
    MonomialIdeal I(ctx, gens);
    if (I.contains(x)) return {true, {Exponent(ctx->dim())}, true};
    return detail::w_given_colon(ctx, detail::colon_window(ctx, I, x, w), w);
}

/// Trace ideals among antichains of window members of M \ {0}, up to `kmax` generators.
class TraceCatalog {
public:
    TraceCatalog(const Ctx& ctx, const Window& w, std::size_t kmax) : window_(w), kmax_(kmax) {
        std::vector<Exponent> pool;
        for (auto& x : ctx->monoid.enumerate_up_to(w.bound, w.cap))
            if (!x.is_zero()) pool.push_back(std::move(x));
        std::vector<Exponent> cur;
        std::vector<std::vector<Exponent>> cands;
        collect(*ctx, pool, 0, cur, cands);
        for (auto& c : cands)
            if (is_trace_ideal(ctx, c).trace) ideals_.push_back(std::move(c));
    }

    const std::vector<std::vector<Exponent>>& ideals() const { return ideals_; }
    const Window& window() const { return window_; }
    std::size_t kmax() const { return kmax_; }

    static std::size_t default_kmax(const MonoidRingCtx& ctx) {
        if (auto ns = ctx.monoid.as<NumericalSemigroup>()) return static_cast<std::size_t>(ns->multiplicity());
        if (auto rf = ctx.monoid.as<RootFamily>()) return static_cast<std::size_t>(rf->seed());
        return 3;
    }

private:
    void collect(const MonoidRingCtx& ctx, const std::vector<Exponent>& pool, std::size_t start,
                 std::vector<Exponent>& cur, std::vector<std::vector<Exponent>>& out) const {
        if (!cur.empty()) out.push_back(cur);
        if (cur.size() == kmax_) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            bool ok = std::all_of(cur.begin(), cur.end(), [&](const Exponent& c) {
                return !ctx.divides(c, pool[i]) && !ctx.divides(pool[i], c);
            });
            if (!ok) continue;
            cur.push_back(pool[i]);
            collect(ctx, pool, i + 1, cur, out);
            cur.pop_back();
        }
    }

    Window window_;
    std::size_t kmax_;
    std::vector<std::vector<Exponent>> ideals_;
};

namespace detail {

inline ClosureMembership xi_given_colon(const Ctx& ctx, const IdealFilter& colon, const GeneratorWindow& C,
                                       const Window& w, const TraceCatalog* catalog) {
    ClosureMembership r;
    if (C.gens.empty()) return r;
    if (is_trace_ideal(ctx, C.gens, w).trace) {
        r.member = true;
        r.witness = C.gens;
        return r;
    }
    std::optional<TraceCatalog> local;
    if (!catalog) {
        local.emplace(ctx, w, TraceCatalog::default_kmax(*ctx));
        catalog = &*local;
    }
    for (const auto& T : catalog->ideals())
        if (std::all_of(T.begin(), T.end(), [&](const Exponent& t) { return colon.contains(t); })) {
            r.member = true;
            r.witness = T;
            return r;
        }
    return r;
}

}  // namespace detail

/// x in I_xi when x + J lies in I for a finitely generated trace ideal J. Candidates: D itself, the
/// window ideal of (I : x) & M, and the catalog. A positive answer is always correct; a negative one
/// only says no monomial witness exists in the searched range.
inline ClosureMembership xi_closure(const Ctx& ctx, const std::vector<Exponent>& gens, const Exponent& x,
                                    const Window& w = {}, const TraceCatalog* catalog = nullptr) {
    MonomialIdeal I(ctx, gens);
    if (I.contains(x)) return {true, {Exponent(ctx->dim())}, true};
    auto colon = IdealFilter::colon(ctx, I.generators(), x, true);
    return detail::xi_given_colon(ctx, colon, exact_generators(colon, w), w, catalog);
}

/// First (canonical order) divisibility-maximal y in M \ {0} dividing every generator.
inline std::optional<Exponent> locally_cyclic_cover(const Ctx& ctx, const std::vector<Exponent>& gens,
                                                    const Rational& search_bound, const Integer& cap = 1) {
    if (gens.empty()) throw DomainError("locally cyclic cover needs generators");
    Exponent top = coordwise_min(gens);
    Rational hi = std::min(search_bound, top.max_coord());
    std::vector<Exponent> covers;
    for (auto& y : ctx->monoid.grid(Exponent(ctx->dim()), hi, cap)) {
        if (y.is_zero() || !y.leq(top) || !ctx->member(y)) continue;
        if (std::all_of(gens.begin(), gens.end(), [&](const Exponent& g) { return ctx->divides(y, g); }))
            covers.push_back(std::move(y));
    }
    for (const auto& y : covers) {
        bool maximal = std::none_of(covers.begin(), covers.end(),
                                    [&](const Exponent& z) { return z != y && ctx->divides(y, z); });
        if (maximal) return y;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Finiteness classification

enum class VerdictKind { Principal, FgNonPrincipal, NotFg, Inconclusive };

inline const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Principal: return "PRINCIPAL";
        case VerdictKind::FgNonPrincipal: return "FG_NON_PRINCIPAL";
        case VerdictKind::NotFg: return "NOT_FG";
        case VerdictKind::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

struct Certificate {
    std::string family;
    std::vector<Exponent> instances;
    /// true: instances form a strictly ascending chain (no instance is divisible by an earlier one);
    /// false: instances are pairwise incomparable
    bool chain = false;
    std::vector<std::string> checks;
};

struct FinitenessVerdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::vector<Exponent> generators;
    std::optional<Certificate> certificate;
    Rational bound;
    Integer cap = 1;

    std::string str() const {
        std::string s = to_string(kind);
        if (kind == VerdictKind::Principal || kind == VerdictKind::FgNonPrincipal) s += "{" + join(generators) + "}";
        if (kind == VerdictKind::NotFg && certificate) s += "[" + certificate->family + ": " + join(certificate->instances) + "]";
        if (kind == VerdictKind::Inconclusive) s += "(bound " + to_string(bound) + ")";
        return s;
    }
};

namespace detail {

inline FinitenessVerdict from_window(const GeneratorWindow& g) {
    FinitenessVerdict v;
    v.bound = g.bound;
    v.cap = g.cap;
    if (!g.complete || g.gens.empty()) return v;
    v.kind = g.gens.size() == 1 ? VerdictKind::Principal : VerdictKind::FgNonPrincipal;
    v.generators = g.gens;
    return v;
}

/// Members of f strictly dividing x, found by scanning the box below x.
inline bool has_proper_divisor_in(const IdealFilter& f, const Exponent& x, const Integer& cap) {
    const auto& M = *f.ctx();
    for (const auto& y : M.monoid.grid(f.floor(), x.max_coord(), cap))
        if (y != x && y.leq(x) && f.contains(y) && M.divides(y, x)) return true;
    return false;
}

inline FinitenessVerdict classify_even_degree(const IdealFilter& f, const Rational& bound) {
    const std::size_t d = f.ctx()->dim();
    // One fresh variable shows whether minimal generators ever involve variables outside the first d.
    IdealFilter up = f.lifted(1);
    auto g = minimal_generators_up_to(up, bound, 1);
    FinitenessVerdict v;
    v.bound = bound;
    if (!g.complete) return v;
    auto fresh = std::find_if(g.gens.begin(), g.gens.end(), [&](const Exponent& e) { return e[d] != 0; });
    if (fresh == g.gens.end()) {
        for (auto& e : g.gens) e.c.resize(d);
        return from_window({g.gens, true, bound, 1});
    }
    Certificate cert;
    cert.family = "generator " + fresh->str() + " with its last coordinate moved to each fresh variable";
    IdealFilter wide = f.lifted(3);
    for (std::size_t k = 0; k < 3; ++k) {
        Exponent inst(d + 3);
        for (std::size_t i = 0; i < d; ++i) inst[i] = (*fresh)[i];
        inst[d + k] = (*fresh)[d];
        if (!wide.contains(inst)) throw EngineError("certificate instance " + inst.str() + " is not a member");
        if (has_proper_divisor_in(wide, inst, 1)) throw EngineError("certificate instance " + inst.str() + " is not minimal");
        cert.instances.push_back(inst);
    }
    for (std::size_t i = 0; i < cert.instances.size(); ++i)
        for (std::size_t j = 0; j < cert.instances.size(); ++j)
            if (i != j && wide.ctx()->divides(cert.instances[i], cert.instances[j]))
                throw EngineError("certificate instances are comparable");
    cert.checks = {"members", "minimal", "pairwise incomparable"};
    v.kind = VerdictKind::NotFg;
    v.certificate = std::move(cert);
    return v;
}

inline FinitenessVerdict classify_root_chain(const IdealFilter& f, const Rational& bound, unsigned levels) {
    const auto* rf = f.ctx()->monoid.as<RootFamily>();
    FinitenessVerdict v;
    v.bound = bound;
    Certificate cert;
    cert.family = "least new minimal element at denominator " + std::to_string(rf->base()) + "^n";
    cert.chain = true;
    std::vector<Exponent> previous_level;
    Integer cap = 1;
    for (unsigned n = 1; n <= levels; ++n) {
        cap *= rf->base();
        auto g = minimal_generators_up_to(f, bound, cap);
        auto fresh = std::find_if(g.gens.begin(), g.gens.end(), [&](const Exponent& e) {
            return rf->level(e[0]) == n &&
                   std::none_of(previous_level.begin(), previous_level.end(),
                                [&](const Exponent& p) { return f.ctx()->divides(p, e); });
        });
        if (fresh == g.gens.end()) return v;
        cert.instances.push_back(*fresh);
        previous_level = g.gens;
    }
    v.cap = cap;
    cert.checks = {"members", "minimal at own level", "not in the ideal of the previous level"};
    v.kind = VerdictKind::NotFg;
    v.certificate = std::move(cert);
    return v;
}

}  // namespace detail

/// PRINCIPAL / FG_NON_PRINCIPAL from an exact window, NOT_FG from a verified certificate template,
/// INCONCLUSIVE otherwise. Even-degree filters are classified in countably many variables.
inline FinitenessVerdict classify_finiteness(const IdealFilter& f, const Rational& bound,
                                             std::optional<Integer> cap = std::nullopt) {
    const auto& m = f.ctx()->monoid;
    if (m.as<EvenDegree>()) return detail::classify_even_degree(f, bound);
    if (m.as<RootFamily>() && !f.threshold()) return detail::classify_root_chain(f, bound, 4);
    Integer c = cap.value_or(1);
    if (!cap)
        if (auto w = exact_window(f)) c = w->cap;
    return detail::from_window(minimal_generators_up_to(f, bound, c));
}

}  // namespace bidlab
