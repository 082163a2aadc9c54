#pragma once

// R(I, F) = R[I F] localized, with R = k[S]_(m) for a numerical semigroup S (S = N gives k[a]_(a)) and
// I a monomial ideal of R. Everything is decided at monomial level: a^k x^alpha lies in the ring iff
// alpha = 0 and k in S, or alpha is a sum of s elements of F with a^k in I^s. Since I^s shrinks as s
// grows, the fewest summands s_min(alpha) decides.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bidlab/errors.hpp"
#include "bidlab/exponent.hpp"
#include "bidlab/monoid.hpp"

namespace bidlab {

enum class FamilyKind { Squarefree, RationalPowers, PowersOfX };

inline const char* to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::Squarefree: return "squarefree";
        case FamilyKind::RationalPowers: return "rational-powers";
        case FamilyKind::PowersOfX: return "powers-of-x";
    }
    return "?";
}

inline FamilyKind parse_family(std::string_view s) {
    if (s == "squarefree") return FamilyKind::Squarefree;
    if (s == "rational-powers") return FamilyKind::RationalPowers;
    if (s == "powers-of-x") return FamilyKind::PowersOfX;
    throw ParseError("unknown family '" + std::string(s) + "'");
}

/// Squarefree: nonzero 0/1 vectors over countably many variables (missing coordinates are 0).
/// RationalPowers: x^q with q in (0, 1). PowersOfX: x^n with n >= 1.
class FFamily {
public:
    explicit FFamily(FamilyKind k) : kind_(k) {}
    FamilyKind kind() const { return kind_; }

    bool contains(const Exponent& f) const {
        switch (kind_) {
            case FamilyKind::Squarefree:
                return !f.is_zero() &&
                       std::all_of(f.c.begin(), f.c.end(), [](const Rational& v) { return v == 0 || v == 1; });
            case FamilyKind::RationalPowers:
                return scalar(f) > 0 && scalar(f) < 1;
            case FamilyKind::PowersOfX:
                return is_integer(scalar(f)) && scalar(f) >= 1;
        }
        return false;
    }

    /// Fewest elements of F summing to alpha; 0 for alpha = 0, empty when alpha is not a sum.
    std::optional<std::int64_t> min_summands(const Exponent& alpha) const {
        if (std::any_of(alpha.c.begin(), alpha.c.end(), [](const Rational& v) { return v < 0; })) return std::nullopt;
        if (alpha.is_zero()) return 0;
        switch (kind_) {
            case FamilyKind::Squarefree:
                // layers {i : alpha_i >= l} for l = 1..max
                if (!std::all_of(alpha.c.begin(), alpha.c.end(), [](const Rational& v) { return is_integer(v); }))
                    return std::nullopt;
                return to_i64(num(alpha.max_coord()));
            case FamilyKind::RationalPowers:
                return to_i64(floor_int(scalar(alpha))) + 1;
            case FamilyKind::PowersOfX:
                if (!is_integer(scalar(alpha))) return std::nullopt;
                return 1;
        }
        return std::nullopt;
    }

    /// The decomposition behind min_summands.
    std::vector<Exponent> canonical_decomposition(const Exponent& alpha) const {
        auto s = min_summands(alpha);
        if (!s) throw DomainError(alpha.str() + " is not a sum of family elements");
        std::vector<Exponent> out;
        if (*s == 0) return out;
        switch (kind_) {
            case FamilyKind::Squarefree:
                for (std::int64_t l = 1; l <= *s; ++l) {
                    Exponent layer(alpha.dim());
                    for (std::size_t i = 0; i < alpha.dim(); ++i) layer[i] = alpha[i] >= l ? 1 : 0;
                    out.push_back(std::move(layer));
                }
                break;
            case FamilyKind::RationalPowers:
                for (std::int64_t i = 0; i < *s; ++i) out.push_back(alpha * Rational(1, *s));
                break;
            case FamilyKind::PowersOfX:
                out.push_back(alpha);
                break;
        }
        return out;
    }

    std::size_t natural_dim() const { return kind_ == FamilyKind::Squarefree ? 0 : 1; }

private:
    static const Rational& scalar(const Exponent& f) {
        if (f.dim() != 1) throw DomainError("family element " + f.str() + " must be one-dimensional");
        return f[0];
    }
    FamilyKind kind_;
};

/// a^k x^alpha.
struct RifMonomial {
    std::int64_t k = 0;
    Exponent alpha;

    std::string str() const { return "a^" + std::to_string(k) + "*x^" + alpha.str(); }
    friend bool operator==(const RifMonomial&, const RifMonomial&) = default;
};

namespace detail {

inline Exponent padded(const Exponent& e, std::size_t dim) {
    Exponent out = e;
    out.c.resize(std::max(dim, e.dim()), Rational(0));
    return out;
}

}  // namespace detail

inline RifMonomial operator*(const RifMonomial& a, const RifMonomial& b) {
    std::size_t d = std::max(a.alpha.dim(), b.alpha.dim());
    return {a.k + b.k, detail::padded(a.alpha, d) + detail::padded(b.alpha, d)};
}

inline RifMonomial operator/(const RifMonomial& a, const RifMonomial& b) {
    std::size_t d = std::max(a.alpha.dim(), b.alpha.dim());
    return {a.k - b.k, detail::padded(a.alpha, d) - detail::padded(b.alpha, d)};
}

inline RifMonomial pow(const RifMonomial& a, std::int64_t n) { return {a.k * n, a.alpha * Rational(n)}; }

class RifRing {
public:
    RifRing(NumericalSemigroup base, std::vector<std::int64_t> ideal, FFamily family)
        : base_(std::move(base)), ideal_(std::move(ideal)), family_(family) {
        if (ideal_.empty()) throw DomainError("ideal needs a generator");
        for (auto g : ideal_) {
            if (!base_.member(g)) throw DomainError("ideal generator " + std::to_string(g) + " not in the base semigroup");
            if (g == 0) throw DomainError("ideal must be proper");
        }
    }

    const NumericalSemigroup& base() const { return base_; }
    const std::vector<std::int64_t>& ideal() const { return ideal_; }
    const FFamily& family() const { return family_; }

    bool base_member(std::int64_t k) const { return k >= 0 && base_.member(k); }
    bool in_ideal(std::int64_t k) const { return in_ideal_power(k, 1); }

    /// a^k in I^s.
    bool in_ideal_power(std::int64_t k, std::int64_t s) const {
        if (s == 0) return base_member(k);
        if (k < 0) return false;
        // sums of exactly j generators, capped at k
        std::set<std::int64_t> sums{0};
        for (std::int64_t j = 0; j < s; ++j) {
            std::set<std::int64_t> next;
            for (auto v : sums)
                for (auto g : ideal_)
                    if (v + g <= k) next.insert(v + g);
            sums = std::move(next);
            if (sums.empty()) return false;
        }
        return std::any_of(sums.begin(), sums.end(), [&](std::int64_t v) { return base_member(k - v); });
    }

    bool member(const RifMonomial& m) const {
        auto s = family_.min_summands(m.alpha);
        if (!s) return false;
        return in_ideal_power(m.k, *s);
    }

    /// In the ambient R[F]-monomials: k in S and alpha a nonnegative sum of family elements or 0.
    bool in_ambient(const RifMonomial& m) const { return base_member(m.k) && family_.min_summands(m.alpha).has_value(); }

    std::string describe() const {
        std::string s = "R(I,F) over base <";
        for (std::size_t i = 0; i < base_.generators().size(); ++i) s += (i ? "," : "") + std::to_string(base_.generators()[i]);
        s += ">, I = (";
        for (std::size_t i = 0; i < ideal_.size(); ++i) s += (i ? "," : "") + std::to_string(ideal_[i]);
        return s + "), F = " + to_string(family_.kind());
    }

private:
    NumericalSemigroup base_;
    std::vector<std::int64_t> ideal_;
    FFamily family_;
};

inline bool rif_member(const RifRing& D, const RifMonomial& m) { return D.member(m); }

/// alpha as a sum of exactly s family elements, by direct search: 0/1 vectors for Squarefree, parts
/// on the grid 1/(s den(alpha)) for RationalPowers (equal parts alpha/s lie on it), positive integers
/// for PowersOfX.
inline bool decomposes_into(const FFamily& F, const Exponent& alpha, std::int64_t s) {
    if (s == 0) return alpha.is_zero();
    if (alpha.dim() == 0) return false;
    switch (F.kind()) {
        case FamilyKind::Squarefree: {
            if (!std::all_of(alpha.c.begin(), alpha.c.end(), [](const Rational& v) { return is_integer(v) && v >= 0; }))
                return false;
            std::vector<std::int64_t> a;
            for (const auto& v : alpha.c) a.push_back(to_i64(num(v)));
            std::function<bool(std::int64_t)> rec = [&](std::int64_t left) {
                bool zero = std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; });
                if (left == 0) return zero;
                if (zero) return false;
                // the part containing the first nonzero coordinate, over subsets of the rest
                std::size_t i0 = std::find_if(a.begin(), a.end(), [](std::int64_t v) { return v > 0; }) - a.begin();
                std::vector<std::size_t> rest;
                for (std::size_t i = i0 + 1; i < a.size(); ++i)
                    if (a[i] > 0) rest.push_back(i);
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
                    --a[i0];
                    for (std::size_t b = 0; b < rest.size(); ++b)
                        if ((mask >> b) & 1) --a[rest[b]];
                    bool ok = rec(left - 1);
                    ++a[i0];
                    for (std::size_t b = 0; b < rest.size(); ++b)
                        if ((mask >> b) & 1) ++a[rest[b]];
                    if (ok) return true;
                }
                return false;
            };
            return rec(s);
        }
        case FamilyKind::RationalPowers:
        case FamilyKind::PowersOfX: {
            if (alpha.dim() != 1 || alpha[0] < 0) return false;
            const bool unit_parts = F.kind() == FamilyKind::RationalPowers;
            const Integer N = unit_parts ? den(alpha[0]) * s : Integer(1);
            const Rational scaled = alpha[0] * Rational(N);
            if (!is_integer(scaled)) return false;
            // parts v/N: 0 < v < N for rational powers, v >= 1 for powers of x; nondecreasing
            std::function<bool(std::int64_t, Integer, Integer)> rec = [&](std::int64_t left, Integer rem, Integer lo) {
                if (left == 0) return rem == 0;
                for (Integer v = lo; v <= rem && (!unit_parts || v < N); ++v)
                    if (v * left <= rem && rec(left - 1, rem - v, v)) return true;
                return false;
            };
            return rec(s, num(scaled), Integer(1));
        }
    }
    return false;
}

/// Membership by searching decompositions into s = 0..k parts; independent of min_summands.
inline bool rif_member_by_search(const RifRing& D, const RifMonomial& m) {
    for (std::int64_t s = 0; s <= std::max<std::int64_t>(m.k, 0); ++s)
        if (D.in_ideal_power(m.k, s) && decomposes_into(D.family(), m.alpha, s)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Family axioms

struct FamilyCheck {
    bool passed = true;
    std::vector<Exponent> G;
    std::size_t fullness_samples = 0;
    std::optional<std::string> violation;
};

/// `g_size` elements g with h + g in F for all h in H, plus a fullness scan over products of sampled
/// family elements.
inline FamilyCheck family_check(const FFamily& F, const std::vector<Exponent>& H, std::size_t g_size) {
    for (const auto& h : H)
        if (!F.contains(h)) throw PreconditionError(h.str() + " is not in the family");
    FamilyCheck out;
    switch (F.kind()) {
        case FamilyKind::Squarefree: {
            std::size_t used = 0;
            for (const auto& h : H)
                for (std::size_t i = 0; i < h.dim(); ++i)
                    if (h[i] != 0) used = std::max(used, i + 1);
            std::size_t dim = used + g_size;
            for (std::size_t n = 0; n < g_size; ++n) out.G.push_back(Exponent::unit(dim, used + n));
            break;
        }
        case FamilyKind::RationalPowers: {
            Rational headroom = 1;
            for (const auto& h : H) headroom = std::min(headroom, 1 - h[0]);
            Rational g = headroom;
            for (std::size_t n = 0; n < g_size; ++n) {
                g /= 2;
                out.G.push_back(Exponent::scalar(g));
            }
            break;
        }
        case FamilyKind::PowersOfX:
            for (std::size_t n = 1; n <= g_size; ++n) out.G.push_back(Exponent::scalar(static_cast<std::int64_t>(n)));
            break;
    }
    for (const auto& g : out.G)
        for (const auto& h : H) {
            std::size_t d = std::max(g.dim(), h.dim());
            if (!F.contains(detail::padded(h, d) + detail::padded(g, d))) {
                out.passed = false;
                out.violation = "h*g not in F for h = " + h.str() + ", g = " + g.str();
                return out;
            }
        }

    // fullness: for sampled pairs with product in F, each factor is in F
    std::vector<Exponent> sample;
    switch (F.kind()) {
        case FamilyKind::Squarefree:
            for (unsigned mask = 1; mask < 16; ++mask) {
                Exponent e(4);
                for (std::size_t i = 0; i < 4; ++i) e[i] = (mask >> i) & 1u;
                sample.push_back(std::move(e));
            }
            break;
        case FamilyKind::RationalPowers:
            for (std::int64_t d = 2; d <= 6; ++d)
                for (std::int64_t n = 1; n < d; ++n) sample.push_back(Exponent::scalar(Rational(n, d)));
            break;
        case FamilyKind::PowersOfX:
            for (std::int64_t n = 1; n <= 6; ++n) sample.push_back(Exponent::scalar(n));
            break;
    }
    for (const auto& p : sample)
        for (const auto& q : sample) {
            Exponent prod = p + q;
            if (!F.contains(prod)) continue;
            ++out.fullness_samples;
            if (!F.contains(p) || !F.contains(q)) {
                out.passed = false;
                out.violation = "product " + prod.str() + " in F with a factor outside F";
                return out;
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// t-finder

struct LemmaT {
    std::int64_t t = 0;                 // exponent of the chosen element
    std::vector<std::int64_t> e;        // e_i minimal with r_i^e_i in I
    std::vector<std::int64_t> L;        // exponents of the products, ascending
};

/// r_list holds exponents of monomials r_i in m; a zero element (no monomial) is passed as nullopt.
inline LemmaT lemma_find_t(const NumericalSemigroup& base, const std::vector<std::int64_t>& ideal,
                           const std::vector<std::optional<std::int64_t>>& r_list) {
    if (ideal.empty()) throw PreconditionError("ideal is not primary to the maximal ideal");
    for (auto g : ideal)
        if (g <= 0 || !base.member(g)) throw PreconditionError("ideal is not primary to the maximal ideal");
    RifRing D(base, ideal, FFamily(FamilyKind::PowersOfX));
    LemmaT out;
    std::vector<std::int64_t> rs;
    for (const auto& r : r_list) {
        if (!r) continue;  // 0 * t = 0 lies in I for every t
        if (*r <= 0 || !base.member(*r)) throw PreconditionError("r = a^" + std::to_string(*r) + " is not in the maximal ideal");
        std::int64_t e = 1;
        while (!D.in_ideal(e * *r)) ++e;
        out.e.push_back(e);
        rs.push_back(*r);
    }
    std::set<std::int64_t> L{0};
    for (std::size_t i = 0; i < rs.size(); ++i) {
        std::set<std::int64_t> next;
        for (auto v : L)
            for (std::int64_t h = 0; h <= out.e[i]; ++h) next.insert(v + h * rs[i]);
        L = std::move(next);
    }
    out.L.assign(L.begin(), L.end());
    // a proper multiple is larger, so the largest element of L outside I is divisibility-maximal
    std::optional<std::int64_t> best;
    for (auto v : out.L)
        if (!D.in_ideal(v)) best = v;
    if (!best) throw EngineError("every product lies in I");
    out.t = *best;
    for (auto r : rs)
        if (!D.in_ideal(r + out.t)) throw EngineError("r t not in I for r = a^" + std::to_string(r));
    return out;
}

// ---------------------------------------------------------------------------
// SBID witness families

struct WitnessFamily {
    RifMonomial a;
    std::vector<RifMonomial> b;
    std::vector<Exponent> H;
    LemmaT lemma;
    std::vector<RifMonomial> elements;
    std::size_t quotient_checks = 0;
    std::size_t redundancy_checks = 0;
};

inline bool rif_divides(const RifRing& D, const RifMonomial& x, const RifMonomial& y) { return D.member(y / x); }

inline WitnessFamily sbid_witness_family(const RifRing& D, const std::vector<RifMonomial>& a_list, std::size_t count) {
    if (a_list.size() < 2) throw PreconditionError("need at least two elements");
    for (const auto& a : a_list)
        if (!D.member(a)) throw PreconditionError(a.str() + " is not in the ring");
    for (std::size_t i = 0; i < a_list.size(); ++i)
        for (std::size_t j = 0; j < a_list.size(); ++j)
            if (i != j && rif_divides(D, a_list[i], a_list[j]))
                throw PreconditionError(a_list[i].str() + " divides " + a_list[j].str());
    auto in_all = [&](const RifMonomial& m) {
        return std::all_of(a_list.begin(), a_list.end(), [&](const RifMonomial& ai) { return rif_divides(D, ai, m); });
    };
    WitnessFamily w;
    w.a = a_list.front();
    for (std::size_t i = 1; i < a_list.size(); ++i) w.a = w.a * a_list[i];
    // drop powers of a while the product stays in the intersection
    while (in_all({w.a.k - 1, w.a.alpha})) --w.a.k;
    for (const auto& ai : a_list) w.b.push_back(w.a / ai);
    std::set<Exponent> H;
    std::vector<std::optional<std::int64_t>> r;
    for (const auto& b : w.b) {
        for (auto& h : D.family().canonical_decomposition(b.alpha)) H.insert(h);
        r.push_back(b.alpha.is_zero() ? std::optional<std::int64_t>(b.k) : std::nullopt);
    }
    w.H.assign(H.begin(), H.end());
    w.lemma = lemma_find_t(D.base(), D.ideal(), r);
    auto fc = family_check(D.family(), w.H, count);
    if (!fc.passed) throw EngineError("family axiom fails: " + *fc.violation);
    for (const auto& g : fc.G) {
        RifMonomial e = w.a * RifMonomial{w.lemma.t, g};
        for (const auto& ai : a_list) {
            ++w.quotient_checks;
            if (!rif_divides(D, ai, e)) throw EngineError(e.str() + " not in (" + ai.str() + ")");
        }
        w.elements.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < w.elements.size(); ++i)
        for (std::size_t j = 0; j < w.elements.size(); ++j) {
            if (i == j) continue;
            ++w.redundancy_checks;
            if (rif_divides(D, w.elements[i], w.elements[j]))
                throw EngineError(w.elements[i].str() + " divides " + w.elements[j].str());
        }
    return w;
}

// ---------------------------------------------------------------------------
// Complete integral closure and integrality probes

/// Least n <= n_max with d x^n outside D.
inline std::optional<std::int64_t> cic_escape_probe(const RifRing& D, const RifMonomial& d, const RifMonomial& x,
                                                     std::int64_t n_max) {
    if (!D.member(d)) throw PreconditionError(d.str() + " is not in the ring");
    if (D.member(x)) throw PreconditionError(x.str() + " is already in the ring");
    if (!D.in_ambient(x)) throw DomainError(x.str() + " is not a monomial of R[F]");
    for (std::int64_t n = 1; n <= n_max; ++n)
        if (!D.member(d * pow(x, n))) return n;
    return std::nullopt;
}

struct IntegralityWitness {
    RifMonomial element;
    std::int64_t e;
};

/// x f with x in m \ I, x^e in I, f and f^e in F: integral (its e-th power lies in the ring) but
/// outside. Candidates for f: unit vectors and dyadic powers 1/2^j, j <= 6, or x^n.
inline std::optional<IntegralityWitness> integrality_witness(const RifRing& D) {
    const auto& S = D.base();
    std::int64_t top = *std::max_element(D.ideal().begin(), D.ideal().end()) + S.conductor();
    std::vector<Exponent> cands;
    switch (D.family().kind()) {
        case FamilyKind::Squarefree:
            for (unsigned mask = 1; mask < 8; ++mask) {
                Exponent f(3);
                for (std::size_t i = 0; i < 3; ++i) f[i] = (mask >> i) & 1u;
                cands.push_back(std::move(f));
            }
            break;
        case FamilyKind::RationalPowers:
            for (std::int64_t j = 1; j <= 6; ++j) cands.push_back(Exponent::scalar(Rational(1, Integer(1) << j)));
            break;
        case FamilyKind::PowersOfX:
            for (std::int64_t n = 1; n <= 3; ++n) cands.push_back(Exponent::scalar(n));
            break;
    }
    for (std::int64_t k = 1; k <= top; ++k) {
        if (!S.member(k) || D.in_ideal(k)) continue;
        std::int64_t e = 2;
        while (!D.in_ideal(e * k)) ++e;
        for (const auto& f : cands) {
            if (!D.family().contains(f * Rational(e))) continue;
            RifMonomial xf{k, f};
            if (!D.member(xf) && D.member(pow(xf, e))) return IntegralityWitness{xf, e};
        }
    }
    return std::nullopt;
}

}  // namespace bidlab
