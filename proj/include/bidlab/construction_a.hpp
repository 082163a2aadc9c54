#pragma once

// The ring A = D(z) & D[z]_(Q,z) built from D = union of the R_n, with R_n the localizations of
// k[x, y^2, y^3, y^2/x^n, y^3/x^n]. Only fraction-free elements (members of D[z]) are handled.
//
// Monomial rule for D: x^i y^j is in D iff j != 1 and (j = 0 implies i >= 0). For j >= 2 the term is
// y^2 or y^3 times an element of <y^2, y^3>, and y^2/x^n, y^3/x^n absorb any negative power of x once
// n is large enough; for j = 0 only k[x] survives the union.

#include <optional>
#include <string>
#include <vector>

#include "bidlab/errors.hpp"
#include "bidlab/polynomial.hpp"

namespace bidlab {

/// Context x (Laurent), y, z.
inline ContextPtr construction_a_context() {
    static const ContextPtr ctx = make_context({"x", "y", "z"}, {true, false, false});
    return ctx;
}

inline Polynomial laurent_element(std::string_view text) { return Polynomial::parse(construction_a_context(), text); }

namespace detail {

inline const VariableContext& check_xyz(const Polynomial& e) {
    const auto& c = e.context();
    if (c.names != std::vector<std::string>{"x", "y", "z"} || !c.laurent[0] || c.laurent[1] || c.laurent[2])
        throw ContextError("expected the ring k[x, 1/x, y, z]");
    return c;
}

inline bool has_z(const Polynomial& e) {
    return std::any_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return t.first[2] != 0; });
}

inline bool monomial_in_D(const Monomial& m) { return m[1] != 1 && (m[1] != 0 || m[0] >= 0); }

}  // namespace detail

/// With ignore_z the element must be z-free; otherwise each z-coefficient is tested, i.e. membership
/// in D[z].
inline bool in_D(const Polynomial& e, bool ignore_z = false) {
    detail::check_xyz(e);
    if (ignore_z && detail::has_z(e)) throw DomainError(e.str() + " involves z");
    return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return detail::monomial_in_D(t.first); });
}

inline bool in_Q(const Polynomial& e) {
    detail::check_xyz(e);
    if (detail::has_z(e)) throw DomainError(e.str() + " involves z");
    return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return t.first[1] >= 2; });
}

inline std::optional<Polynomial> quotient_in_D_z(const Polynomial& num, const Polynomial& den) {
    detail::check_xyz(num);
    detail::check_xyz(den);
    if (den.is_zero()) throw DomainError("division by zero");
    auto q = exact_divide(num, den);
    if (!q || !in_D(*q)) return std::nullopt;
    return q;
}

/// num / den lies in D[z], hence in A.
inline bool quotient_in_A(const Polynomial& num, const Polynomial& den) { return quotient_in_D_z(num, den).has_value(); }

struct NamedCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct RemarkReport {
    std::size_t cap = 0;
    std::vector<NamedCheck> checks;
    std::vector<Polynomial> family;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
    }
    std::optional<std::string> first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return c.name;
        return std::nullopt;
    }
};

inline RemarkReport verify_remark_triple(std::size_t K, std::optional<Polynomial> w_override = std::nullopt) {
    if (K < 3) throw PreconditionError("instance cap must be at least 3");
    const auto ctx = construction_a_context();
    auto P = [&](const char* s) { return Polynomial::parse(ctx, s); };
    const Polynomial w = w_override ? *w_override : P("y^5*z*(z-y^2)*(z-y^3)");
    const std::vector<std::pair<std::string, Polynomial>> ideals = {
        {"y^2*z", P("y^2*z")}, {"y^3*(z-y^2)", P("y^3*(z-y^2)")}, {"y^5*(z-y^3)", P("y^5*(z-y^3)")}};
    RemarkReport r;
    r.cap = K;
    auto add = [&](std::string name, bool ok, std::string detail) { r.checks.push_back({std::move(name), ok, std::move(detail)}); };

    // (1) w in each principal ideal
    for (const auto& [name, a] : ideals) {
        auto q = quotient_in_D_z(w, a);
        add("w in (" + name + ")", q.has_value(), q ? "quotient " + q->str() : "no quotient in D[z]");
    }

    // (2) the quotient by the third generator is in A, outside xA, outside Q
    const Polynomial c = P("z*(z-y^2)");
    {
        auto q = exact_divide(w, ideals[2].second);
        bool ok = q && *q == c && quotient_in_A(c, P("1"));
        add("c = w/(y^5*(z-y^3)) = z*(z-y^2) in A", ok, q ? "quotient " + q->str() : "no quotient");
        bool outside_x = !quotient_in_A(c, P("x"));
        add("c not in xA", outside_x, "c/x = " + (c * P("1/x")).str());
        std::string bad;
        for (std::int64_t d = 0; d <= c.degree_in(2); ++d) {
            auto coef = c.coefficient_in(2, d);
            if (!coef.is_zero() && !in_Q(coef)) {
                bad = "z^" + std::to_string(d) + " coefficient " + coef.str();
                break;
            }
        }
        add("c has a z-coefficient outside Q", !bad.empty(), bad);
    }

    // (3) the family c*y^5/x^k, c*y^6/x^k lies in the first two ideals
    for (std::int64_t a : {5, 6}) {
        for (std::size_t k = 0; k <= K; ++k) {
            Polynomial f = c * Polynomial::term(ctx, {-static_cast<std::int64_t>(k), a, 0});
            bool ok = quotient_in_A(f, ideals[0].second) && quotient_in_A(f, ideals[1].second);
            add("c*y^" + std::to_string(a) + "/x^" + std::to_string(k) + " in (y^2*z) & (y^3*(z-y^2))", ok, f.str());
            r.family.push_back(std::move(f));
        }
    }

    // (4) irredundancy: within each y-power the family is a strict chain, each element properly
    // dividing the previous one; across y-powers no element divides another
    {
        std::string detail;
        bool ok = true;
        const std::size_t n = K + 1;
        for (std::size_t s = 0; s < 2 && ok; ++s)
            for (std::size_t k = 0; k + 1 < n && ok; ++k) {
                const auto& lo = r.family[s * n + k];
                const auto& hi = r.family[s * n + k + 1];
                if (!quotient_in_A(lo, hi) || quotient_in_A(hi, lo)) {
                    ok = false;
                    detail = "chain step fails at " + hi.str();
                }
            }
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                const auto& f5 = r.family[i];
                const auto& f6 = r.family[n + j];
                if (quotient_in_A(f5, f6) || quotient_in_A(f6, f5)) {
                    ok = false;
                    detail = f5.str() + " and " + f6.str() + " are comparable";
                }
            }
        add("family irredundant (strict chains, incomparable across y-powers)", ok,
            ok ? std::to_string(r.family.size()) + " elements" : detail);
    }
    return r;
}

}  // namespace bidlab
