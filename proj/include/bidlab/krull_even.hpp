#pragma once

// The even-degree subring D of K[X1..Xn]: companions, the lcm classifier for intersections of principal
// ideals, and a linear-algebra oracle for the same intersections.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bidlab/errors.hpp"
#include "bidlab/ideal.hpp"
#include "bidlab/linear_algebra.hpp"
#include "bidlab/polynomial.hpp"

namespace bidlab {

inline bool is_even_poly(const Polynomial& p) { return parity_split(p).odd.is_zero(); }

class EvenElement {
public:
    explicit EvenElement(Polynomial p) : poly_(std::move(p)) {
        if (poly_.context().any_laurent()) throw ValidationError("even elements live in a polynomial ring");
        if (!is_even_poly(poly_)) throw ValidationError(poly_.str() + " has a term of odd degree");
    }
    const Polynomial& poly() const { return poly_; }

private:
    Polynomial poly_;
};

/// h' = h_even - h_odd, so that h h' = h_even^2 - h_odd^2 is even.
inline Polynomial companion(const Polynomial& h) {
    auto s = parity_split(h);
    if (s.even.is_zero() || s.odd.is_zero())
        throw PreconditionError("companion needs both even and odd parts in " + h.str());
    return s.even - s.odd;
}

/// a | b in D: the quotient is a polynomial with only even terms.
inline bool divides_in_D(const Polynomial& a, const Polynomial& b) {
    auto q = exact_divide(b, a);
    return q && is_even_poly(*q);
}

struct KrullVerdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    Polynomial lambda;
    std::vector<Polynomial> instances;  // lambda times a fresh variable, in the extended ring
    std::vector<std::string> fresh;

    std::string str() const {
        if (kind == VerdictKind::Principal) return "PRINCIPAL(" + lambda.str() + ")";
        std::string s = std::string(to_string(kind)) + "(lambda=" + lambda.str() + "; ";
        for (std::size_t i = 0; i < instances.size(); ++i) s += (i ? ", " : "") + instances[i].str();
        return s + ")";
    }
};

/// Context with `count` new variables named X<k>, k past the current size and unused.
inline ContextPtr with_fresh_variables(const VariableContext& ctx, std::size_t count, std::vector<std::string>* added) {
    auto names = ctx.names;
    auto laurent = ctx.laurent;
    for (std::size_t k = ctx.size() + 1; count > 0; ++k) {
        std::string n = "X" + std::to_string(k);
        if (std::find(names.begin(), names.end(), n) != names.end()) continue;
        names.push_back(n);
        laurent.push_back(false);
        if (added) added->push_back(n);
        --count;
    }
    return make_context(std::move(names), std::move(laurent));
}

inline KrullVerdict classify_even_intersection(const std::vector<Polynomial>& f, std::size_t fresh_count = 3) {
    if (f.empty()) throw DomainError("intersection of no ideals");
    for (const auto& p : f) {
        EvenElement check(p);
        if (p.is_zero()) throw ValidationError("zero generator");
    }
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
            if (i != j && divides_in_D(f[i], f[j]))
                throw PreconditionError(f[i].str() + " divides " + f[j].str() + " in D");
    KrullVerdict v{VerdictKind::Inconclusive, primitive_normalize(f.front()), {}, {}};
    for (std::size_t i = 1; i < f.size(); ++i) v.lambda = multivar_lcm(v.lambda, f[i]);
    for (const auto& p : f)
        if (!exact_divide(v.lambda, p)) throw EngineError("lcm is not divisible by " + p.str());
    auto s = parity_split(v.lambda);
    if (!s.even.is_zero() && !s.odd.is_zero())
        throw EngineError("MIXED-PARITY lcm " + v.lambda.str());
    if (s.odd.is_zero()) {
        v.kind = VerdictKind::Principal;
        return v;
    }
    v.kind = VerdictKind::NotFg;
    auto ext = with_fresh_variables(v.lambda.context(), fresh_count, &v.fresh);
    auto lam = v.lambda.in_context(ext);
    for (const auto& name : v.fresh) v.instances.push_back(lam * Polynomial::variable(ext, name));
    for (const auto& inst : v.instances)
        for (const auto& p : f)
            if (!divides_in_D(p.in_context(ext), inst)) throw EngineError("certificate " + inst.str() + " not in (" + p.str() + ")");
    for (std::size_t i = 0; i < v.instances.size(); ++i)
        for (std::size_t j = 0; j < v.instances.size(); ++j)
            if (i != j && divides_in_D(v.instances[i], v.instances[j])) throw EngineError("certificate is redundant");
    return v;
}

// ---------------------------------------------------------------------------
// Oracle

/// Exponent vectors of total degree `deg` (or at most `deg`), ordered graded-lex greatest first.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::int64_t deg, bool up_to = false) {
    std::vector<Monomial> out;
    Monomial m(nvars, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i + 1 == nvars) {
            for (std::int64_t e = up_to ? 0 : left; e <= left; ++e) {
                m[i] = e;
                out.push_back(m);
            }
            return;
        }
        for (std::int64_t e = 0; e <= left; ++e) {
            m[i] = e;
            rec(i + 1, left - e);
        }
    };
    if (nvars == 0) return deg == 0 || up_to ? std::vector<Monomial>{Monomial{}} : out;
    if (deg >= 0) rec(0, deg);
    std::sort(out.begin(), out.end(), GradedLexGreater{});
    return out;
}

struct OraclePiece {
    std::int64_t degree;  // graded: exactly this degree; filtered: at most this degree
    std::vector<Polynomial> basis;
};

struct OracleResult {
    bool graded = true;
    std::vector<OraclePiece> pieces;
};

namespace detail {

inline std::int64_t even_count(std::size_t nvars, std::int64_t deg, bool up_to) {
    std::int64_t n = 0;
    for (std::int64_t d = up_to ? 0 : deg; d <= deg; ++d)
        if (d >= 0 && d % 2 == 0) n += static_cast<std::int64_t>(monomials_of_degree(nvars, d).size());
    return n;
}

/// Rows spanning (f)D restricted to degree n (or <= n).
inline Matrix multiples(const Polynomial& f, std::int64_t n, bool up_to, const std::vector<Monomial>& cols) {
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
    const std::size_t nv = f.context().size();
    Matrix rows;
    for (std::int64_t d = up_to ? 0 : n - f.total_degree(); d + f.total_degree() <= n; d += up_to ? 1 : 2) {
        if (d < 0 || d % 2) continue;
        for (const auto& m : monomials_of_degree(nv, d)) {
            Row r(cols.size(), Rational(0));
            for (const auto& [t, c] : f.terms()) {
                Monomial u = t;
                for (std::size_t k = 0; k < nv; ++k) u[k] += m[k];
                r[index.at(u)] = c;
            }
            rows.push_back(std::move(r));
        }
        if (!up_to) break;
    }
    return rows;
}

inline Polynomial row_to_poly(const ContextPtr& ctx, const Row& r, const std::vector<Monomial>& cols) {
    Polynomial p(ctx);
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (r[i] != 0) p += Polynomial::term(ctx, cols[i], r[i]);
    return p;
}

}  // namespace detail

/// Intersection of the (f_i)D as spanning sets per degree, up to `degree_bound`. Homogeneous inputs
/// give graded pieces; otherwise the pieces are the degree <= n parts.
inline OracleResult bounded_intersection_oracle(const std::vector<Polynomial>& f, std::int64_t degree_bound) {
    if (f.empty()) throw DomainError("oracle needs generators");
    for (const auto& p : f) EvenElement check(p);
    OracleResult out;
    out.graded = std::all_of(f.begin(), f.end(), [](const Polynomial& p) { return p.is_homogeneous(); });
    const auto ctx = f.front().context_ptr();
    const std::size_t nv = ctx->size();
    std::int64_t top = 0;
    for (const auto& p : f) top = std::max(top, p.total_degree());
    for (std::int64_t n = top; n <= degree_bound; ++n) {
        auto cols = monomials_of_degree(nv, n, !out.graded);
        Matrix acc = detail::multiples(f.front(), n, !out.graded, cols);
        for (std::size_t i = 1; i < f.size() && !acc.empty(); ++i)
            acc = intersect_rowspaces(acc, detail::multiples(f[i], n, !out.graded, cols));
        acc = rref(acc).rows;
        OraclePiece piece{n, {}};
        for (const auto& r : acc) piece.basis.push_back(primitive_normalize(detail::row_to_poly(ctx, r, cols)));
        out.pieces.push_back(std::move(piece));
    }
    return out;
}

struct OracleAgreement {
    bool agree = true;
    std::vector<std::string> notes;
};

/// PRINCIPAL: each piece equals the matching piece of (lambda)D. NOT_FG: each nonzero piece is
/// larger than the matching piece of (g)D for any single g of the lowest occurring degree.
inline OracleAgreement check_oracle_agreement(const KrullVerdict& v, const OracleResult& o) {
    OracleAgreement a;
    const std::size_t nv = v.lambda.context().size();
    std::optional<std::int64_t> low;
    for (const auto& piece : o.pieces) {
        const std::int64_t n = piece.degree;
        const auto dim = static_cast<std::int64_t>(piece.basis.size());
        std::string tag = "degree " + std::string(o.graded ? "" : "<= ") + std::to_string(n) + ": dim " + std::to_string(dim);
        if (v.kind == VerdictKind::Principal) {
            auto cols = monomials_of_degree(nv, n, !o.graded);
            auto lam = detail::multiples(v.lambda, n, !o.graded, cols);
            Matrix got;
            for (const auto& p : piece.basis) {
                Row r(cols.size(), Rational(0));
                for (const auto& [m, c] : p.terms()) r[std::find(cols.begin(), cols.end(), m) - cols.begin()] = c;
                got.push_back(std::move(r));
            }
            bool ok = static_cast<std::int64_t>(rank(lam)) == dim &&
                      std::all_of(lam.begin(), lam.end(), [&](const Row& r) { return got.empty() ? false : in_rowspace(got, r); });
            if (lam.empty() && dim == 0) ok = true;
            if (!ok) a.agree = false;
            a.notes.push_back(tag + (ok ? " equals lambda multiples" : " differs from lambda multiples"));
        } else {
            if (dim == 0) continue;
            if (!low) low = n;
            std::int64_t single = detail::even_count(nv, n - *low, !o.graded);
            bool ok = dim > single;
            if (!ok) a.agree = false;
            a.notes.push_back(tag + (ok ? " > " : " <= ") + std::to_string(single) + " (single-element span)");
        }
    }
    if (v.kind == VerdictKind::NotFg && !low) {
        a.agree = false;
        a.notes.push_back("no nonzero piece within the bound");
    }
    return a;
}

}  // namespace bidlab
