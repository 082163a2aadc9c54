#pragma once

// Sparse multivariate polynomials over Q with per-variable Laurent flags.
//
// Terms are kept in graded-lexicographic order, largest first, so that the
// first stored term is the leading term used by division and by the printer.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bidlab/errors.hpp"
#include "bidlab/rational.hpp"

namespace bidlab {

using Monomial = std::vector<std::int64_t>;

struct VariableContext {
    std::vector<std::string> names;
    std::vector<bool> laurent;

    std::size_t size() const { return names.size(); }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        return std::nullopt;
    }

    bool any_laurent() const {
        return std::any_of(laurent.begin(), laurent.end(), [](bool b) { return b; });
    }

    friend bool operator==(const VariableContext&, const VariableContext&) = default;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

inline ContextPtr make_context(std::vector<std::string> names, std::vector<bool> laurent = {}) {
    if (laurent.empty()) laurent.assign(names.size(), false);
    if (laurent.size() != names.size()) throw ContextError("laurent flags do not match variable list");
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size()) throw ContextError("duplicate variable name");
    return std::make_shared<const VariableContext>(VariableContext{std::move(names), std::move(laurent)});
}

/// Graded lexicographic order, "greater" first.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::int64_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) throw ContextError("null variable context");
    }

    static Polynomial constant(ContextPtr ctx, const Rational& c) {
        Polynomial p(std::move(ctx));
        if (c != 0) p.terms_.emplace(Monomial(p.ctx_->size(), 0), c);
        return p;
    }

    static Polynomial term(ContextPtr ctx, Monomial m, const Rational& c = 1) {
        Polynomial p(std::move(ctx));
        if (m.size() != p.ctx_->size()) throw ContextError("monomial length does not match context");
        p.check_exponents(m);
        if (c != 0) p.terms_.emplace(std::move(m), c);
        return p;
    }

    static Polynomial variable(ContextPtr ctx, std::string_view name, std::int64_t power = 1) {
        auto idx = ctx->index_of(name);
        if (!idx) throw ContextError("unknown variable '" + std::string(name) + "'");
        Monomial m(ctx->size(), 0);
        m[*idx] = power;
        return term(std::move(ctx), std::move(m));
    }

    const VariableContext& context() const { return *ctx_; }
    const ContextPtr& context_ptr() const { return ctx_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 &&
                std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                            [](std::int64_t e) { return e == 0; }));
    }
    Rational constant_term() const {
        auto it = terms_.find(Monomial(ctx_->size(), 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const std::pair<const Monomial, Rational>& leading_term() const {
        if (terms_.empty()) throw DomainError("leading term of zero polynomial");
        return *terms_.begin();
    }

    std::int64_t total_degree() const {
        std::int64_t best = INT64_MIN;
        for (const auto& [m, c] : terms_) {
            std::int64_t d = 0;
            for (auto e : m) d += e;
            best = std::max(best, d);
        }
        return best;
    }

    std::int64_t degree_in(std::size_t var) const {
        std::int64_t best = INT64_MIN;
        for (const auto& [m, c] : terms_) best = std::max(best, m[var]);
        return best;
    }

    std::int64_t min_degree_in(std::size_t var) const {
        std::int64_t best = INT64_MAX;
        for (const auto& [m, c] : terms_) best = std::min(best, m[var]);
        return best;
    }

    bool is_homogeneous() const {
        std::optional<std::int64_t> d;
        for (const auto& [m, c] : terms_) {
            std::int64_t t = 0;
            for (auto e : m) t += e;
            if (d && *d != t) return false;
            d = t;
        }
        return true;
    }

    /// Terms whose exponent in `var` equals `power`, with that exponent reset to zero.
    Polynomial coefficient_in(std::size_t var, std::int64_t power) const {
        Polynomial out(ctx_);
        for (const auto& [m, c] : terms_) {
            if (m[var] != power) continue;
            Monomial k = m;
            k[var] = 0;
            out.terms_.emplace(std::move(k), c);
        }
        return out;
    }

    /// Multiply by the monomial x^shift (entries may be negative for Laurent variables).
    Polynomial shifted(const Monomial& shift) const {
        Polynomial out(ctx_);
        for (const auto& [m, c] : terms_) {
            Monomial k = m;
            for (std::size_t i = 0; i < k.size(); ++i) k[i] += shift[i];
            check_exponents(k);
            out.terms_.emplace(std::move(k), c);
        }
        return out;
    }

    /// Same polynomial re-expressed over a context that contains all used variables.
    Polynomial in_context(const ContextPtr& target) const {
        Polynomial out(target);
        std::vector<std::size_t> map(ctx_->size());
        for (std::size_t i = 0; i < ctx_->size(); ++i) {
            auto j = target->index_of(ctx_->names[i]);
            bool used = std::any_of(terms_.begin(), terms_.end(),
                                    [&](const auto& t) { return t.first[i] != 0; });
            if (!j) {
                if (used) throw ContextError("variable '" + ctx_->names[i] + "' missing in target context");
                map[i] = SIZE_MAX;
            } else {
                map[i] = *j;
            }
        }
        for (const auto& [m, c] : terms_) {
            Monomial k(target->size(), 0);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (map[i] != SIZE_MAX) k[map[i]] = m[i];
            out.check_exponents(k);
            out.terms_.emplace(std::move(k), c);
        }
        return out;
    }

    Polynomial operator-() const {
        Polynomial out(*this);
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        same_context(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        same_context(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.same_context(b);
        Polynomial out(a.ctx_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                out.add_term(m, ca * cb);
            }
        return out;
    }

    Polynomial pow(unsigned n) const {
        Polynomial out = constant(ctx_, 1);
        for (unsigned i = 0; i < n; ++i) out = out * *this;
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return *a.ctx_ == *b.ctx_ && a.terms_ == b.terms_;
    }

    void same_context(const Polynomial& o) const {
        if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_))
            throw ContextError("polynomials over different variable contexts");
    }

    /// Canonical text: terms in decreasing graded-lex order, explicit '^', e.g. "x1^2*x2 - 1/2*x3^-2 + 1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            bool negative = c < 0;
            Rational a = negative ? Rational(-c) : c;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += ctx_->names[i];
                if (m[i] != 1) mono += "^" + std::to_string(m[i]);
            }
            if (mono.empty()) {
                out += to_string(a);
            } else if (a == 1) {
                out += mono;
            } else {
                out += to_string(a) + "*" + mono;
            }
        }
        return out;
    }

    static Polynomial parse(const ContextPtr& ctx, std::string_view text);

private:
    void check_exponents(const Monomial& m) const {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] < 0 && !ctx_->laurent[i])
                throw DomainError("negative exponent on non-Laurent variable '" + ctx_->names[i] + "'");
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ContextPtr ctx_;
    TermMap terms_;

    friend std::optional<Polynomial> exact_divide(const Polynomial&, const Polynomial&);
};

namespace detail {

/// Leading-term division with nonnegative exponents. Succeeds iff q divides p.
inline std::optional<Polynomial> divide_ordinary(Polynomial p, const Polynomial& q) {
    const auto& [lq, cq] = q.leading_term();
    Polynomial quotient(p.context_ptr());
    while (!p.is_zero()) {
        const auto& [lp, cp] = p.leading_term();
        Monomial shift(lp.size());
        for (std::size_t i = 0; i < shift.size(); ++i) {
            shift[i] = lp[i] - lq[i];
            if (shift[i] < 0) return std::nullopt;
        }
        Rational coef = cp / cq;
        Polynomial t = Polynomial::term(p.context_ptr(), shift, coef);
        quotient += t;
        p -= q * t;
    }
    return quotient;
}

/// Splits off the Laurent-variable monomial content: p = x^shift * rest with rest free of Laurent content.
inline std::pair<Monomial, Polynomial> laurent_content(const Polynomial& p) {
    const auto& ctx = p.context();
    Monomial shift(ctx.size(), 0);
    for (std::size_t i = 0; i < ctx.size(); ++i)
        if (ctx.laurent[i]) shift[i] = p.min_degree_in(i);
    Monomial neg(shift.size());
    for (std::size_t i = 0; i < shift.size(); ++i) neg[i] = -shift[i];
    return {shift, p.shifted(neg)};
}

}  // namespace detail

/// q * r = p for some (Laurent-respecting) polynomial r; empty when no such r exists.
inline std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q) {
    p.same_context(q);
    if (q.is_zero()) throw DomainError("division by the zero polynomial");
    if (p.is_zero()) return Polynomial(p.context_ptr());
    if (!p.context().any_laurent()) return detail::divide_ordinary(p, q);
    // Monomials in Laurent variables are units: strip them, divide, and shift back.
    auto [sp, rp] = detail::laurent_content(p);
    auto [sq, rq] = detail::laurent_content(q);
    auto r = detail::divide_ordinary(rp, rq);
    if (!r) return std::nullopt;
    Monomial shift(sp.size());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = sp[i] - sq[i];
    return r->shifted(shift);
}

/// Scales p to integer coefficients with gcd 1 and a positive leading coefficient.
inline Polynomial primitive_normalize(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer l = 1, g = 0;
    for (const auto& [m, c] : p.terms()) l = lcm(l, den(c));
    for (const auto& [m, c] : p.terms()) g = gcd(g, num(c) * (l / den(c)));
    Rational s(l, g);
    if (p.leading_term().second < 0) s = -s;
    return p * s;
}

namespace detail {

inline std::optional<std::size_t> first_variable_used(const Polynomial& a, const Polynomial& b) {
    for (std::size_t v = 0; v < a.context().size(); ++v) {
        bool used = false;
        for (const auto& [m, c] : a.terms()) used = used || m[v] != 0;
        for (const auto& [m, c] : b.terms()) used = used || m[v] != 0;
        if (used) return v;
    }
    return std::nullopt;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

/// gcd of the coefficients of p viewed as a polynomial in `var`.
inline Polynomial content_in(const Polynomial& p, std::size_t var) {
    Polynomial g(p.context_ptr());
    if (p.is_zero()) return g;
    for (std::int64_t k = 0, d = p.degree_in(var); k <= d; ++k) {
        Polynomial c = p.coefficient_in(var, k);
        if (!c.is_zero()) g = gcd_rec(g, c);
    }
    return g;
}

inline Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
    if (p.is_zero()) return p;
    auto q = exact_divide(p, content_in(p, var));
    if (!q) throw EngineError("content does not divide polynomial");
    return *q;
}

/// Pseudo-remainder of a by b in `var`.
inline Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
    const std::int64_t db = b.degree_in(var);
    const Polynomial lb = b.coefficient_in(var, db);
    while (!a.is_zero() && a.degree_in(var) >= db) {
        std::int64_t da = a.degree_in(var);
        Polynomial la = a.coefficient_in(var, da);
        Monomial shift(a.context().size(), 0);
        shift[var] = da - db;
        a = lb * a - la * b.shifted(shift);
    }
    return a;
}

inline Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return primitive_normalize(b);
    if (b.is_zero()) return primitive_normalize(a);
    auto var = first_variable_used(a, b);
    if (!var) return Polynomial::constant(a.context_ptr(), 1);
    const std::size_t v = *var;
    if (a.degree_in(v) == 0) return gcd_rec(a, content_in(b, v));
    if (b.degree_in(v) == 0) return gcd_rec(content_in(a, v), b);

    Polynomial c = gcd_rec(content_in(a, v), content_in(b, v));
    Polynomial p = primitive_part_in(a, v);
    Polynomial q = primitive_part_in(b, v);
    if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
    // Primitive polynomial remainder sequence.
    while (!q.is_zero()) {
        Polynomial r = pseudo_remainder(p, q, v);
        p = std::move(q);
        q = r.is_zero() ? r : primitive_part_in(r, v);
    }
    return primitive_normalize(c * primitive_part_in(p, v));
}

}  // namespace detail

/// Primitive gcd over Q[x1..xn]: integer coefficients, content 1, positive leading coefficient.
inline Polynomial multivar_gcd(const Polynomial& p, const Polynomial& q) {
    p.same_context(q);
    if (p.context().any_laurent()) throw UnsupportedError("gcd is not supported over Laurent variables");
    if (p.is_zero() && q.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    return detail::gcd_rec(p, q);
}

inline Polynomial multivar_lcm(const Polynomial& p, const Polynomial& q) {
    auto r = exact_divide(p * q, multivar_gcd(p, q));
    if (!r) throw EngineError("gcd does not divide product");
    return primitive_normalize(*r);
}

struct ParitySplit {
    Polynomial even;
    Polynomial odd;
};

/// Terms of even total degree vs. odd total degree.
inline ParitySplit parity_split(const Polynomial& p) {
    if (p.context().any_laurent()) throw UnsupportedError("parity split requires non-Laurent variables");
    ParitySplit out{Polynomial(p.context_ptr()), Polynomial(p.context_ptr())};
    for (const auto& [m, c] : p.terms()) {
        std::int64_t d = 0;
        for (auto e : m) d += e;
        (d % 2 == 0 ? out.even : out.odd) += Polynomial::term(p.context_ptr(), m, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

/// Arithmetic hooks for ExprParser; `divide` and `invert` return nullopt when the result leaves V.
template <class V>
struct ExprTraits;

template <>
struct ExprTraits<Polynomial> {
    static Polynomial constant(const ContextPtr& ctx, const Rational& c) { return Polynomial::constant(ctx, c); }
    static Polynomial variable(const ContextPtr& ctx, std::string_view n) { return Polynomial::variable(ctx, n); }
    static bool is_zero(const Polynomial& p) { return p.is_zero(); }
    static std::optional<Polynomial> divide(const Polynomial& a, const Polynomial& b) { return exact_divide(a, b); }
};

template <class V>
class ExprParser {
    using T = ExprTraits<V>;

public:
    ExprParser(const ContextPtr& ctx, std::string_view text) : ctx_(ctx), s_(text) {}

    V run() {
        V p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    V expr() {
        V acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    V term() {
        V acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                V d = unary();
                if (T::is_zero(d)) fail("division by zero");
                auto q = T::divide(acc, d);
                if (!q) fail("inexact division");
                acc = *q;
            } else {
                return acc;
            }
        }
    }

    V unary() {
        if (eat('-')) return T::constant(ctx_, -1) * unary();
        if (eat('+')) return unary();
        V base = primary();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
            V powered = T::constant(ctx_, 1);
            for (unsigned i = 0; i < e; ++i) powered = powered * base;
            if (!neg) return powered;
            if (T::is_zero(powered)) fail("division by zero");
            auto q = T::divide(T::constant(ctx_, 1), powered);
            if (!q) fail("negative power of a non-unit");
            return *q;
        }
        return base;
    }

    V primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            V p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return T::constant(ctx_, Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            auto name = s_.substr(start, pos_ - start);
            if (!ctx_->index_of(name)) fail("unknown variable '" + std::string(name) + "'");
            return T::variable(ctx_, name);
        }
        fail("unexpected character");
    }

    ContextPtr ctx_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

/// Natural order on identifiers: "x2" < "x10".
inline bool natural_less(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        std::size_t i = s.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
        std::string head = s.substr(0, i);
        long long tail = i < s.size() ? std::stoll(s.substr(i)) : -1;
        return std::pair{head, tail};
    };
    return split(a) < split(b);
}

}  // namespace detail

inline Polynomial Polynomial::parse(const ContextPtr& ctx, std::string_view text) {
    return detail::ExprParser<Polynomial>(ctx, text).run();
}

/// Context made of the identifiers appearing in `text` (natural order), plus `extra` names.
inline ContextPtr infer_context(std::string_view text, const std::set<std::string>& laurent_names = {},
                                std::vector<std::string> extra = {}) {
    std::vector<std::string> names = std::move(extra);
    for (std::size_t i = 0; i < text.size();) {
        if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
            std::size_t start = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            names.emplace_back(text.substr(start, i - start));
        } else {
            ++i;
        }
    }
    std::sort(names.begin(), names.end(), detail::natural_less);
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::vector<bool> laurent;
    for (const auto& n : names) laurent.push_back(laurent_names.count(n) > 0);
    return make_context(std::move(names), std::move(laurent));
}

}  // namespace bidlab
