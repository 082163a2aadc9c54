#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bidlab/errors.hpp"
#include "bidlab/polynomial.hpp"

namespace bidlab {

/// num/den with gcd(num, den) = 1 and den primitive over Z with positive leading coefficient.
class RationalFunction {
public:
    explicit RationalFunction(Polynomial num) : RationalFunction(num, Polynomial::constant(num.context_ptr(), 1)) {}

    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        num_.same_context(den_);
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial::constant(num_.context_ptr(), 1);
            return;
        }
        Polynomial g = multivar_gcd(num_, den_);
        num_ = *exact_divide(num_, g);
        den_ = *exact_divide(den_, g);
        Polynomial d = primitive_normalize(den_);
        // d = s * den_ for a rational s; read s off the leading coefficients
        Rational s = d.leading_term().second / den_.leading_term().second;
        num_ *= s;
        den_ = std::move(d);
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const ContextPtr& context_ptr() const { return num_.context_ptr(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DomainError("division by zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const {
        if (is_polynomial()) return (num_ * (Rational(1) / den_.constant_term())).str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

    /// Parses arithmetic over the context's variables; '/' and negative powers are true division.
    static RationalFunction parse(const ContextPtr& ctx, std::string_view text);

private:
    Polynomial num_, den_;
};

namespace detail {

template <>
struct ExprTraits<RationalFunction> {
    static RationalFunction constant(const ContextPtr& ctx, const Rational& c) {
        return RationalFunction(Polynomial::constant(ctx, c));
    }
    static RationalFunction variable(const ContextPtr& ctx, std::string_view n) {
        return RationalFunction(Polynomial::variable(ctx, n));
    }
    static bool is_zero(const RationalFunction& f) { return f.is_zero(); }
    static std::optional<RationalFunction> divide(const RationalFunction& a, const RationalFunction& b) { return a / b; }
};

}  // namespace detail

inline RationalFunction RationalFunction::parse(const ContextPtr& ctx, std::string_view text) {
    return detail::ExprParser<RationalFunction>(ctx, text).run();
}

}  // namespace bidlab
