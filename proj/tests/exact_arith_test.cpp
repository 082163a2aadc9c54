#include <gtest/gtest.h>

#include <random>

#include "bidlab/polynomial.hpp"
#include "bidlab/rational_function.hpp"
#include "support.hpp"

using namespace bidlab;
using namespace bidlab::testing;

namespace {

ContextPtr xy() { return make_context({"X", "Y"}); }

Polynomial P(const ContextPtr& c, const std::string& s) { return Polynomial::parse(c, s); }

}  // namespace

TEST(Rational, CanonicalFormMatchesCrossMultiplication) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-40, 40);
    for (int i = 0; i < 200; ++i) {
        int a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (b == 0 || e == 0) continue;
        Rational s = ratio(a, b) + ratio(c, e);
        // brute: (a*e + c*b) / (b*e), compared by cross-multiplication
        Integer n = Integer(a) * e + Integer(c) * b, m = Integer(b) * e;
        EXPECT_EQ(num(s) * m, n * den(s));
        EXPECT_GT(den(s), 0);
        EXPECT_EQ(gcd(abs(num(s)), den(s)), num(s) == 0 ? den(s) : Integer(1));
    }
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(to_string(parse_rational("-14/8")), "-7/4");
    EXPECT_EQ(to_string(parse_rational(" 6 ")), "6");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("x"), ParseError);
    EXPECT_EQ(floor_int(Rational(-7, 4)), -2);
    EXPECT_EQ(ceil_int(Rational(-7, 4)), -1);
}

TEST(Polynomial, ParsePrintRoundTrip) {
    auto c = make_context({"x1", "x2", "x3"}, {false, false, true});
    auto p = P(c, "x1^2*x2 - 1/2*x3^-2 + 3 - x1^2*x2 + x2*x1");
    EXPECT_EQ(p.str(), "x1*x2 + 3 - 1/2*x3^-2");
    EXPECT_EQ(P(c, p.str()), p);
    EXPECT_THROW(P(c, "x1^-1"), ParseError);
    EXPECT_THROW(P(c, "x4"), ParseError);
    EXPECT_THROW(P(c, "x1 +"), ParseError);
}

TEST(Polynomial, NoZeroCoefficientsStored) {
    auto c = xy();
    auto p = P(c, "X + Y - X");
    for (const auto& [m, v] : p.terms()) EXPECT_NE(v, 0);
    EXPECT_EQ(p.terms().size(), 1u);
}

TEST(Polynomial, RingAxiomsOnRandomTriples) {
    auto c = make_context({"a", "b", "c"});
    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
        auto p = random_poly(c, rng, 3, 4), q = random_poly(c, rng, 3, 4), r = random_poly(c, rng, 3, 4);
        EXPECT_EQ(p + q, q + p);
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ((p + q) + r, p + (q + r));
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * (q + r), p * q + p * r);
    }
}

TEST(ExactDivide, Examples) {
    auto c = xy();
    auto q = exact_divide(P(c, "X^4 - Y^2"), P(c, "X^2 - Y"));
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, P(c, "X^2 + Y"));

    auto l = make_context({"X"}, {true});
    auto r = exact_divide(P(l, "X^2 + 1"), P(l, "X"));
    ASSERT_TRUE(r);
    EXPECT_EQ(r->str(), "X + X^-1");

    auto x = make_context({"X"});
    EXPECT_FALSE(exact_divide(P(x, "X^2 + 1"), P(x, "X + 1")));
}

TEST(ExactDivide, NoLinearQuotientOnBruteGrid) {
    // (X^2+1)/(X+1): no a*X + b on a rational grid works
    auto x = make_context({"X"});
    auto p = P(x, "X^2 + 1"), d = P(x, "X + 1");
    for (int an = -6; an <= 6; ++an)
        for (int bn = -6; bn <= 6; ++bn)
            for (int den = 1; den <= 3; ++den) {
                auto cand = Polynomial::variable(x, "X") * Rational(an, den) + Polynomial::constant(x, Rational(bn, den));
                EXPECT_NE(cand * d, p);
            }
}

TEST(ExactDivide, ContextMismatchAndZero) {
    EXPECT_THROW(exact_divide(P(xy(), "X"), P(make_context({"X"}), "X")), ContextError);
    EXPECT_THROW(exact_divide(P(xy(), "X"), Polynomial(xy())), DomainError);
}

TEST(ExactDivide, RandomProducts) {
    auto c = make_context({"a", "b", "c"}, {true, false, false});
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        auto p = random_poly(c, rng, 3, 3), q = random_poly(c, rng, 3, 3);
        auto shift = Monomial{std::uniform_int_distribution<long>(-2, 2)(rng), 0, 0};
        q = q.shifted(shift);
        auto r = exact_divide(p * q, q);
        ASSERT_TRUE(r) << (p * q).str() << " / " << q.str();
        EXPECT_EQ(*r * q, p * q);
    }
}

TEST(Gcd, Examples) {
    auto c = make_context({"X1", "X2", "X3"});
    EXPECT_EQ(multivar_gcd(P(c, "X1*X2"), P(c, "X1*X3")), P(c, "X1"));
    EXPECT_EQ(multivar_gcd(P(c, "-4*X1^2 + 2*X2"), Polynomial(c)), P(c, "2*X1^2 - X2"));
    auto d = xy();
    EXPECT_EQ(multivar_gcd(P(d, "X^2 - Y^2"), P(d, "X^2 + 2*X*Y + Y^2")), P(d, "X + Y"));
    auto l = make_context({"X"}, {true});
    EXPECT_THROW(multivar_gcd(P(l, "X"), P(l, "X")), UnsupportedError);
}

TEST(Gcd, BruteCommonDivisorsDivideGcd) {
    auto d = xy();
    std::vector<std::pair<const char*, const char*>> pairs = {
        {"X^2 - Y^2", "X^2 + 2*X*Y + Y^2"}, {"X^2*Y - Y", "X*Y + Y"}, {"X^3 - X", "X^2 - 2*X + 1"}};
    auto cands = small_polys(d, 1);
    for (auto [a, b] : pairs) {
        auto p = P(d, a), q = P(d, b);
        auto g = multivar_gcd(p, q);
        EXPECT_TRUE(exact_divide(p, g));
        EXPECT_TRUE(exact_divide(q, g));
        for (const auto& h : cands)
            if (exact_divide(p, h) && exact_divide(q, h)) { EXPECT_TRUE(exact_divide(g, h)) << h.str(); }
    }
}

TEST(Gcd, RandomSymmetryAssociativityAndLcm) {
    auto c = make_context({"a", "b", "c"});
    std::mt19937 rng(9);
    for (int i = 0; i < 30; ++i) {
        auto f = random_poly(c, rng, 2, 3);
        auto p = f * random_poly(c, rng, 2, 3), q = f * random_poly(c, rng, 2, 3), r = random_poly(c, rng, 2, 3) * f;
        auto g = multivar_gcd(p, q);
        EXPECT_EQ(g, multivar_gcd(q, p));
        EXPECT_TRUE(exact_divide(p, g) && exact_divide(q, g));
        EXPECT_TRUE(exact_divide(g, primitive_normalize(f)));
        EXPECT_EQ(multivar_gcd(multivar_gcd(p, q), r), multivar_gcd(p, multivar_gcd(q, r)));
        auto l = multivar_lcm(p, q);
        EXPECT_TRUE(exact_divide(l, p) && exact_divide(l, q));
    }
}

TEST(ParitySplit, Examples) {
    auto c = make_context({"X1", "X2", "X3"});
    auto s = parity_split(P(c, "X1 + X2*X3"));
    EXPECT_EQ(s.even, P(c, "X2*X3"));
    EXPECT_EQ(s.odd, P(c, "X1"));
    EXPECT_EQ(s.even + s.odd, P(c, "X1 + X2*X3"));
    auto t = parity_split(P(c, "X1*X2"));
    EXPECT_TRUE(t.odd.is_zero());
    auto z = parity_split(Polynomial(c));
    EXPECT_TRUE(z.even.is_zero() && z.odd.is_zero());
}

TEST(ParitySplit, Linear) {
    auto c = make_context({"a", "b", "c"});
    std::mt19937 rng(21);
    for (int i = 0; i < 100; ++i) {
        auto p = random_poly(c, rng, 4, 5), q = random_poly(c, rng, 4, 5);
        auto s = parity_split(p + q), sp = parity_split(p), sq = parity_split(q);
        EXPECT_EQ(s.even, sp.even + sq.even);
        EXPECT_EQ(s.odd, sp.odd + sq.odd);
    }
}

TEST(RationalFunction, CanonicalAndCrossMultiplication) {
    auto c = xy();
    RationalFunction f(P(c, "X^2 - Y^2"), P(c, "2*X + 2*Y"));
    EXPECT_EQ(f.num(), P(c, "1/2*X - 1/2*Y"));
    EXPECT_EQ(f.den(), P(c, "1"));
    std::mt19937 rng(4);
    for (int i = 0; i < 40; ++i) {
        auto a = random_poly(c, rng, 2, 3), b = random_poly(c, rng, 2, 3), k = random_poly(c, rng, 1, 2);
        RationalFunction u(a * k, b * k), v(a, b);
        EXPECT_EQ(u, v);
        EXPECT_EQ(u.num() * v.den(), v.num() * u.den());
        EXPECT_TRUE(multivar_gcd(u.num().is_zero() ? u.den() : u.num(), u.den()).is_constant());
    }
    EXPECT_THROW(RationalFunction(P(c, "X"), Polynomial(c)), DomainError);
}
