#include <gtest/gtest.h>

#include <random>

#include "bidlab/km_ring.hpp"

using namespace bidlab;

namespace {

RationalFunction K(const char* s) { return km_element(s); }

// independent evaluation at Y = 0 through substitution on the term maps
bool brute_constant_at_zero(const RationalFunction& e) {
    Polynomial n(km_context()), d(km_context());
    for (const auto& [m, c] : e.num().terms())
        if (m[1] == 0) n += Polynomial::term(km_context(), m, c);
    for (const auto& [m, c] : e.den().terms())
        if (m[1] == 0) d += Polynomial::term(km_context(), m, c);
    // n / d constant iff n * lc(d) == lc(n) * d
    if (n.is_zero()) return true;
    return n * Polynomial::constant(km_context(), d.leading_term().second) ==
           d * Polynomial::constant(km_context(), n.leading_term().second);
}

}  // namespace

TEST(KmRing, Membership) {
    EXPECT_TRUE(km_in_D(K("Y*X")));
    EXPECT_FALSE(km_in_D(K("X")));
    EXPECT_FALSE(km_in_D(K("1/X")));
    EXPECT_TRUE(km_in_D(K("1 + X*Y/(1+X)")));
    EXPECT_TRUE(km_in_D(K("(2+X+X*Y)/(1+X/2)")));
    EXPECT_THROW(km_in_D(K("1/Y")), DomainError);
    EXPECT_TRUE(km_in_m(K("Y/(1+X)")));
    EXPECT_FALSE(km_in_m(K("1+Y")));
}

TEST(KmRing, ClosedUnderRingOperations) {
    std::vector<RationalFunction> pool = {K("1"),        K("Y"),          K("X*Y"),        K("Y/X"),
                                          K("3 + Y^2/(1+X)"), K("X"), K("1/(1+X)"), K("2 - X*Y/(X^2+1)"),
                                          K("(1+X)/(1+X+Y)"), K("Y*X^3 + 5")};
    int both = 0;
    for (const auto& a : pool)
        for (const auto& b : pool) {
            ASSERT_EQ(km_in_D(a), brute_constant_at_zero(a)) << a.str();
            if (!km_in_D(a) || !km_in_D(b)) continue;
            ++both;
            EXPECT_TRUE(km_in_D(a + b)) << a.str() << " + " << b.str();
            EXPECT_TRUE(km_in_D(a * b)) << a.str() << " * " << b.str();
        }
    EXPECT_GT(both, 20);
}

TEST(KmRing, DividedPrime) {
    // y in m, x in D \ m a nonunit of T... every x in D \ m is a unit of T with constant value at 0
    std::vector<RationalFunction> ms = {K("Y"), K("X*Y"), K("Y^2/(1+X)"), K("Y*(X^2+1)/X")};
    std::vector<RationalFunction> xs = {K("2"), K("1+Y"), K("3 + X*Y"), K("1 + Y/(1+X)")};
    for (const auto& y : ms)
        for (const auto& x : xs) EXPECT_TRUE(km_in_m(y / x)) << y.str() << " / " << x.str();
}

TEST(KmRing, ProbeYandYX) {
    auto r = km_intersection_probe(K("Y"), K("Y*X"));
    EXPECT_TRUE(r.a1_outside);
    ASSERT_EQ(r.members.size(), 11u);
    for (const auto& [h, ok] : r.members) EXPECT_TRUE(ok) << h;
    EXPECT_GT(r.samples, 0u);
    EXPECT_TRUE(r.samples_ok);
    EXPECT_TRUE(r.target_in_ideal);
    EXPECT_TRUE(r.refutation) << r.refutation_detail;
    EXPECT_TRUE(r.passed());
}

TEST(KmRing, ProbeYandYOnePlusX) {
    auto r = km_intersection_probe(K("Y"), K("Y*(1+X)"));
    EXPECT_TRUE(r.passed()) << r.refutation_detail;
}

TEST(KmRing, ProbeComparable) {
    EXPECT_THROW(km_intersection_probe(K("Y"), K("Y^2")), PreconditionError);
    EXPECT_THROW(km_intersection_probe(K("1+Y"), K("Y")), PreconditionError);
}

TEST(KmRing, SpanTest) {
    EXPECT_TRUE(in_k_span({K("X"), K("1/X")}, K("2*X - 3/X")));
    EXPECT_FALSE(in_k_span({K("X"), K("1/X")}, K("X^2")));
    EXPECT_FALSE(in_k_span({}, K("1")));
}
