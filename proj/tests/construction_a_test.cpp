#include <gtest/gtest.h>

#include <random>

#include "bidlab/construction_a.hpp"

using namespace bidlab;

namespace {

Polynomial L(const char* s) { return laurent_element(s); }

Polynomial mono(std::int64_t i, std::int64_t j, std::int64_t k = 0) { return Polynomial::term(construction_a_context(), {i, j, k}); }

// Independent description of D's monomials: x^i y^j lies in some R_n = k[x, y^2, y^3, y^2/x^n, y^3/x^n]
// (localized, but monomials only come from the generators). Brute search over products of generators
// with n fixed large enough.
bool brute_monomial_in_D(std::int64_t i, std::int64_t j) {
    const std::int64_t n = 64;
    // y^j = (y^2)^a (y^3)^b; each y^2 or y^3 factor may carry 1/x^n, x^m fills the rest
    for (std::int64_t a = 0; 2 * a <= j; ++a) {
        if ((j - 2 * a) % 3) continue;
        std::int64_t b = (j - 2 * a) / 3;
        std::int64_t factors = a + b;
        // choose t factors with 1/x^n: reachable x-exponents are m - t n, m >= 0
        for (std::int64_t t = 0; t <= factors; ++t)
            if (i + t * n >= 0) return true;
    }
    return false;
}

}  // namespace

TEST(ConstructionA, InD) {
    EXPECT_TRUE(in_D(L("y^2/x^5"), true));
    EXPECT_FALSE(in_D(L("1/x"), true));
    EXPECT_FALSE(in_D(L("y/x"), true));
    EXPECT_TRUE(in_D(L("x^3 + y^3/x^9 + 4"), true));
    EXPECT_THROW(in_D(L("z"), true), DomainError);
    EXPECT_TRUE(in_D(L("z*y^2 + z^2")));
    EXPECT_FALSE(in_D(L("z*y")));
}

TEST(ConstructionA, InDMatchesBruteOnMonomials) {
    for (std::int64_t i = -8; i <= 8; ++i)
        for (std::int64_t j = 0; j <= 9; ++j) EXPECT_EQ(in_D(mono(i, j), true), brute_monomial_in_D(i, j)) << i << " " << j;
}

TEST(ConstructionA, InQ) {
    EXPECT_TRUE(in_Q(L("y^3/x^7")));
    EXPECT_FALSE(in_Q(L("x")));
    EXPECT_FALSE(in_Q(L("y^2 + x")));
    EXPECT_THROW(in_Q(L("y^2*z")), DomainError);
}

TEST(ConstructionA, QuotientInA) {
    auto w = L("y^5*z*(z-y^2)*(z-y^3)");
    auto q = quotient_in_D_z(w, L("y^5*(z-y^3)"));
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, L("z*(z-y^2)"));
    auto q2 = quotient_in_D_z(w, L("y^2*z"));
    ASSERT_TRUE(q2);
    EXPECT_EQ(*q2, L("y^3*(z-y^2)*(z-y^3)"));
    for (const auto& [m, c] : q2->terms()) {
        std::int64_t j = m[1];
        EXPECT_TRUE(j == 3 || j == 5 || j == 6 || j == 8);
    }
    EXPECT_FALSE(quotient_in_A(L("y^2*z"), L("y^3")));
    EXPECT_THROW(quotient_in_A(L("y"), L("0")), DomainError);
}

TEST(ConstructionA, TripleIntersection) {
    for (std::size_t K : {3u, 10u}) {
        auto r = verify_remark_triple(K);
        for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
        EXPECT_EQ(r.family.size(), 2 * (K + 1));
        // 3 membership checks, 3 quotient checks, 2(K+1) family checks, 1 irredundancy check
        EXPECT_EQ(r.checks.size(), 3 + 3 + 2 * (K + 1) + 1);
    }
    EXPECT_THROW(verify_remark_triple(2), PreconditionError);
}

TEST(ConstructionA, MutatedWitnessFailsThirdIdeal) {
    auto r = verify_remark_triple(3, L("y^5*z*(z-y^2)"));
    EXPECT_FALSE(r.passed());
    ASSERT_TRUE(r.first_failure());
    EXPECT_EQ(*r.first_failure(), "w in (y^5*(z-y^3))");
    EXPECT_TRUE(r.checks[0].passed);
    EXPECT_TRUE(r.checks[1].passed);
}

TEST(ConstructionA, DIsMultiplicativeOnMonomials) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> ie(-6, 6), je(0, 6);
    int pairs = 0;
    for (int t = 0; t < 400; ++t) {
        auto a = mono(ie(rng), je(rng)), b = mono(ie(rng), je(rng));
        if (!in_D(a, true) || !in_D(b, true)) continue;
        ++pairs;
        EXPECT_TRUE(in_D(a * b, true)) << a.str() << " * " << b.str();
    }
    EXPECT_GT(pairs, 50);
}

TEST(ConstructionA, QIsAnIdealWindow) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> ie(-6, 6), je(0, 6);
    int checked = 0;
    for (int t = 0; t < 400; ++t) {
        auto q = mono(ie(rng), je(rng)), d = mono(ie(rng), je(rng));
        if (!in_Q(q)) continue;
        for (int n = 0; n <= 10; ++n) EXPECT_TRUE(in_D(q * mono(-n, 0), true)) << q.str() << " / x^" << n;
        if (!in_D(d, true)) continue;
        ++checked;
        EXPECT_TRUE(in_Q(q * d));
    }
    EXPECT_GT(checked, 20);
}

TEST(ConstructionA, OffendingTermsSurviveMultiplication) {
    // b has a y^1 term or a negative-x term with no y; c has a nonzero constant term; then bc is not in D
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> ie(-4, 4), je(0, 4), coef(-2, 2);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        auto b = mono(ie(rng), je(rng));
        if (in_D(b, true)) continue;
        Polynomial c = Polynomial::constant(construction_a_context(), 1 + (t % 3));
        for (int k = 0; k < 2; ++k) {
            int v = coef(rng);
            if (v) c += Polynomial::term(construction_a_context(), {ie(rng), 2 + je(rng), 0}, v);
        }
        ++checked;
        EXPECT_FALSE(in_D(b * c, true)) << b.str() << " * " << c.str();
    }
    EXPECT_GT(checked, 50);
}
