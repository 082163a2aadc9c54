#include <gtest/gtest.h>

#include "bidlab/properties.hpp"
#include "support.hpp"

using namespace bidlab;
using namespace bidlab::testing;

namespace {

Ctx ns(std::vector<std::int64_t> g) { return make_ctx(NumericalSemigroup(std::move(g))); }

// x in J^-1 iff x + g in S for every generator, with S = <2,3> decided by coin search
bool brute_in_inverse(long x, const std::vector<long>& J) {
    for (long g : J)
        if (!coin_reachable(x + g, {2, 3})) return false;
    return true;
}

}  // namespace

TEST(Properties, FullSuitePasses) {
    for (std::uint64_t seed : {1u, 7u}) {
        auto rows = run_property_suite(seed, 30);
        EXPECT_EQ(rows.size(), 3u * 9u + 2u);
        for (const auto& r : rows) {
            EXPECT_TRUE(r.passed()) << r.ring << " " << r.name << ": " << r.counterexample.value_or("");
            EXPECT_GE(r.samples, 30u) << r.ring << " " << r.name;
            EXPECT_GT(r.checks, 0u);
        }
    }
}

TEST(Properties, Deterministic) {
    auto a = run_property_suite(3, 10), b = run_property_suite(3, 10);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].name, b[i].name);
        EXPECT_EQ(a[i].checks, b[i].checks);
        EXPECT_EQ(a[i].counterexample, b[i].counterexample);
    }
    std::mt19937_64 r1(5), r2(5), r3(6);
    PropertyRing R{"<2,3>", ns({2, 3}), {12, 1}};
    auto i1 = detail::random_ideals(R.ctx, 20, R.window, r1);
    EXPECT_EQ(i1, detail::random_ideals(R.ctx, 20, R.window, r2));
    EXPECT_NE(i1, detail::random_ideals(R.ctx, 20, R.window, r3));
}

TEST(Properties, RandomIdealsAreReducedAndIntegral) {
    std::mt19937_64 rng(11);
    auto c = ns({3, 4, 5});
    for (const auto& I : detail::random_ideals(c, 50, {12, 1}, rng)) {
        ASSERT_FALSE(I.empty());
        for (const auto& g : I) EXPECT_TRUE(c->member(g) && !g.is_zero());
        for (const auto& a : I)
            for (const auto& b : I)
                if (a != b) { EXPECT_FALSE(c->divides(a, b)); }
    }
}

TEST(Properties, XiEqualsWFailsOnTwoThree) {
    // the harness reports failures: <2,3> is not integrally closed
    auto o = xi_equals_w({"<2,3>", ns({2, 3}), {12, 1}}, 10, 1);
    EXPECT_FALSE(o.passed());
    EXPECT_NE(o.counterexample->find("xi witness"), std::string::npos);
}

TEST(Properties, NaturalsClosuresAreTrivial) {
    // N: every nonzero ideal is (g), so both closures give back x >= g
    auto c = ns({1});
    TraceCatalog cat(c, {10, 1}, TraceCatalog::default_kmax(*c));
    for (long g = 1; g <= 5; ++g)
        for (long x = -3; x <= 10; ++x) {
            auto I = ints({g});
            EXPECT_EQ(xi_closure(c, I, Exponent::scalar(x), {10, 1}, &cat).member, x >= g) << g << " " << x;
            EXPECT_EQ(w_closure(c, I, Exponent::scalar(x), {10, 1}).member, x >= g) << g << " " << x;
        }
}

TEST(Properties, InverseMatchesBruteOnTwoThree) {
    auto c = ns({2, 3});
    std::mt19937_64 rng(2);
    for (const auto& J : detail::random_ideals(c, 40, {12, 1}, rng)) {
        std::vector<long> js;
        for (const auto& g : J) js.push_back(to_i64(num(g[0])));
        auto inv = ideal_inverse(c, J);
        for (long x = -14; x <= 14; ++x) EXPECT_EQ(inv.contains(Exponent::scalar(x)), brute_in_inverse(x, js)) << x;
    }
}

TEST(Properties, VAxiomsOnEvenDegree) {
    std::mt19937_64 rng(4);
    PropertyRing R{"even-degree(2)", make_ctx(EvenDegree(2)), {4, 1}};
    auto ideals = detail::random_ideals(R.ctx, 25, R.window, rng);
    for (const auto& o : v_axioms(R, ideals, rng)) EXPECT_TRUE(o.passed()) << o.name << ": " << o.counterexample.value_or("");
    EXPECT_TRUE(trace_idempotent(R, ideals).passed());
}
