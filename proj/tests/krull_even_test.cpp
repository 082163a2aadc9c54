#include <gtest/gtest.h>

#include <random>

#include "bidlab/krull_even.hpp"
#include "support.hpp"

using namespace bidlab;
using namespace bidlab::testing;

namespace {

ContextPtr xs(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    return make_context(names);
}

Polynomial P(const ContextPtr& c, const char* s) { return Polynomial::parse(c, s); }

std::vector<Polynomial> Ps(const ContextPtr& c, std::initializer_list<const char*> v) {
    std::vector<Polynomial> out;
    for (auto s : v) out.push_back(P(c, s));
    return out;
}

// independent product-parity check: expand by hand through the term map
bool all_terms_even(const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) {
        std::int64_t d = 0;
        for (auto e : m) d += e;
        if (d % 2) return false;
    }
    return true;
}

}  // namespace

TEST(Companion, Examples) {
    auto c = xs(3);
    auto h = P(c, "X1 + X2*X3");
    EXPECT_EQ(companion(h), P(c, "X2*X3 - X1"));
    EXPECT_EQ(h * companion(h), P(c, "X2^2*X3^2 - X1^2"));
    auto g = P(c, "X1 + X2 + X1*X2");
    EXPECT_EQ(companion(g), P(c, "X1*X2 - X1 - X2"));
    EXPECT_TRUE(all_terms_even(g * companion(g)));
    EXPECT_THROW(companion(P(c, "X1*X2")), PreconditionError);
    EXPECT_THROW(companion(P(c, "X1 + X2")), PreconditionError);
}

TEST(Companion, UniqueUpToScalarAmongSmallMultipliers) {
    auto c = xs(2);
    auto small = small_polys(c, 2);
    for (const char* hs : {"X1 + X2^2", "X1^2 + X2", "X1 + X1*X2 + 1"}) {
        auto h = P(c, hs);
        auto hp = companion(h);
        int found = 0;
        for (const auto& g : small) {
            if (g.total_degree() > h.total_degree() || !all_terms_even(h * g)) continue;
            ++found;
            // g = q h' for a scalar q
            auto q = exact_divide(g, hp);
            ASSERT_TRUE(q && q->is_constant()) << hs << " multiplier " << g.str();
        }
        EXPECT_GE(found, 1) << hs;
    }
}

TEST(EvenElement, RejectsOdd) {
    auto c = xs(2);
    EXPECT_NO_THROW(EvenElement(P(c, "X1^2 + X1*X2 + 1")));
    EXPECT_THROW(EvenElement(P(c, "X1 + X2^2")), ValidationError);
}

TEST(KrullClassify, NotFgWithFreshInstances) {
    auto c = xs(3);
    auto v = classify_even_intersection(Ps(c, {"X1*X2", "X1*X3"}));
    EXPECT_EQ(v.kind, VerdictKind::NotFg);
    EXPECT_EQ(v.lambda, P(c, "X1*X2*X3"));
    ASSERT_EQ(v.instances.size(), 3u);
    EXPECT_EQ(v.fresh, (std::vector<std::string>{"X4", "X5", "X6"}));
    auto e = xs(6);
    EXPECT_EQ(v.instances[0], P(e, "X1*X2*X3*X4"));
    EXPECT_EQ(v.instances[2], P(e, "X1*X2*X3*X6"));
    // independent re-check: each instance over each input is a monomial of even degree, and no
    // instance over another is a polynomial
    for (const auto& inst : v.instances) {
        for (auto s : {"X1*X2", "X1*X3"}) {
            auto q = exact_divide(inst, P(e, s));
            ASSERT_TRUE(q);
            EXPECT_TRUE(all_terms_even(*q));
        }
        for (const auto& other : v.instances)
            if (!(other == inst)) { EXPECT_FALSE(exact_divide(other, inst)); }
    }
}

TEST(KrullClassify, Cases) {
    auto c4 = xs(4);
    struct Case {
        std::vector<const char*> f;
        VerdictKind kind;
        const char* lambda;
    };
    std::vector<Case> cases = {
        {{"X1*X2", "X3*X4"}, VerdictKind::Principal, "X1*X2*X3*X4"},
        {{"X1^2", "X1*X2"}, VerdictKind::NotFg, "X1^2*X2"},
        {{"X3*(X1+X2)", "X3*X4"}, VerdictKind::NotFg, "X3*X4*(X1+X2)"},
        {{"(X1-X2)*(X1+X2)", "X2*(X1+X2)"}, VerdictKind::NotFg, "(X1-X2)*(X1+X2)*X2"},
        {{"X1*X2", "X3*X4", "X1*X3"}, VerdictKind::Principal, "X1*X2*X3*X4"},
        {{"(X2^4-X1^2)*X1^2", "(X2^4-X1^2)*X2*X3"}, VerdictKind::Principal, "(X2^4-X1^2)*X1^2*X2*X3"},
    };
    for (const auto& cs : cases) {
        std::vector<Polynomial> f;
        for (auto s : cs.f) f.push_back(P(c4, s));
        auto v = classify_even_intersection(f);
        EXPECT_EQ(v.kind, cs.kind) << cs.f[0];
        EXPECT_EQ(v.lambda, primitive_normalize(P(c4, cs.lambda))) << cs.f[0];
        for (const auto& p : f) EXPECT_TRUE(exact_divide(v.lambda, p));
    }
}

TEST(KrullClassify, Errors) {
    auto c = xs(3);
    EXPECT_THROW(classify_even_intersection(Ps(c, {"X1", "X2*X3"})), ValidationError);
    EXPECT_THROW(classify_even_intersection(Ps(c, {"X1*X2", "X1^3*X2"})), PreconditionError);
    EXPECT_NO_THROW(classify_even_intersection(Ps(c, {"X1^2", "X2^2"})));
    EXPECT_FALSE(divides_in_D(P(c, "X1*X2"), P(c, "X1^2*X2")));
}

TEST(Oracle, SingleGeneratorGivesMultiples) {
    auto c = xs(2);
    auto o = bounded_intersection_oracle(Ps(c, {"X1*X2"}), 4);
    ASSERT_TRUE(o.graded);
    ASSERT_EQ(o.pieces.size(), 3u);
    EXPECT_EQ(o.pieces[0].basis.size(), 1u);  // degree 2
    EXPECT_EQ(o.pieces[1].basis.size(), 0u);  // degree 3
    EXPECT_EQ(o.pieces[2].basis.size(), 3u);  // degree 4: X1X2 times X1^2, X1X2, X2^2
}

TEST(Oracle, TwoCoprimeGivesLambdaMultiples) {
    auto c = xs(3);
    auto o = bounded_intersection_oracle(Ps(c, {"X1*X2", "X1*X3"}), 4);
    const auto& d4 = o.pieces.back();
    ASSERT_EQ(d4.degree, 4);
    ASSERT_EQ(d4.basis.size(), 3u);
    std::set<std::string> got;
    for (const auto& p : d4.basis) got.insert(p.str());
    for (auto s : {"X1*X2*X3*X1", "X1*X2*X3*X2", "X1*X2*X3*X3"}) EXPECT_TRUE(got.count(P(c, s).str())) << s;
}

TEST(Oracle, AgreesWithClassifier) {
    auto c4 = xs(4);
    std::vector<std::vector<const char*>> cases = {
        {"X1*X2", "X1*X3"},
        {"X1*X2", "X3*X4"},
        {"X1^2", "X1*X2"},
        {"X3*(X1+X2)", "X3*X4"},
        {"(X1-X2)*(X1+X2)", "X2*(X1+X2)"},
        {"X1*X2", "X3*X4", "X1*X3"},
        {"(X2^4-X1^2)*X1^2", "(X2^4-X1^2)*X2*X3"},
    };
    for (const auto& cs : cases) {
        std::vector<Polynomial> f;
        for (auto s : cs) f.push_back(P(c4, s));
        auto v = classify_even_intersection(f);
        auto o = bounded_intersection_oracle(f, v.lambda.total_degree() + 2);
        auto a = check_oracle_agreement(v, o);
        std::string notes;
        for (const auto& n : a.notes) notes += n + "; ";
        EXPECT_TRUE(a.agree) << cs[0] << " " << notes;
    }
}

TEST(LinearAlgebra, IntersectionAgainstBrute) {
    // random small subspaces of Q^4 with entries in {-1,0,1}; the intersection is checked by
    // membership of each basis vector and by the dimension formula
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> e(-1, 1);
    for (int t = 0; t < 30; ++t) {
        Matrix a(2, Row(4)), b(2, Row(4));
        for (auto& r : a)
            for (auto& x : r) x = e(rng);
        for (auto& r : b)
            for (auto& x : r) x = e(rng);
        auto i = intersect_rowspaces(a, b);
        for (const auto& r : i) {
            EXPECT_TRUE(in_rowspace(a, r));
            EXPECT_TRUE(in_rowspace(b, r));
        }
        Matrix sum = a;
        sum.insert(sum.end(), b.begin(), b.end());
        EXPECT_EQ(i.size() + rank(sum), rank(a) + rank(b));
    }
}
