#pragma once

// Named check batteries and the report document. Every check is deterministic for fixed options;
// wall-clock timings are kept apart from the body so bodies can be compared byte for byte.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bidlab/bid.hpp"
#include "bidlab/construction_a.hpp"
#include "bidlab/ideal.hpp"
#include "bidlab/km_ring.hpp"
#include "bidlab/krull_even.hpp"
#include "bidlab/parallel.hpp"
#include "bidlab/properties.hpp"
#include "bidlab/rif.hpp"
#include "bidlab/ring_spec.hpp"

namespace bidlab {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportOptions {
    std::string suite = "paper-examples";
    std::optional<Rational> bound;  // overrides each check's default window bound
    std::uint64_t seed = 1;
    std::size_t samples = 100;
    std::optional<std::string> only;  // run a single check
};

enum class CheckStatus { Pass, Fail, Inconclusive };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

struct CheckOutcome {
    std::string name;
    std::string title;
    CheckStatus status = CheckStatus::Fail;
    nlohmann::json certificate = nlohmann::json::object();
    std::string failure;
    std::string reproduce;
    double seconds = 0;
};

struct ReportDocument {
    ReportOptions options;
    std::vector<RingSpec> rings;
    std::vector<CheckOutcome> checks;

    bool passed() const {
        return !checks.empty() &&
               std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.status == CheckStatus::Pass; });
    }

    nlohmann::json body() const {
        nlohmann::json j;
        j["tool"] = "bidlab";
        j["version"] = kToolVersion;
        j["suite"] = options.suite;
        j["seed"] = options.seed;
        j["bound"] = options.bound ? nlohmann::json(to_string(*options.bound)) : nlohmann::json(nullptr);
        j["rings"] = nlohmann::json::array();
        for (const auto& r : rings) j["rings"].push_back(r.to_json());
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json e{{"name", c.name}, {"title", c.title}, {"status", to_string(c.status)}, {"certificate", c.certificate}};
            if (c.status != CheckStatus::Pass) {
                e["failure"] = c.failure;
                e["reproduce"] = c.reproduce;
            }
            j["checks"].push_back(std::move(e));
        }
        j["overall"] = passed() ? "PASS" : "FAIL";
        return j;
    }

    nlohmann::json to_json(bool timing = true) const {
        nlohmann::json j = body();
        if (timing) {
            nlohmann::json t = nlohmann::json::object();
            for (const auto& c : checks) t[c.name] = c.seconds;
            j["timing"] = t;
        }
        return j;
    }

    std::string text(bool timing = true) const {
        std::string s = std::string("bidlab ") + kToolVersion + " suite " + options.suite + " seed " + std::to_string(options.seed);
        if (options.bound) s += " bound " + to_string(*options.bound);
        s += "\n";
        for (const auto& c : checks) {
            s += c.name + " " + to_string(c.status) + " " + c.title + "\n";
            if (c.status != CheckStatus::Pass) {
                s += "    " + c.failure + "\n";
                s += "    reproduce: " + c.reproduce + "\n";
            }
        }
        s += std::string("overall ") + (passed() ? "PASS" : "FAIL") + "\n";
        if (timing)
            for (const auto& c : checks) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.3f", c.seconds);
                s += "time " + c.name + " " + buf + "s\n";
            }
        return s;
    }
};

namespace detail {

inline nlohmann::json exps_json(const std::vector<Exponent>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : v) a.push_back(e.str());
    return a;
}

inline RingSpec spec(const char* text) { return parse_ring_spec(text); }

inline const char* kTwoThree = R"({"family":"numerical_semigroup","generators":[2,3]})";
inline const char* kThreeFourFive = R"({"family":"numerical_semigroup","generators":[3,4,5]})";
inline const char* kNaturals = R"({"family":"numerical_semigroup","generators":[1]})";
inline const char* kHochster = R"({"family":"root_family","base":3,"seed":2})";
inline const char* kEven = R"({"family":"even_degree","variables":2})";
inline const char* kConstructionA = R"({"family":"construction_a"})";
inline const char* kKm = R"({"family":"km"})";
inline const char* kRifSquarefree = R"({"family":"rif","ideal":[1],"subset":"squarefree"})";
inline const char* kRifRational = R"({"family":"rif","ideal":[1],"subset":"rational-powers"})";

inline Rational bound_or(const ReportOptions& o, const Rational& fallback) { return o.bound.value_or(fallback); }

inline std::vector<Exponent> scalars(std::initializer_list<long> v) {
    std::vector<Exponent> out;
    for (long x : v) out.push_back(Exponent::scalar(x));
    return out;
}

/// Collects named sub-checks; the first failing one becomes the check's failure text.
struct Tally {
    CheckOutcome& out;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            out.failure = what;
        }
    }
    void finish(bool inconclusive = false) {
        out.status = ok ? CheckStatus::Pass : inconclusive ? CheckStatus::Inconclusive : CheckStatus::Fail;
    }
};

inline void check_a1(const ReportOptions& o, CheckOutcome& out) {
    out.title = "intersect(2,3) in <2,3> is FG_NON_PRINCIPAL {5,6}, complete";
    auto ctx = spec(kTwoThree).ctx();
    Rational b = bound_or(o, 10);
    auto f = intersect_principals(ctx, scalars({2, 3}));
    auto g = minimal_generators_up_to(f, b);
    auto v = classify_finiteness(f, b);
    out.certificate = {{"verdict", v.str()}, {"generators", exps_json(g.gens)}, {"complete", g.complete}, {"bound", to_string(b)}};
    Tally t{out};
    t.expect(v.kind == VerdictKind::FgNonPrincipal, "verdict " + v.str());
    t.expect(join(g.gens) == "5, 6", "generators " + join(g.gens));
    t.expect(g.complete, "window not complete");
    t.finish(v.kind == VerdictKind::Inconclusive);
}

inline void check_a2(const ReportOptions& o, CheckOutcome& out) {
    out.title = "(4,5)_xi = m in <2,3> with witness m; m_xi contains 1";
    auto ctx = spec(kTwoThree).ctx();
    const Rational b = bound_or(o, 12);
    const Window w{b, 1};
    TraceCatalog cat(ctx, w, TraceCatalog::default_kmax(*ctx));
    auto I = scalars({4, 5});
    auto r = xi_closure(ctx, I, Exponent::scalar(2), w, &cat);
    std::vector<Exponent> closure, maximal;
    for (const auto& x : ctx->monoid.grid(Exponent::scalar(-b), b, 1)) {
        if (xi_closure(ctx, I, x, w, &cat).member) closure.push_back(x);
        if (!x.is_zero() && ctx->member(x)) maximal.push_back(x);
    }
    auto escape = xi_closure(ctx, scalars({2, 3}), Exponent::scalar(1), w, &cat);
    out.certificate = {{"xi(4,5) at 2", r.member},
                       {"witness", exps_json(r.witness)},
                       {"closure window", exps_json(closure)},
                       {"m window", exps_json(maximal)},
                       {"xi(m) at 1", escape.member},
                       {"m witness", exps_json(escape.witness)},
                       {"bound", to_string(b)}};
    Tally t{out};
    t.expect(r.member, "2 not in (4,5)_xi");
    t.expect(join(r.witness) == "2, 3", "witness (" + join(r.witness) + ") is not m");
    t.expect(closure == maximal, "closure window (" + join(closure) + ") differs from m");
    t.expect(escape.member, "1 not in m_xi");
    t.finish();
}

inline void check_a3(const ReportOptions& o, CheckOutcome& out) {
    out.title = "Hochster ring: J_n = (1, 2/3, ..., 2/3^n) are trace ideals and not GV, n = 1..3";
    auto spec_h = spec(kHochster);
    auto ctx = spec_h.ctx();
    const auto* rf = ctx->monoid.as<RootFamily>();
    Tally t{out};
    out.certificate = nlohmann::json::array();
    for (unsigned n = 1; n <= 3; ++n) {
        std::vector<Exponent> J{Exponent::scalar(1)};
        for (unsigned k = 1; k <= n; ++k) J.push_back(Exponent::scalar(Rational(2, to_i64(ipow(Integer(3), k)))));
        const Integer cap = ipow(Integer(3), n + 3);
        const Window w{bound_or(o, 3), cap};
        auto tr = is_trace_ideal(ctx, J, w);
        auto gv = is_GV(ctx, J, w);
        nlohmann::json e{{"n", n}, {"J", exps_json(J)}, {"cap", cap.str()}, {"trace", tr.trace}, {"exact", tr.exact}, {"gv", gv.gv}};
        const std::string tag = "n = " + std::to_string(n) + ": ";
        t.expect(tr.trace && tr.exact, tag + "not certified as a trace ideal");
        t.expect(!gv.gv && gv.witness.has_value(), tag + "no GV witness");
        if (gv.witness) {
            const Rational v = (*gv.witness)[0];
            e["gv witness"] = gv.witness->str();
            // v outside M, v + J inside M
            bool ok = !rf->member(v);
            for (const auto& g : J) ok = ok && rf->member(v + g[0]);
            t.expect(ok, tag + "witness " + gv.witness->str() + " does not verify");
            if (n == 1) t.expect(v == Rational(1, 3), tag + "witness " + gv.witness->str() + " is not 1/3");
        }
        out.certificate.push_back(e);
    }
    t.finish();
}

inline void check_a4(const ReportOptions&, CheckOutcome& out) {
    out.title = "even-degree Krull domain: classifier agrees with the bounded intersection oracle";
    auto ctx = make_context({"X1", "X2", "X3", "X4"});
    const std::vector<std::vector<const char*>> cases = {
        {"X1*X2", "X1*X3"},
        {"X1*X2", "X3*X4"},
        {"X1^2", "X1*X2"},
        {"X3*(X1+X2)", "X3*X4"},
        {"(X1-X2)*(X1+X2)", "X2*(X1+X2)"},
        {"X1*X2", "X3*X4", "X1*X3"},
        {"(X2^4-X1^2)*X1^2", "(X2^4-X1^2)*X2*X3"},
    };
    Tally t{out};
    out.certificate = nlohmann::json::array();
    for (const auto& cs : cases) {
        std::vector<Polynomial> f;
        std::string label;
        for (auto s : cs) {
            f.push_back(Polynomial::parse(ctx, s));
            label += (label.empty() ? "" : ", ") + std::string(s);
        }
        auto v = classify_even_intersection(f);
        auto oracle = bounded_intersection_oracle(f, v.lambda.total_degree() + 2);
        auto a = check_oracle_agreement(v, oracle);
        nlohmann::json e{{"inputs", label}, {"verdict", v.str()}, {"lambda", v.lambda.str()}, {"oracle agrees", a.agree}};
        t.expect(a.agree, "(" + label + "): oracle disagrees");
        if (v.kind == VerdictKind::NotFg) {
            nlohmann::json inst = nlohmann::json::array();
            for (const auto& p : v.instances) inst.push_back(p.str());
            e["instances"] = inst;
            bool irredundant = v.instances.size() == 3;
            for (std::size_t i = 0; i < v.instances.size(); ++i)
                for (std::size_t j = 0; j < v.instances.size(); ++j)
                    if (i != j && divides_in_D(v.instances[i], v.instances[j])) irredundant = false;
            t.expect(irredundant, "(" + label + "): instances are redundant");
        }
        if (label == "X1*X2, X1*X3")
            t.expect(v.kind == VerdictKind::NotFg && v.lambda == Polynomial::parse(ctx, "X1*X2*X3"), "(X1*X2, X1*X3): " + v.str());
        if (label == "X1*X2, X3*X4") t.expect(v.kind == VerdictKind::Principal, "(X1*X2, X3*X4): " + v.str());
        out.certificate.push_back(e);
    }
    t.finish();
}

inline void check_a5(const ReportOptions&, CheckOutcome& out) {
    out.title = "ring A: the triple intersection witness and the irredundant pairwise family, K = 10";
    auto r = verify_remark_triple(10);
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
    out.certificate = {{"checks", checks.size()}, {"family size", r.family.size()}, {"first checks", nlohmann::json::array()}};
    for (std::size_t i = 0; i < std::min<std::size_t>(6, r.checks.size()); ++i) out.certificate["first checks"].push_back(r.checks[i].name);
    Tally t{out};
    if (auto f = r.first_failure()) t.expect(false, "check failed: " + *f);
    t.finish();
}

inline void check_a6(const ReportOptions&, CheckOutcome& out) {
    out.title = "R(I,F): closed-form membership, witness family, complete integral closure, integrality";
    Tally t{out};
    auto sq = spec(kRifSquarefree).rif();
    auto rp = spec(kRifRational).rif();
    auto M = [](std::int64_t k, Exponent a) { return RifMonomial{k, std::move(a)}; };
    auto V = [](std::initializer_list<long> v) {
        Exponent e;
        for (long x : v) e.c.push_back(x);
        return e;
    };
    auto S = [](long p, long q) { return Exponent::scalar(Rational(p, q)); };

    std::size_t grid_sq = 0, grid_rp = 0;
    for (std::int64_t k = 0; k <= 3; ++k) {
        for (long x = 0; x <= 4; ++x)
            for (long y = 0; x + y <= 4; ++y)
                for (long z = 0; x + y + z <= 4; ++z) {
                    ++grid_sq;
                    auto m = M(k, V({x, y, z}));
                    t.expect(rif_member(sq, m) == rif_member_by_search(sq, m), "squarefree mismatch at " + m.str());
                }
        for (long q = 1; q <= 12; ++q)
            for (long p = 0; p <= 4 * q; ++p) {
                if (std::gcd(p, q) != 1 && !(p == 0 && q == 1)) continue;
                ++grid_rp;
                auto m = M(k, S(p, q));
                t.expect(rif_member(rp, m) == rif_member_by_search(rp, m), "rational mismatch at " + m.str());
            }
    }

    auto fam = sbid_witness_family(sq, {M(1, V({1, 0})), M(1, V({0, 1}))}, 10);
    nlohmann::json elems = nlohmann::json::array();
    for (const auto& e : fam.elements) elems.push_back(e.str());
    t.expect(fam.elements.size() == 10, "witness family has " + std::to_string(fam.elements.size()) + " elements");

    std::size_t escapes = 0;
    std::int64_t worst = 0;
    for (int which = 0; which < 2; ++which) {
        const auto& D = which == 0 ? sq : rp;
        std::vector<RifMonomial> xs =
            which == 0 ? std::vector<RifMonomial>{M(0, V({1, 0})), M(0, V({1, 1})), M(0, V({0, 1})), M(1, V({2, 0})), M(0, V({2, 1}))}
                       : std::vector<RifMonomial>{M(0, S(5, 6)), M(0, S(2, 3)), M(0, S(3, 4)), M(1, S(5, 2)), M(0, S(1, 1))};
        for (std::int64_t k = 0; k <= 3; ++k)
            for (const auto& x : xs) {
                auto d = which == 0 ? M(k, V({0, 0})) : M(k, S(0, 1));
                auto n = cic_escape_probe(D, d, x, 5);
                t.expect(n.has_value(), "no escape within 5 for d = " + d.str() + ", x = " + x.str());
                if (n) {
                    ++escapes;
                    worst = std::max(worst, *n);
                }
            }
    }

    auto iw = integrality_witness(RifRing(NumericalSemigroup({1}), {2}, FFamily(FamilyKind::RationalPowers)));
    auto none = integrality_witness(RifRing(NumericalSemigroup({1}), {2}, FFamily(FamilyKind::Squarefree)));
    t.expect(iw && iw->element == M(1, S(1, 4)) && iw->e == 2, "integrality witness for I = (a^2) is not (a*x^(1/4), 2)");
    t.expect(!none, "squarefree family returned an integrality witness");

    out.certificate = {{"squarefree grid", grid_sq},
                       {"rational grid", grid_rp},
                       {"witness family", elems},
                       {"quotient checks", fam.quotient_checks},
                       {"redundancy checks", fam.redundancy_checks},
                       {"escape cases", escapes},
                       {"largest escape n", worst},
                       {"integrality witness", iw ? iw->element.str() + ", e = " + std::to_string(iw->e) : "none"}};
    t.finish();
}

inline void check_a7(const ReportOptions& o, CheckOutcome& out) {
    out.title = "property suites at " + std::to_string(o.samples) + " samples";
    Tally t{out};
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : run_property_suite(o.seed, o.samples)) {
        rows.push_back({{"ring", p.ring}, {"property", p.name}, {"samples", p.samples}, {"checks", p.checks}, {"passed", p.passed()}});
        if (!p.passed()) t.expect(false, p.ring + " " + p.name + ": " + *p.counterexample);
    }
    out.certificate = rows;
    t.finish();
}

inline void check_a8(const ReportOptions& o, CheckOutcome& out) {
    out.title = "<2,3> fails xi = w and SBID; N passes both; t-local probes find nothing";
    Tally t{out};
    bool inconclusive = false;
    auto tt = spec(kTwoThree).ctx();
    auto nat = spec(kNaturals).ctx();

    auto xw23 = xi_equals_w_probe(tt, 20, bound_or(o, 12), o.seed);
    auto ws23 = witness_search(tt, 2, bound_or(o, 8));
    auto xwN = xi_equals_w_probe(nat, 20, bound_or(o, 12), o.seed);
    auto wsN = witness_search(nat, 2, bound_or(o, 8));
    if (xw23.pass || !ws23.sbid_violated()) inconclusive = true;
    t.expect(!xw23.pass, "<2,3>: no xi != w counterexample found");
    t.expect(ws23.sbid_violated(), "<2,3>: no SBID violation found");
    t.expect(xwN.pass, "N: xi != w at " + (xwN.x ? xwN.x->str() : std::string("?")));
    t.expect(!wsN.sbid_violated(), "N: SBID violation found");

    nlohmann::json tl = nlohmann::json::array();
    for (auto* text : {kTwoThree, kThreeFourFive, kNaturals}) {
        auto s = spec(text);
        s.localized = true;
        auto r = t_local_probe(s.ctx(), bound_or(o, 12));
        tl.push_back({{"ring", s.ctx()->monoid.describe()}, {"outcome", r.none_found ? "NONE-FOUND" : "FOUND"}, {"bound", to_string(r.bound)}});
        t.expect(r.none_found, s.ctx()->monoid.describe() + ": t-local probe found a proper GV ideal");
    }
    nlohmann::json ce = nullptr;
    if (!xw23.pass) ce = {{"ideal", exps_json(*xw23.ideal)}, {"x", xw23.x->str()}, {"xi witness", exps_json(xw23.xi_witness)}};
    nlohmann::json viol = nullptr;
    if (ws23.bid_violated())
        viol = {{"tuple", exps_json(ws23.violations.front().tuple)}, {"verdict", ws23.violations.front().verdict.str()}};
    out.certificate = {{"<2,3> xi != w", ce},
                       {"<2,3> first violation", viol},
                       {"<2,3> violations", ws23.violations.size()},
                       {"N xi = w pairs", xwN.pairs_tested},
                       {"N tuples", wsN.tuples_examined},
                       {"t-local", tl}};
    t.finish(inconclusive);
}

inline void check_a9(const ReportOptions&, CheckOutcome& out) {
    out.title = "k + m: (Y) & (YX) contains Y^2 X^h for h in [-5,5] and is not finitely generated";
    auto r = km_intersection_probe(km_element("Y"), km_element("Y*X"));
    nlohmann::json members = nlohmann::json::array();
    for (const auto& [h, ok] : r.members) members.push_back({{"h", h}, {"member", ok}});
    out.certificate = {{"Y outside", r.a1_outside},   {"members", members},
                       {"samples", r.samples},        {"samples ok", r.samples_ok},
                       {"h*", r.h_star},              {"target in ideal", r.target_in_ideal},
                       {"refutation", r.refutation}, {"detail", r.refutation_detail}};
    Tally t{out};
    t.expect(r.passed(), r.refutation_detail);
    t.finish();
}

using CheckFn = std::function<void(const ReportOptions&, CheckOutcome&)>;

inline std::vector<std::pair<std::string, CheckFn>> example_checks() {
    return {{"A1", check_a1}, {"A2", check_a2}, {"A3", check_a3}, {"A4", check_a4}, {"A5", check_a5},
            {"A6", check_a6}, {"A7", check_a7}, {"A8", check_a8}, {"A9", check_a9}};
}

inline std::string reproduce_line(const ReportOptions& o, const std::string& name) {
    std::string s = "bidlab report --suite " + o.suite + " --only '" + name + "' --seed " + std::to_string(o.seed);
    if (o.bound) s += " --bound " + to_string(*o.bound);
    return s;
}

inline void run_timed(const CheckFn& fn, const ReportOptions& o, CheckOutcome& out) {
    auto t0 = std::chrono::steady_clock::now();
    try {
        fn(o, out);
    } catch (const std::exception& e) {
        out.status = CheckStatus::Fail;
        out.failure = std::string("error: ") + e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.reproduce = reproduce_line(o, out.name);
}

}  // namespace detail

inline std::vector<std::string> report_suites() { return {"paper-examples", "properties"}; }

/// Runs a battery. Checks execute in parallel and are merged in canonical name order.
inline ReportDocument run_report(const ReportOptions& o) {
    ReportDocument doc;
    doc.options = o;
    std::vector<std::pair<std::string, detail::CheckFn>> checks;
    if (o.suite == "paper-examples") {
        for (auto* s : {detail::kTwoThree, detail::kThreeFourFive, detail::kNaturals, detail::kHochster, detail::kEven,
                        detail::kConstructionA, detail::kKm, detail::kRifSquarefree, detail::kRifRational})
            doc.rings.push_back(parse_ring_spec(s));
        checks = detail::example_checks();
    } else if (o.suite == "properties") {
        for (auto* s : {detail::kTwoThree, detail::kThreeFourFive, detail::kNaturals, detail::kEven})
            doc.rings.push_back(parse_ring_spec(s));
        // one check per property row; the suite itself runs once
        auto rows = run_property_suite(o.seed, o.samples);
        for (const auto& p : rows) {
            checks.emplace_back(p.ring + " / " + p.name, [p](const ReportOptions&, CheckOutcome& out) {
                out.title = std::to_string(p.samples) + " samples, " + std::to_string(p.checks) + " checks";
                out.certificate = {{"samples", p.samples}, {"checks", p.checks}};
                out.status = p.passed() ? CheckStatus::Pass : CheckStatus::Fail;
                if (!p.passed()) out.failure = "counterexample: " + *p.counterexample;
            });
        }
    } else {
        throw PreconditionError("unknown suite '" + o.suite + "'");
    }
    if (o.only) {
        std::erase_if(checks, [&](const auto& c) { return c.first != *o.only; });
        if (checks.empty()) throw PreconditionError("suite " + o.suite + " has no check named '" + *o.only + "'");
    }
    doc.checks = parallel_map(checks, [&](const std::pair<std::string, detail::CheckFn>& c) {
        CheckOutcome out;
        out.name = c.first;
        detail::run_timed(c.second, o, out);
        return out;
    });
    std::sort(doc.checks.begin(), doc.checks.end(), [](const CheckOutcome& a, const CheckOutcome& b) { return a.name < b.name; });
    return doc;
}

}  // namespace bidlab
