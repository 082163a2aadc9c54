#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bidlab/bidlab.hpp"

using namespace bidlab;
using nlohmann::json;

namespace {

struct Common {
    std::string bound;
    std::string cap;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string ring;
};

void add_common(CLI::App* sub, Common& c, bool ring) {
    sub->add_option("--bound", c.bound, "window bound (rational)");
    sub->add_option("--denominator-cap", c.cap, "lattice denominator for rational monoids");
    sub->add_option("--seed", c.seed, "seed for sampled searches");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "structured"}));
    if (ring) sub->add_option("--ring", c.ring, "ring spec file or inline JSON")->required();
}

RingSpec load_ring(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return parse_ring_spec(arg);
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot read ring spec '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ring_spec(ss.str());
}

Ctx monoid_ctx(const Common& c) {
    auto spec = load_ring(c.ring);
    if (!spec.is_monoid_ring()) throw PreconditionError(std::string("this command needs a monoid ring, got ") + to_string(spec.family));
    return spec.ctx();
}

std::vector<Exponent> exps(const std::vector<std::string>& v) {
    std::vector<Exponent> out;
    for (const auto& s : v) out.push_back(Exponent::parse(s));
    return out;
}

json exps_json(const std::vector<Exponent>& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(e.str());
    return a;
}

std::string paren(const std::vector<Exponent>& v) { return "(" + join(v) + ")"; }

/// Window from --bound / --denominator-cap, else the fallback.
Window window(const Common& c, const Rational& fallback_bound, const Integer& fallback_cap = 1) {
    Window w{fallback_bound, fallback_cap};
    if (!c.bound.empty()) w.bound = parse_rational(c.bound);
    if (!c.cap.empty()) w.cap = Integer(c.cap);
    return w;
}

/// Default window: the filter's exact window when known, else bound 12.
Window filter_window(const Common& c, const IdealFilter& f) {
    auto e = exact_window(f);
    return window(c, e ? e->bound : Rational(12), e ? e->cap : Integer(1));
}

void emit(const Common& c, const json& j, const std::string& text) {
    if (c.format == "structured")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

RifMonomial rif_monomial(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("rif monomial '" + s + "' must read k:alpha");
    std::int64_t k;
    try {
        k = std::stoll(s.substr(0, colon));
    } catch (const std::exception&) {
        throw ParseError("bad a-exponent in '" + s + "'");
    }
    return {k, Exponent::parse(s.substr(colon + 1))};
}

RifRing rif_ring(const Common& c) {
    auto spec = load_ring(c.ring);
    return spec.rif();
}

/// X1..Xn with n the largest index mentioned.
ContextPtr krull_context(const std::vector<std::string>& polys) {
    std::size_t n = 1;
    std::regex var("X([0-9]+)");
    for (const auto& p : polys)
        for (std::sregex_iterator it(p.begin(), p.end(), var), end; it != end; ++it)
            n = std::max<std::size_t>(n, std::stoul((*it)[1]));
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    return make_context(names);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact ideal calculus for Bezout intersection domains"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    int exit_code = 0;
    Common c;

    // intersect
    std::vector<std::string> inputs;
    auto* intersect = app.add_subcommand("intersect", "intersection of principal ideals");
    add_common(intersect, c, true);
    intersect->add_option("exponents", inputs, "exponents of the principal generators")->required();
    intersect->callback([&] {
        auto ctx = monoid_ctx(c);
        auto f = intersect_principals(ctx, exps(inputs));
        auto w = filter_window(c, f);
        auto g = minimal_generators_up_to(f, w);
        auto v = classify_finiteness(f, w.bound, c.cap.empty() ? std::nullopt : std::optional<Integer>(w.cap));
        json j{{"ring", ctx->monoid.describe()},
               {"operation", "intersect"},
               {"inputs", inputs},
               {"generators", exps_json(g.gens)},
               {"complete", g.complete},
               {"verdict", v.str()},
               {"bound", to_string(w.bound)},
               {"cap", w.cap.str()}};
        emit(c, j, "generators " + paren(g.gens) + (g.complete ? " complete" : " incomplete") + "\nverdict " + v.str() + "\n");
    });

    // closure
    std::string op, xtext;
    std::vector<std::string> gens;
    auto* closure = app.add_subcommand("closure", "v, t, w or xi closure of a monomial ideal");
    add_common(closure, c, true);
    closure->add_option("--op", op, "closure operation")->required()->check(CLI::IsMember({"v", "t", "w", "xi"}));
    closure->add_option("--x", xtext, "test a single exponent (w, xi)");
    closure->add_option("generators", gens, "generators of the ideal")->required();
    closure->callback([&] {
        auto ctx = monoid_ctx(c);
        auto I = exps(gens);
        json j{{"ring", ctx->monoid.describe()}, {"operation", "closure"}, {"op", op}, {"ideal", exps_json(I)}};
        std::string text;
        if (op == "v" || op == "t") {
            auto w = window(c, 12);
            auto cl = op == "v" ? v_closure(ctx, I, w) : t_closure(ctx, I, w);
            auto g = exact_generators(cl.filter, w);
            j["generators"] = exps_json(g.gens);
            j["exact"] = cl.exact && g.complete;
            text = op + "-closure " + paren(g.gens) + ((cl.exact && g.complete) ? "" : " (window)") + "\n";
        } else {
            auto w = window(c, 12);
            std::optional<TraceCatalog> cat;
            if (op == "xi") cat.emplace(ctx, w, TraceCatalog::default_kmax(*ctx));
            auto test = [&](const Exponent& x) {
                return op == "w" ? w_closure(ctx, I, x, w) : xi_closure(ctx, I, x, w, &*cat);
            };
            if (!xtext.empty()) {
                auto x = Exponent::parse(xtext);
                auto r = test(x);
                j["x"] = x.str();
                j["member"] = r.member;
                j["witness"] = exps_json(r.witness);
                j["monomial_relative"] = true;
                text = x.str() + (r.member ? " in " : " not in ") + paren(I) + "_" + op +
                       (r.member ? ", witness J = " + paren(r.witness) : "") + "\n";
            } else {
                Exponent lo = coordwise_min(I);
                for (auto& v : lo.c) v -= w.bound;
                std::vector<Exponent> members;
                for (const auto& x : ctx->monoid.grid(lo, w.bound, w.cap))
                    if (test(x).member) members.push_back(x);
                MonomialIdeal window_ideal(ctx, members.empty() ? I : members);
                j["window members"] = exps_json(members);
                j["window generators"] = exps_json(window_ideal.generators());
                text = op + "-closure window generators " + paren(window_ideal.generators()) + "\n";
            }
        }
        emit(c, j, text);
    });

    // trace
    auto* trace_cmd = app.add_subcommand("trace", "trace ideal I I^-1 and the trace-ideal test");
    add_common(trace_cmd, c, true);
    trace_cmd->add_option("generators", gens, "generators of the ideal")->required();
    trace_cmd->callback([&] {
        auto ctx = monoid_ctx(c);
        auto I = exps(gens);
        auto f = trace(ctx, I);
        auto w = filter_window(c, f);
        auto t = is_trace_ideal(ctx, I, w);
        json j{{"ring", ctx->monoid.describe()}, {"operation", "trace"}, {"ideal", exps_json(I)},
               {"trace", exps_json(t.trace_generators)}, {"is_trace_ideal", t.trace}, {"exact", t.exact}};
        emit(c, j, "trace " + paren(t.trace_generators) + "\ntrace ideal " + (t.trace ? "yes" : "no") + "\n");
    });

    // gv
    auto* gv_cmd = app.add_subcommand("gv", "Glaz-Vasconcelos test");
    add_common(gv_cmd, c, true);
    gv_cmd->add_option("generators", gens, "generators of the ideal")->required();
    gv_cmd->callback([&] {
        auto ctx = monoid_ctx(c);
        auto I = exps(gens);
        auto r = is_GV(ctx, I, window(c, 0));
        json j{{"ring", ctx->monoid.describe()}, {"operation", "gv"}, {"ideal", exps_json(I)}, {"gv", r.gv}, {"exact", r.exact}};
        if (r.witness) j["witness"] = r.witness->str();
        emit(c, j, std::string("GV ") + (r.gv ? "yes" : "no") + (r.witness ? ", witness " + r.witness->str() : "") + "\n");
    });

    // classify
    std::string kind = "intersection";
    auto* classify = app.add_subcommand("classify", "finiteness verdict for an ideal filter");
    add_common(classify, c, true);
    classify->add_option("--kind", kind, "filter kind")
        ->check(CLI::IsMember({"intersection", "inverse", "trace", "generated", "maximal"}));
    classify->add_option("exponents", inputs, "operands of the filter");
    classify->callback([&] {
        auto ctx = monoid_ctx(c);
        auto e = exps(inputs);
        if (kind != "maximal" && e.empty()) throw PreconditionError("classify --kind " + kind + " needs operands");
        IdealFilter f = kind == "intersection" ? IdealFilter::intersection(ctx, e)
                        : kind == "inverse"    ? IdealFilter::inverse(ctx, e)
                        : kind == "trace"      ? IdealFilter::trace(ctx, e)
                        : kind == "generated"  ? IdealFilter::generated(ctx, e)
                                               : IdealFilter::maximal(ctx);
        auto w = filter_window(c, f);
        auto v = classify_finiteness(f, w.bound, c.cap.empty() ? std::nullopt : std::optional<Integer>(w.cap));
        json j{{"ring", ctx->monoid.describe()}, {"operation", "classify"}, {"kind", kind}, {"operands", inputs},
               {"verdict", to_string(v.kind)}, {"generators", exps_json(v.generators)}, {"bound", to_string(v.bound)}};
        std::string text = "verdict " + v.str() + "\n";
        if (v.certificate) {
            j["certificate"] = {{"family", v.certificate->family},
                                {"instances", exps_json(v.certificate->instances)},
                                {"chain", v.certificate->chain},
                                {"checks", v.certificate->checks}};
            text += "certificate " + v.certificate->family + "\n";
        }
        emit(c, j, text);
    });

    // witness-search
    std::size_t tuple_size = 2, samples = 20;
    std::string probe = "bid";
    auto* ws = app.add_subcommand("witness-search", "search for BID/SBID violations, t-local witnesses, xi != w pairs");
    add_common(ws, c, true);
    ws->add_option("--size", tuple_size, "tuple size");
    ws->add_option("--probe", probe, "what to search for")->check(CLI::IsMember({"bid", "t-local", "xi-w"}));
    ws->add_option("--samples", samples, "random ideals for the xi-w probe");
    ws->callback([&] {
        auto spec = load_ring(c.ring);
        if (!spec.is_monoid_ring()) throw PreconditionError("witness-search needs a monoid ring");
        auto ctx = spec.ctx();
        json j{{"ring", ctx->monoid.describe()}, {"operation", "witness-search"}, {"probe", probe}};
        std::string text;
        if (probe == "bid") {
            auto w = window(c, 8);
            auto r = witness_search(ctx, tuple_size, w.bound, w.cap);
            j["tuples"] = r.tuples_examined;
            j["violations"] = json::array();
            for (const auto& v : r.violations) j["violations"].push_back({{"tuple", exps_json(v.tuple)}, {"verdict", v.verdict.str()}});
            j["inconclusive"] = r.inconclusive.size();
            j["bid_violated"] = r.bid_violated();
            j["sbid_violated"] = r.sbid_violated();
            text = std::to_string(r.tuples_examined) + " tuples, " + std::to_string(r.violations.size()) + " violations\n";
            if (!r.violations.empty())
                text += "first " + paren(r.violations.front().tuple) + " -> " + r.violations.front().verdict.str() + "\n";
        } else if (probe == "t-local") {
            auto w = window(c, 12);
            auto r = t_local_probe(ctx, w.bound, w.cap);
            j["outcome"] = r.none_found ? "NONE-FOUND" : "FOUND";
            j["maximal_generators"] = exps_json(r.maximal_generators);
            j["gv_ideal"] = r.gv_ideal ? exps_json(*r.gv_ideal) : json(nullptr);
            text = std::string(r.none_found ? "NONE-FOUND" : "FOUND") + " at bound " + to_string(r.bound) + "\n";
        } else {
            auto w = window(c, 12);
            auto r = xi_equals_w_probe(ctx, samples, w.bound, c.seed, w.cap);
            j["pass"] = r.pass;
            j["ideals"] = r.ideals_tested;
            j["pairs"] = r.pairs_tested;
            if (!r.pass) j["counterexample"] = {{"ideal", exps_json(*r.ideal)}, {"x", r.x->str()}, {"xi_witness", exps_json(r.xi_witness)}};
            text = r.pass ? "PASS " + std::to_string(r.pairs_tested) + " pairs\n"
                          : "counterexample " + r.x->str() + " in " + paren(*r.ideal) + "_xi, not in _w; J = " + paren(r.xi_witness) + "\n";
        }
        emit(c, j, text);
    });

    // krull classify
    std::vector<std::string> polys;
    std::int64_t oracle_degree = -1;
    auto* krull = app.add_subcommand("krull", "even-degree Krull domain");
    auto* kclass = krull->add_subcommand("classify", "classify an intersection of principal ideals");
    krull->require_subcommand(1);
    add_common(kclass, c, false);
    kclass->add_option("polynomials", polys, "even polynomials in X1, X2, ...")->required();
    kclass->add_option("--oracle-degree", oracle_degree, "also run the bounded linear-algebra oracle to this degree");
    kclass->callback([&] {
        auto ctx = krull_context(polys);
        std::vector<Polynomial> f;
        for (const auto& p : polys) f.push_back(Polynomial::parse(ctx, p));
        auto v = classify_even_intersection(f);
        json j{{"operation", "krull classify"}, {"inputs", polys}, {"verdict", to_string(v.kind)}, {"lambda", v.lambda.str()}};
        json inst = json::array();
        for (const auto& p : v.instances) inst.push_back(p.str());
        j["instances"] = inst;
        std::string text = "verdict " + v.str() + "\n";
        if (oracle_degree >= 0) {
            auto o = bounded_intersection_oracle(f, oracle_degree);
            auto a = check_oracle_agreement(v, o);
            j["oracle_agrees"] = a.agree;
            j["oracle_notes"] = a.notes;
            text += std::string("oracle ") + (a.agree ? "agrees" : "disagrees") + "\n";
            if (!a.agree) exit_code = 1;
        }
        emit(c, j, text);
    });

    // construction-a verify
    std::size_t K = 10;
    std::string w_override;
    auto* ca = app.add_subcommand("construction-a", "the ring A built from D(z) and D[z]");
    auto* caverify = ca->add_subcommand("verify", "verify the triple-intersection example");
    ca->require_subcommand(1);
    add_common(caverify, c, false);
    caverify->add_option("--cap", K, "instance cap K");
    caverify->add_option("--w", w_override, "replace the witness element");
    caverify->callback([&] {
        auto r = verify_remark_triple(K, w_override.empty() ? std::nullopt : std::optional<Polynomial>(laurent_element(w_override)));
        json checks = json::array();
        std::string text;
        for (const auto& ch : r.checks) {
            checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
            text += std::string(ch.passed ? "PASS " : "FAIL ") + ch.name + "\n";
        }
        json j{{"operation", "construction-a verify"}, {"cap", K}, {"checks", checks}, {"passed", r.passed()}};
        text += std::string("overall ") + (r.passed() ? "PASS" : "FAIL") + "\n";
        emit(c, j, text);
        if (!r.passed()) exit_code = 1;
    });

    // km probe
    std::vector<std::string> km_args;
    std::int64_t h_star = 7;
    auto* km = app.add_subcommand("km", "D = k + m inside k(X)[Y]_(Y)");
    auto* kprobe = km->add_subcommand("probe", "intersection of two principal ideals");
    km->require_subcommand(1);
    add_common(kprobe, c, false);
    kprobe->add_option("elements", km_args, "a1 a2")->required()->expected(2);
    kprobe->add_option("--h-star", h_star, "X-power of the refuted generator");
    kprobe->callback([&] {
        auto r = km_intersection_probe(km_element(km_args[0]), km_element(km_args[1]), -5, 5, h_star);
        json members = json::array();
        for (const auto& [h, ok] : r.members) members.push_back({{"h", h}, {"member", ok}});
        json j{{"operation", "km probe"}, {"a1", r.a1}, {"a2", r.a2}, {"a1_outside", r.a1_outside}, {"members", members},
               {"samples", r.samples}, {"samples_ok", r.samples_ok}, {"target_in_ideal", r.target_in_ideal},
               {"refutation", r.refutation}, {"detail", r.refutation_detail}, {"passed", r.passed()}};
        emit(c, j, std::string(r.passed() ? "PASS " : "FAIL ") + r.refutation_detail + "\n");
        if (!r.passed()) exit_code = 1;
    });

    // rif
    auto* rif = app.add_subcommand("rif", "rings R(I, F)");
    rif->require_subcommand(1);
    std::string mono_text, d_text, x_text;
    std::vector<std::string> a_list;
    std::size_t count = 10;
    std::int64_t n_max = 5;

    auto* rmember = rif->add_subcommand("member", "monomial membership");
    add_common(rmember, c, true);
    rmember->add_option("monomial", mono_text, "k:alpha")->required();
    rmember->callback([&] {
        auto D = rif_ring(c);
        auto m = rif_monomial(mono_text);
        bool in = rif_member(D, m);
        emit(c, {{"ring", D.describe()}, {"operation", "rif member"}, {"monomial", m.str()}, {"member", in}},
             m.str() + (in ? " in D\n" : " not in D\n"));
    });

    auto* rwitness = rif->add_subcommand("witness", "SBID witness family for pairwise incomparable monomials");
    add_common(rwitness, c, true);
    rwitness->add_option("monomials", a_list, "k:alpha ...")->required();
    rwitness->add_option("--count", count, "family size");
    rwitness->callback([&] {
        auto D = rif_ring(c);
        std::vector<RifMonomial> as;
        for (const auto& s : a_list) as.push_back(rif_monomial(s));
        auto fam = sbid_witness_family(D, as, count);
        json elems = json::array();
        std::string text = "t = " + std::to_string(fam.lemma.t) + "\n";
        for (const auto& e : fam.elements) {
            elems.push_back(e.str());
            text += e.str() + "\n";
        }
        json j{{"ring", D.describe()}, {"operation", "rif witness"}, {"a", fam.a.str()}, {"t", fam.lemma.t},
               {"elements", elems}, {"quotient_checks", fam.quotient_checks}, {"redundancy_checks", fam.redundancy_checks}};
        emit(c, j, text);
    });

    auto* rescape = rif->add_subcommand("escape", "least n with d x^n outside D");
    add_common(rescape, c, true);
    rescape->add_option("--d", d_text, "k:alpha in D")->required();
    rescape->add_option("--x", x_text, "k:alpha outside D")->required();
    rescape->add_option("--n-max", n_max, "search limit");
    rescape->callback([&] {
        auto D = rif_ring(c);
        auto n = cic_escape_probe(D, rif_monomial(d_text), rif_monomial(x_text), n_max);
        json j{{"ring", D.describe()}, {"operation", "rif escape"}, {"d", d_text}, {"x", x_text}};
        j["n"] = n ? json(*n) : json(nullptr);
        emit(c, j, n ? "n = " + std::to_string(*n) + "\n" : "INCONCLUSIVE up to " + std::to_string(n_max) + "\n");
    });

    auto* rintegral = rif->add_subcommand("integral", "element integral over D but outside it");
    add_common(rintegral, c, true);
    rintegral->callback([&] {
        auto D = rif_ring(c);
        auto r = integrality_witness(D);
        json j{{"ring", D.describe()}, {"operation", "rif integral"}};
        if (r) {
            j["element"] = r->element.str();
            j["e"] = r->e;
        } else {
            j["element"] = nullptr;
        }
        emit(c, j, r ? r->element.str() + ", e = " + std::to_string(r->e) + "\n" : "none\n");
    });

    // report
    ReportOptions ro;
    std::string only, output;
    bool no_timing = false;
    auto* report = app.add_subcommand("report", "run a named battery");
    add_common(report, c, false);
    report->add_option("--suite", ro.suite, "paper-examples or properties")->required();
    report->add_option("--only", only, "run one check");
    report->add_option("--samples", ro.samples, "property samples per ring");
    report->add_option("--output", output, "also write the structured document here");
    report->add_flag("--no-timing", no_timing, "omit wall-clock timings");
    report->callback([&] {
        auto suites = report_suites();
        if (std::find(suites.begin(), suites.end(), ro.suite) == suites.end())
            throw PreconditionError("unknown suite '" + ro.suite + "'");
        ro.seed = c.seed;
        if (!c.bound.empty()) ro.bound = parse_rational(c.bound);
        if (!only.empty()) ro.only = only;
        auto doc = run_report(ro);
        emit(c, doc.to_json(!no_timing), doc.text(!no_timing));
        if (!output.empty()) {
            std::ofstream out(output);
            if (!out) throw PreconditionError("cannot write '" + output + "'");
            out << doc.to_json(!no_timing).dump(2) << "\n";
        }
        exit_code = doc.passed() ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const EngineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
