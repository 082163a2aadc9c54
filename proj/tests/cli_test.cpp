#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "bidlab/report.hpp"
#include "bidlab/ring_spec.hpp"

using namespace bidlab;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(BIDLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    while (auto n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const char* kTwoThree = R"('{"family":"numerical_semigroup","generators":[2,3]}')";

}  // namespace

TEST(RingSpec, Examples) {
    auto s = parse_ring_spec(R"({"family":"numerical_semigroup","generators":[2,3],"localized":true})");
    EXPECT_EQ(s.family, RingFamily::NumericalSemigroup);
    EXPECT_TRUE(s.localized);
    EXPECT_EQ(s.ctx()->monoid.as<NumericalSemigroup>()->generators(), (std::vector<std::int64_t>{2, 3}));
    auto h = parse_ring_spec(R"({"family":"root_family","base":3,"seed":2})");
    const auto* rf = h.ctx()->monoid.as<RootFamily>();
    ASSERT_TRUE(rf);
    EXPECT_EQ(rf->base(), 3);
    EXPECT_EQ(rf->seed(), 2);
    EXPECT_TRUE(h.ctx()->member(Exponent::scalar(Rational(2, 3))));
    EXPECT_FALSE(h.ctx()->member(Exponent::scalar(Rational(1, 3))));
    EXPECT_THROW(parse_ring_spec(R"({"family":"numerical_semigroup","generators":[2,4]})"), ValidationError);
}

TEST(RingSpec, Errors) {
    EXPECT_THROW(parse_ring_spec(R"({"family":"numerical_semigroup","generators":[2,3],"colour":1})"), ValidationError);
    EXPECT_THROW(parse_ring_spec(R"({"family":"numerical_semigroup"})"), ValidationError);
    EXPECT_THROW(parse_ring_spec(R"({"family":"tropical"})"), ValidationError);
    EXPECT_THROW(parse_ring_spec(R"({"family":"root_family","base":3,"seed":3})"), ValidationError);
    EXPECT_THROW(parse_ring_spec(R"({"family":"rif","ideal":[1],"subset":"odd"})"), ValidationError);
    EXPECT_THROW(parse_ring_spec(R"({"family":"rif","ideal":[0],"subset":"squarefree"})"), ValidationError);
    EXPECT_THROW(parse_ring_spec(R"({"family":"numerical_semigroup","generators":"2,3"})"), ValidationError);
    try {
        parse_ring_spec(R"({"family": [1, )");
        FAIL() << "no parse error";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("at byte"), std::string::npos);
    }
}

TEST(RingSpec, RoundTrip) {
    for (auto text : {R"({"family":"numerical_semigroup","generators":[3,4,5],"localized":true})",
                      R"({"family":"root_family","base":3,"seed":2})", R"({"family":"even_degree","variables":3})",
                      R"({"family":"fin_gen_cone","dimension":2,"generators":[[1,0],["1/2",1]]})",
                      R"({"family":"construction_a"})", R"({"family":"km"})",
                      R"({"family":"rif","ideal":[2],"subset":"rational-powers"})"}) {
        auto a = parse_ring_spec(text);
        auto b = parse_ring_spec(a.serialize());
        EXPECT_EQ(a, b) << text;
        EXPECT_EQ(a.serialize(), b.serialize());
    }
    auto r = parse_ring_spec(R"({"family":"rif","ideal":[2],"subset":"rational-powers"})");
    EXPECT_EQ(r.parameters["base"], nlohmann::json::array({1}));
    EXPECT_EQ(r.rif().ideal(), (std::vector<std::int64_t>{2}));
}

TEST(Cli, Intersect) {
    auto r = run(std::string("intersect --ring ") + kTwoThree + " 2 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "generators (5, 6) complete\nverdict FG_NON_PRINCIPAL{5, 6}\n");
    auto s = run(std::string("intersect --format structured --ring ") + kTwoThree + " 2 3");
    auto j = nlohmann::json::parse(s.out);
    EXPECT_EQ(j["generators"], nlohmann::json::array({"5", "6"}));
    EXPECT_EQ(j["complete"], true);
}

TEST(Cli, ClosureAndFriends) {
    EXPECT_EQ(run(std::string("closure --op xi --ring ") + kTwoThree + " --x 2 4 5").out, "2 in (4, 5)_xi, witness J = (2, 3)\n");
    EXPECT_EQ(run(std::string("closure --op w --ring ") + kTwoThree + " --x 2 4 5").out, "2 not in (4, 5)_w\n");
    EXPECT_EQ(run(std::string("closure --op xi --ring ") + kTwoThree + " 4 5").out, "xi-closure window generators (2, 3)\n");
    EXPECT_EQ(run(std::string("closure --op v --ring ") + kTwoThree + " 4 5").out, "v-closure (4, 5)\n");
    EXPECT_EQ(run(std::string("gv --ring ") + kTwoThree + " 2 3").out, "GV no, witness 1\n");
    EXPECT_EQ(run(std::string("trace --ring ") + kTwoThree + " 3 4").out, "trace (2, 3)\ntrace ideal no\n");
}

TEST(Cli, Families) {
    EXPECT_EQ(run("krull classify X1*X2 X3*X4").out, "verdict PRINCIPAL(X1*X2*X3*X4)\n");
    auto km = run("km probe Y Y*X");
    EXPECT_EQ(km.code, 0);
    EXPECT_EQ(km.out.substr(0, 4), "PASS");
    auto ca = run("construction-a verify --cap 3 --w 'y^5*z*(z-y^2)'");
    EXPECT_EQ(ca.code, 1);
    const char* sq = R"('{"family":"rif","ideal":[1],"subset":"squarefree"}')";
    EXPECT_EQ(run(std::string("rif member --ring ") + sq + " '1:(1,1)'").out, "a^1*x^(1,1) in D\n");
    EXPECT_EQ(run(std::string("rif member --ring ") + sq + " '1:(2)'").out, "a^1*x^2 not in D\n");
    EXPECT_EQ(run(std::string("rif escape --ring ") + sq + " --d '2:0' --x '0:1'").out, "n = 3\n");
    EXPECT_EQ(run(R"(rif integral --ring '{"family":"rif","ideal":[2],"subset":"rational-powers"}')").out, "a^1*x^1/4, e = 2\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run(R"(intersect --ring '{"family":"numerical_semigroup","generators":[2,4]}' 2)").code, 2);
    EXPECT_EQ(run(R"(intersect --ring '{"family":' 2)").code, 2);
    EXPECT_EQ(run("report --suite nonsense").code, 2);
    EXPECT_EQ(run(std::string("closure --op q --ring ") + kTwoThree + " 2").code, 2);
    EXPECT_EQ(run("rif member --ring /nonexistent.json 1:0").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ReportSingleCheckAndDegenerateBound) {
    auto r = run("report --suite paper-examples --only A1 --no-timing");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("A1 PASS"), std::string::npos);
    auto z = run("report --suite paper-examples --only A1 --bound 0 --no-timing --format structured");
    EXPECT_EQ(z.code, 1);
    auto j = nlohmann::json::parse(z.out);
    EXPECT_EQ(j["checks"][0]["status"], "INCONCLUSIVE");
    EXPECT_NE(j["checks"][0]["reproduce"].get<std::string>().find("--bound 0"), std::string::npos);
    EXPECT_EQ(j["overall"], "FAIL");
}

TEST(Cli, PropertiesReportIsDeterministic) {
    auto a = run("report --suite properties --seed 7 --samples 4 --format structured --no-timing");
    auto b = run("report --suite properties --seed 7 --samples 4 --format structured --no-timing");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["seed"], 7);
    EXPECT_GT(j["checks"].size(), 20u);
    auto t = nlohmann::json::parse(run("report --suite properties --seed 7 --samples 4 --format structured").out);
    EXPECT_TRUE(t.contains("timing"));
    t.erase("timing");
    EXPECT_EQ(t, j);
}

TEST(Report, LibraryDocument) {
    ReportOptions o;
    o.only = "A9";
    auto d = run_report(o);
    ASSERT_EQ(d.checks.size(), 1u);
    EXPECT_TRUE(d.passed());
    EXPECT_EQ(d.body()["rings"].size(), 9u);
    o.suite = "bogus";
    EXPECT_THROW(run_report(o), PreconditionError);
}
