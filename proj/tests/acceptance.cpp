// Runs every acceptance criterion and prints one PASS/FAIL line each.
// usage: acceptance <path to bidlab cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sys/wait.h>

#include "bidlab/report.hpp"

using namespace bidlab;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Run {
    int code;
    std::string out;
    double seconds;
};

Run run(const std::string& cmd) {
    auto t0 = Clock::now();
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return {-1, "", 0};
    std::string out;
    std::array<char, 4096> buf;
    while (auto n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, since(t0)};
}

bool line(const std::string& name, bool ok, const std::string& detail) {
    std::cout << name << (ok ? " PASS " : " FAIL ") << detail << std::endl;
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <bidlab>\n";
        return 2;
    }
    const std::map<std::string, double> limit{{"A1", 1},  {"A2", 5},  {"A3", 10}, {"A4", 10}, {"A5", 5},
                                              {"A6", 20}, {"A7", 30}, {"A8", 10}, {"A9", 2}};
    bool all = true;
    for (const auto& [name, secs] : limit) {
        ReportOptions o;
        o.only = name;
        auto t0 = Clock::now();
        bool ok = false;
        std::string detail;
        try {
            auto d = run_report(o);
            double t = since(t0);
            const auto& c = d.checks.at(0);
            ok = d.checks.size() == 1 && c.status == CheckStatus::Pass && t < secs;
            char buf[64];
            std::snprintf(buf, sizeof buf, " (%.3fs, limit %.0fs)", t, secs);
            detail = c.title + buf;
            if (c.status != CheckStatus::Pass) detail += ": " + c.failure;
        } catch (const std::exception& e) {
            detail = std::string("error: ") + e.what();
        }
        all &= line(name, ok, detail);
    }

    std::string cmd = std::string(argv[1]) + " report --suite paper-examples --no-timing --format structured";
    auto a = run(cmd), b = run(cmd);
    bool ok = a.code == 0 && b.code == 0 && a.out == b.out && a.seconds < 60 && b.seconds < 60;
    std::string detail;
    try {
        auto j = nlohmann::json::parse(a.out);
        std::size_t passed = 0;
        for (const auto& c : j.at("checks")) passed += c.at("status") == "PASS";
        ok = ok && j.at("overall") == "PASS" && passed == 9;
        detail = std::to_string(passed) + "/9 checks";
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("unreadable report: ") + e.what();
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, ", exit %d/%d, runs %.1fs and %.1fs, identical %s", a.code, b.code, a.seconds, b.seconds,
                  a.out == b.out ? "yes" : "no");
    all &= line("A10", ok, "report --suite paper-examples: " + detail + buf);
    return all ? 0 : 1;
}
