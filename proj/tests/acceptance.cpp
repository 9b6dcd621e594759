// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "preord/testkit/enumerate.hpp"
#include "preord/testkit/suites.hpp"

using namespace preord;
using namespace preord::testkit;

namespace {

struct Line {
    int id;
    std::string title;
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string summary(const SuiteReport& r) {
    std::string s = std::to_string(r.checks) + " checks, " + std::to_string(r.failure_count) + " failures";
    if (!r.failures.empty()) s += "; first: " + r.failures.front();
    return s;
}

Line run_criterion(int id, const std::string& title, const std::string& suite, SuiteConfig c,
                   double time_limit = 0) {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteReport r = run_suite(suite, reference_subject(), c);
    const double secs = seconds_since(t0);
    bool pass = r.passed() && r.checks > 0;
    std::string detail = summary(r);
    char buf[64];
    std::snprintf(buf, sizeof buf, ", %.1f s", secs);
    detail += buf;
    if (time_limit > 0 && secs >= time_limit) {
        pass = false;
        detail += " (limit " + std::to_string(static_cast<int>(time_limit)) + " s)";
    }
    return {id, title, pass, detail};
}

}  // namespace

int main() {
    std::vector<Line> lines;

    SuiteConfig c1;
    c1.max_n = 3;
    c1.probe_n = 3;
    lines.push_back(run_criterion(1, "pretorsion axioms at n <= 3", "pretorsion", c1, 60));

    SuiteConfig c2;
    c2.random_count = 1000;
    c2.random_max_n = 20;
    lines.push_back(run_criterion(2, "stable units, exhaustive n <= 3 and 1000 random at n <= 20", "stable-units", c2));

    SuiteConfig c3;
    c3.random_count = 1000;
    c3.random_max_n = 50;
    lines.push_back(run_criterion(3, "factorization systems and orthogonality", "factorization", c3));

    SuiteConfig c4;
    c4.random_count = 1000;
    c4.random_max_n = 50;
    lines.push_back(run_criterion(4, "three M* tests agree", "covering", c4));

    SuiteConfig c5;
    c5.random_count = 500;
    c5.random_max_n = 40;
    Line l5 = run_criterion(5, "effective-descent cover, 29 objects at n = 3 and 500 random at n <= 40", "descent", c5);
    if (enumerate_preorders(3).size() != 29) {
        l5.pass = false;
        l5.detail += "; the n = 3 sweep does not hold 29 objects";
    }
    lines.push_back(l5);

    SuiteConfig c6;
    c6.random_count = 500;
    c6.random_max_n = 50;
    lines.push_back(run_criterion(6, "Alexandroff isomorphism", "alexandroff", c6));

    lines.push_back(run_criterion(7, "enumeration counts by two methods", "enumeration", SuiteConfig{}));

    {
        const auto t0 = std::chrono::steady_clock::now();
        SuiteConfig cm;
        cm.random_count = 20;
        std::vector<std::string> missed;
        std::string caught;
        const auto mutations = documented_mutations();
        for (const auto& m : mutations) {
            Subject s = reference_subject();
            m.apply(s);
            std::string by;
            for (const auto& name : suite_names())
                if (!run_suite(name, s, cm).passed()) by += (by.empty() ? "" : "+") + name;
            if (by.empty())
                missed.push_back(m.name);
            else
                caught += (caught.empty() ? "" : ", ") + m.name + " by " + by;
        }
        const bool pass = missed.empty() && mutations.size() == 10;
        std::string detail = std::to_string(mutations.size() - missed.size()) + "/" +
                             std::to_string(mutations.size()) + " detected (" + caught + ")";
        for (const auto& m : missed) detail += "; missed " + m;
        char buf[64];
        std::snprintf(buf, sizeof buf, ", %.1f s", seconds_since(t0));
        lines.push_back({8, "mutation sensitivity", pass, detail + buf});
    }

    bool all = true;
    for (const auto& l : lines) {
        std::printf("[%s] criterion %d: %s: %s\n", l.pass ? "PASS" : "FAIL", l.id, l.title.c_str(), l.detail.c_str());
        all = all && l.pass;
    }
    return all ? 0 : 1;
}
