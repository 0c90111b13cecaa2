// Acceptance gate: one pass/fail line per criterion, each backed by a verification
// suite run at its pinned tolerances plus a wall-clock budget. Exit is nonzero when
// any selected criterion fails. Criteria can be selected by number or suite name.
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "bcpw/verify.hpp"

namespace {

struct Criterion {
    int id;
    const char* suite;
    double seconds_limit;
};

constexpr Criterion kCriteria[] = {
    {1, "algebra", 1.0},   {2, "fourier_example", 10.0},
    {3, "plancherel", 10.0}, {4, "energy", 30.0},
    {5, "recovery", 60.0},   {6, "contour", 30.0},
    {7, "exptype", 10.0},    {8, "damped", 10.0},
    {9, "cauchy", 120.0},    {10, "ray", 5.0},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<const Criterion*> selected;
    for (int a = 1; a < argc; ++a) {
        const std::string arg = argv[a];
        const Criterion* found = nullptr;
        for (const Criterion& c : kCriteria) {
            if (arg == c.suite || arg == std::to_string(c.id)) found = &c;
        }
        if (!found) {
            std::fprintf(stderr, "unknown criterion: %s\n", arg.c_str());
            return 2;
        }
        selected.push_back(found);
    }
    if (selected.empty()) {
        for (const Criterion& c : kCriteria) selected.push_back(&c);
    }

    bool ok = true;
    for (const Criterion* c : selected) {
        bcpw::SuiteResult res;
        try {
            res = bcpw::run_suite(c->suite);
        } catch (const std::exception& e) {
            std::printf("[FAIL] criterion %02d %-16s threw: %s\n", c->id, c->suite, e.what());
            ok = false;
            continue;
        }
        const bool time_ok = res.seconds < c->seconds_limit;
        const bool pass = res.passed() && time_ok;
        std::printf("[%s] criterion %02d %-16s (%zu rows, %.2f s, limit %.0f s)\n",
                    pass ? "PASS" : "FAIL", c->id, c->suite, res.rows.size(), res.seconds,
                    c->seconds_limit);
        for (const bcpw::ReportRow& r : res.rows) {
            if (!r.pass) {
                std::printf("       failed row %s %s: c1=%.9g c2=%.9g bound=%.9g\n",
                            r.test.c_str(), r.parameter.c_str(), r.component1, r.component2,
                            r.bound);
            }
        }
        if (!time_ok) std::printf("       runtime budget exceeded\n");
        ok = ok && pass;
    }
    return ok ? 0 : 1;
}
