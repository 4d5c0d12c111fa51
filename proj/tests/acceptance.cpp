// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// The on-disk table cache is off; tables are still memoized in-process, so a
// criterion sharing a table with an earlier one is timed without its extraction.

#include "hodge/suites.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace hodge;

namespace {

struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;
    std::function<std::vector<CheckTask>()> tasks;
};

std::vector<CheckTask> only(std::initializer_list<CheckReport (*)(const std::string&)> checks)
{
    std::vector<CheckTask> out;
    for (auto* c : checks) out.push_back([c] { return c({}); });
    return out;
}

} // namespace

int main()
{
    SuiteConfig cfg;
    cfg.threads = 0;

    const std::vector<Criterion> criteria{
        {"A1", "ELSV working form", 1, [&] { return elsv_tasks(cfg); }},
        {"A2", "GMV symmetry and one-point form", 5, [&] { return gmv_tasks(cfg); }},
        {"A3", "bilinear localization relations", 300, [&] { return bilinear_tasks(cfg); }},
        {"A4", "lambda_g formula", 30, [] { return only({&lambda_g_check}); }},
        {"A5", "cubic/linear compatibility", 120, [] { return only({&cubic_linear_check}); }},
        {"A6", "identity suite", 10, [&] { return identity_tasks(cfg); }},
        {"A7", "operator suite", 300, [&] { return fock_tasks(cfg); }},
        {"A8", "genus-zero and string/dilaton oracles", 120, [] { return only({&genus_zero_check, &string_dilaton_check}); }},
    };

    bool all = true;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<CheckReport> reports;
        std::string error;
        try {
            reports = run_checks(c.tasks(), cfg.threads);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const CheckReport* failed = nullptr;
        for (const auto& r : reports)
            if (!r.passed) {
                failed = &r;
                break;
            }
        const bool in_time = secs < c.limit_seconds;
        const bool ok = error.empty() && !reports.empty() && !failed && in_time;
        all = all && ok;
        std::printf("%s %s  %-40s %3zu checks  %7.2f s (limit %g s)\n", c.id, ok ? "PASS" : "FAIL", c.title,
                    reports.size(), secs, c.limit_seconds);
        if (!error.empty()) std::printf("   error: %s\n", error.c_str());
        if (failed) std::printf("   first failure: %s\n", failed->json().dump().c_str());
        if (error.empty() && !failed && !in_time) std::printf("   over time limit\n");
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
