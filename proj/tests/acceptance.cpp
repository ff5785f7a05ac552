// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <cstdio>

#include "twophase/suites.hpp"

int main() {
    auto results = twophase::run_acceptance();
    int failed = 0;
    for (const auto& r : results) {
        std::printf("[%s] C%-2d %-24s %s (%.2f s, budget %.0f s)\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str(), r.seconds, r.budget_seconds);
        failed += !r.passed;
    }
    std::printf("%d/%zu criteria passed\n", int(results.size()) - failed, results.size());
    return failed == 0 ? 0 : 1;
}
