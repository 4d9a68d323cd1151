// Acceptance gate: runs every criterion and prints one pass/fail line each.
#include <cstdio>

#include "selftest/criteria.hpp"

int main() {
    bool all = true;
    for (const auto& r : raaglab::selftest::run_all_criteria()) {
        std::printf("%s\n", r.line().c_str());
        std::fflush(stdout);
        if (!r.pass) all = false;
    }
    std::printf(all ? "ACCEPTANCE: PASS\n" : "ACCEPTANCE: FAIL\n");
    return all ? 0 : 1;
}
