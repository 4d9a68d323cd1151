#ifndef RAAGLAB_SELFTEST_CRITERIA_HPP
#define RAAGLAB_SELFTEST_CRITERIA_HPP

#include <string>
#include <vector>

namespace raaglab::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
    double budget_ms = 0.0;

    std::string line() const;
};

/// Runs acceptance criterion `id` (1..13).
CriterionResult run_criterion(int id);

/// All 13 criteria, in order.
std::vector<CriterionResult> run_all_criteria();

} // namespace raaglab::selftest

#endif
