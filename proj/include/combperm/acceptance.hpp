#pragma once

#include <string>
#include <vector>

namespace combperm {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // empty when passing, first discrepancy otherwise
    double elapsed_s = 0.0;
};

// The full verification suite: every check is exact integer equality.
std::vector<CriterionResult> run_acceptance();

// One "PASS"/"FAIL" line per criterion; returns true iff all pass.
bool print_acceptance(std::ostream& os, const std::vector<CriterionResult>& results,
                      bool with_timings = false);

}  // namespace combperm
