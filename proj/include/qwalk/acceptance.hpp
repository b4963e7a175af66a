#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwalk {

struct CriterionResult {
    int id = 0;
    bool pass = false;
    double seconds = 0;
    std::string detail;
};

// criteria 1..11; one PASS/FAIL line each as they finish
std::vector<CriterionResult> run_acceptance(std::ostream& log, const std::vector<int>& only = {});

} // namespace qwalk
