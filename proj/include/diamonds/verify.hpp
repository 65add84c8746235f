#pragma once

// The acceptance suite: one check per criterion, each returning a verdict and
// a one-line account of what was measured.

#include <string>
#include <vector>

namespace diamonds {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

/// Quick mode shrinks the exact-arithmetic sizes and skips the two
/// asymptotic-convergence criteria (7 and 9), which are numerical studies
/// rather than identity or oracle checks.
CriterionResult run_criterion(int id, bool quick = false);

std::vector<CriterionResult> run_all_criteria(bool quick = false);

std::string format_result(const CriterionResult& r);

} // namespace diamonds
