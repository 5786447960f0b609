#include <iostream>

#include "perfcode/selfcheck.hpp"

// Acceptance suite: one pass/fail line per criterion; nonzero exit when
// any criterion fails.
int main() {
    perfcode::Options opt;
    std::vector<perfcode::CriterionResult> results = perfcode::run_selfcheck(opt, false, std::cout);
    return perfcode::all_passed(results) ? 0 : 1;
}
