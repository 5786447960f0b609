#ifndef PERFCODE_SELFCHECK_HPP
#define PERFCODE_SELFCHECK_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "perfcode/context.hpp"

namespace perfcode {

struct CriterionResult {
    int id = 0;
    std::string name;
    enum class Status { Pass, Fail, Skip } status = Status::Fail;
    std::string detail;
    double seconds = 0.0;
};

// with_time adds the wall-clock seconds; the CLI keeps times off stdout
// so identical runs stay byte-identical.
std::string format_criterion_line(const CriterionResult& r, bool with_time = true);

// Runs the full verification suite: reconstruction of the built-in
// length-15 code, its invariant row, group laws, the product-series
// formulas and the (non)propelinearity decisions. budget_low skips the
// group-search criteria. One result per criterion, in order.
std::vector<CriterionResult> run_selfcheck(const Options& opt, bool budget_low, std::ostream& progress,
                                           bool timed_output = true);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace perfcode

#endif
