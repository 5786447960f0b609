#ifndef PERFCODE_CLI_HPP
#define PERFCODE_CLI_HPP

#include <iosfwd>
#include <string>

#include "perfcode/context.hpp"

namespace perfcode {

// Exit codes shared by all subcommands:
//   0 success / propelinear, 1 nonpropelinear, 2 usage or parse error,
//   3 budget exhausted (partial report), 4 undecided.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int nonpropelinear = 1;
inline constexpr int usage = 2;
inline constexpr int budget = 3;
inline constexpr int undecided = 4;
} // namespace exit_code

struct CliOptions {
    Options base;
    bool json = false;
};

// construct <descriptor> [-o FILE]: writes the code file (explicit) or a
// JSON oracle manifest. Empty out_path writes to the stream.
int cmd_construct(const std::string& descriptor, const std::string& out_path, const CliOptions& cli,
                  std::ostream& out, std::ostream& err);

// invariants <descriptor>: prints the invariant report; group orders are
// included for explicit codes unless with_groups is false.
int cmd_invariants(const std::string& descriptor, const CliOptions& cli, bool with_groups,
                   std::ostream& out, std::ostream& err);

// propelinear <descriptor>: prints the verdict and a certificate
// (nonpropelinear) or witness summary (propelinear).
int cmd_propelinear(const std::string& descriptor, const CliOptions& cli, std::ostream& out,
                    std::ostream& err);

// verify [--budget-low]: runs the acceptance suite, one line per
// criterion.
int cmd_verify(const CliOptions& cli, bool budget_low, std::ostream& out, std::ostream& err);

} // namespace perfcode

#endif
