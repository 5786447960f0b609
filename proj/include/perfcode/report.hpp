#ifndef PERFCODE_REPORT_HPP
#define PERFCODE_REPORT_HPP

#include <optional>
#include <string>

#include "perfcode/invariants.hpp"

namespace perfcode {

// Provenance of a computed field.
enum class Prov { Exact, Formula, SampledExact, LowerBound, Skipped };
const char* prov_name(Prov p);

struct InvariantReport {
    std::string label;
    int n = 0;
    std::string cardinality;  // exact decimal
    int rank_value = 0;
    Prov rank_prov = Prov::Exact;
    int kernel_dim = 0;
    Prov kernel_prov = Prov::Exact;
    std::set<int> zero_set;
    Prov zero_set_prov = Prov::Exact;
    MuProfile mu_profile;
    Prov mu_prov = Prov::Exact;
    long long sts_triples = 0;
    std::optional<int> min_dist;
    std::optional<std::uint64_t> sym_order;
    std::optional<std::uint64_t> aut_sts_order;
    std::optional<int> sts_rank;

    // "key: value [provenance]" lines in a fixed order.
    std::string to_text() const;
    // Same content as JSON with a stable key order.
    std::string to_json_text() const;
};

// Computes every invariant the code's representation supports; group
// orders are filled only when with_groups is set and the code is
// explicit.
InvariantReport compute_report(const Code& code, const Options& opt = {}, bool with_groups = false);

// Sufficient inequivalence certificate: true iff the (rank, kernel
// dimension, mu multiset) triples differ.
bool mu_inequivalence(const InvariantReport& a, const InvariantReport& b);

// Invariant triple propagated through the product construction without
// touching codewords (for series of codes known only by invariants).
struct InvariantLedger {
    std::string label;
    int n = 0;
    int rank_value = 0;
    int kernel_dim = 0;
    MuProfile mu_profile;
};

InvariantLedger ledger_of(const InvariantReport& r);
InvariantLedger ledger_of_reference(int id);  // from the published rows (n = 15)
InvariantLedger mollard_ledger(const InvariantLedger& c, const InvariantLedger& d);
bool ledgers_distinct(const InvariantLedger& a, const InvariantLedger& b);

} // namespace perfcode

#endif
