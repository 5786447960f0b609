#ifndef PERFCODE_PROPELINEAR_HPP
#define PERFCODE_PROPELINEAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "perfcode/groups.hpp"

namespace perfcode {

// x has the incorrect inverse when R_x(C) is nonempty and every element
// has permutation order > 2 and stabilizes supp(x) setwise. Such a
// codeword rules out any regular subgroup of Aut(C).
bool incorrect_inverse(const ExplicitCode& code, const Word& x, const Options& opt = {});

// Consequence check for a code with an incorrect-inverse codeword x:
// Sym(C) has even order and stabilizes supp(x) setwise. A group other
// than Sym(C) can be injected for consistency probing.
bool corollary1_check(const ExplicitCode& code, const Word& x, const Options& opt = {},
                      const PermGroup* sym_override = nullptr);

// A choice of rotation per codeword: pi[i] is assigned to words()[i].
struct PropelinearAssignment {
    std::shared_ptr<const ExplicitCode> code;
    std::vector<Perm> pi;

    const Perm& at(const Word& x) const;
    std::size_t distinct_permutations() const;
};

struct AssignmentCheck {
    bool ok = false;              // conditions (membership + composition)
    bool membership_ok = false;   // every (x, pi_x) is an automorphism
    bool composition_ok = false;  // pi_{x + pi_x(y)} = pi_x o pi_y
    bool exhaustive = false;      // sampled above 2^11 codewords
    bool normalized_ok = false;   // |{pi_x}| = |C| / |Ker(C)| (when requested)
    std::optional<std::pair<Word, Word>> counterexample;
};

// Verifies the defining conditions of a propelinear structure; pairs
// are checked exhaustively up to 2^11 codewords, sampled above.
AssignmentCheck verify_propelinear_assignment(const ExplicitCode& code, const PropelinearAssignment& pa,
                                              bool normalized, const Options& opt = {});

struct RegularSearchResult {
    std::optional<PropelinearAssignment> assignment;
    bool complete = false;  // for none verdicts: the search space was exhausted
    std::string strategy;   // probe | index2-descent | assignment-exhaustive
    std::uint64_t nodes = 0;
};

// Searches Aut(C) for a regular subgroup of the given order (= |C|).
// A constructive probe (rotation assignment closure, identity-first)
// runs first; if it finds nothing within its node budget, the verdict
// comes from iterated index-2 descent over the materialized group when
// its order is a power of two, or from running the assignment closure
// to exhaustion otherwise.
RegularSearchResult regular_subgroup_search(const ExplicitCode& code, std::uint64_t target_order,
                                            const Options& opt = {});

// Descent engine on an already-materialized automorphism group.
RegularSearchResult regular_subgroup_descent(const AutGroup& aut, std::uint64_t target_order,
                                             const Options& opt = {});

// One verified premise of a nonpropelinearity certificate.
struct Premise {
    std::string name;
    std::string operands;
    std::string recheck;  // command line that re-evaluates the premise
    bool holds = false;
};

struct Certificate {
    std::string kind;  // incorrect-inverse | exhaustive-regular-search |
                       // theorem1-part1 | theorem1-part2 | theorem1-part3
    std::string target_descriptor;  // the code shown nonpropelinear
    std::string witness_bits;       // witness codeword of the base code
    std::vector<Premise> premises;

    std::string to_json_text() const;  // stable key order
};

// Right-hand side of the product construction for the certificates: a
// Hamming parameter, a concrete code, or a profile-only reference row.
struct DSide {
    std::optional<int> hamming_r;
    std::optional<Code> code;
    std::optional<MuProfile> mu_profile;
    int m = 0;
    std::string label;

    static DSide hamming(int r);
    static DSide from_code(const Code& d, const Options& opt = {});
    static DSide from_profile(MuProfile mu, std::string label);
};

struct CertificateResult {
    bool ok = false;
    Certificate certificate;
    std::string failed_condition;
};

// Sufficient-condition certificates that the product construction
// preserves the incorrect inverse of (C, x):
//   part 1: supp(x) within I(C) and mu(C) < (t-1)/2  => M(C, H)
//   part 2: mu(C) = 0 and 0 < mu(D) < (m-1)/2, m <= t => M(C, D)
//   part 3: parts 1+2 conditions combined             => M(M(C,D), H)
// Strict inequalities in exact integer arithmetic.
CertificateResult theorem1_certificate(const Code& c, const Word& x, const DSide& d, int part,
                                       const Options& opt = {}, bool trust_incorrect_inverse = false);

// Partition of a product code's coordinates by mu value: reports
// whether the row-0 and column-0 blocks are separated from all other
// coordinates (forcing symmetries to preserve them) and whether the
// row-0 block is uniquely maximal.
struct SeparationReport {
    MuProfile profile;
    std::set<long long> row0_values, col0_values, interior_values;
    bool row0_separated = false;
    bool col0_separated = false;
    bool row0_unique_max = false;
};

SeparationReport mu_orbit_separation(const Code& mollard_code, const Options& opt = {});

// First weight-3 codeword with the incorrect inverse (coordinates
// inside I(C) scanned first), if any.
std::optional<Word> find_incorrect_inverse_witness(const ExplicitCode& code, const Options& opt = {});

} // namespace perfcode

#endif
