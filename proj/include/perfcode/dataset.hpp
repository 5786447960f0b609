#ifndef PERFCODE_DATASET_HPP
#define PERFCODE_DATASET_HPP

#include <array>
#include <string>
#include <vector>

#include "perfcode/code.hpp"
#include "perfcode/perm.hpp"

namespace perfcode {

// Published reference data for the transitive nonpropelinear perfect
// code of length 15 (number 4918 in the Ostergard-Pottonen
// classification) and for four related propelinear codes that are known
// only through their invariants.

// The 35 weight-3 supports of code 4918 (a Steiner triple system).
const std::vector<std::array<int, 3>>& code4918_sts_triples();

// Supports of a basis of the kernel of code 4918 (dimension 6).
const std::vector<std::vector<int>>& code4918_kernel_basis_supports();

// Supports of the 31 nonzero kernel-coset representatives of code 4918.
const std::vector<std::vector<int>>& code4918_coset_rep_supports();

// The three nonidentity symmetries of code 4918 in cycle form.
const std::vector<std::string>& code4918_symmetry_cycles();

// Invariant row for a classified transitive code of length 15.
struct ReferenceRow {
    int id;
    int rank;
    int kernel_dim;
    std::uint64_t sym_order;
    std::string mu;  // exponent notation, bases ascending
    std::uint64_t aut_sts_order;
    int sts_rank;
};

const std::vector<ReferenceRow>& reference_rows();
// Throws PreconditionError for ids outside {51, 694, 724, 771, 4918}.
const ReferenceRow& reference_row(int id);

// Reconstructs code 4918 as kernel + 31 kernel cosets and asserts the
// published facts about it (perfect, min distance 3, STS and invariants
// as tabulated). Any failed assertion aborts with the failed invariant
// named, guarding against transcription drift. The result is cached.
Code build_code_4918();

// Text format: first line "n=<int> k=<int>", then k lines of 0/1
// characters with coordinate 1 leftmost; '#' starts a comment.
// Canonical write order is lexicographic on the bit strings.
ExplicitCode load_code(const std::string& path);
ExplicitCode load_code_from_stream(std::istream& in, const std::string& origin);
void save_code(const ExplicitCode& code, const std::string& path);
std::string code_to_text(const ExplicitCode& code);

} // namespace perfcode

#endif
