#ifndef PERFCODE_GROUPS_HPP
#define PERFCODE_GROUPS_HPP

#include <memory>
#include <optional>
#include <vector>

#include "perfcode/code.hpp"
#include "perfcode/invariants.hpp"
#include "perfcode/perm.hpp"

namespace perfcode {

enum class SearchMode { First, All };

// Full automorphism group of a triple system (point permutations
// mapping triples onto triples), by pointwise backtracking with
// pair-consistency forcing.
PermGroup sts_automorphisms(const TripleSystem& ts, const Options& opt = {});

// Sym(C) = { pi : pi(C) = C }. Computed by filtering the triple-system
// automorphisms when the code has weight-3 words; otherwise by direct
// coordinate backtracking with weight-class pruning.
PermGroup symmetry_group(const ExplicitCode& code, const Options& opt = {});

// All permutations pi with pi(A) = B (or just the first found).
// Both codes must contain the zero word and have equal length and
// cardinality. The search walks triple-system isomorphisms and verifies
// each candidate against the full codes, so the returned list is exact.
std::vector<Perm> equivalence_maps(const ExplicitCode& a, const ExplicitCode& b, SearchMode mode,
                                   const Options& opt = {});

// R_x(C) = { pi : (x,pi) in Aut(C) } = { pi : pi(C) = x + C }; empty or
// a single left coset of Sym(C).
std::vector<Perm> rotations_at(const ExplicitCode& code, const Word& x, const Options& opt = {});

// Transitivity decision over kernel-coset representatives: if 0 reaches
// x then it reaches x + k for every kernel word k (compose with the
// translation automorphism (k, id)), so one representative per coset
// suffices.
bool is_transitive(const ExplicitCode& code, const Options& opt = {});

// Kernel-coset representatives in canonical order (smallest word per
// coset, list sorted; representative of the kernel itself is zero).
std::vector<Word> kernel_coset_representatives(const ExplicitCode& code, const Options& opt = {});

// Explicit automorphism group: all pairs (x, pi) with x + pi(C) = C.
struct AutGroup {
    std::shared_ptr<const ExplicitCode> code;
    std::vector<Automorphism> elements;  // sorted by (x, image sequence)
    bool transitive = false;             // false => subgroup over the 0-orbit

    std::uint64_t order() const { return elements.size(); }
    bool contains(const Automorphism& a) const;
};

// Materializes Aut(C) (order = |orbit of 0| * |Sym(C)|); throws
// TooLargeError past the 2^16 element cap.
AutGroup automorphism_group(const ExplicitCode& code, const Options& opt = {});

// Projection of Aut(C) onto permutation parts.
PermGroup rotation_group(const AutGroup& aut);
PermGroup rotation_group(const ExplicitCode& code, const Options& opt = {});

} // namespace perfcode

#endif
