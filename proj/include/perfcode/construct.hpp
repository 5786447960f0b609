#ifndef PERFCODE_CONSTRUCT_HPP
#define PERFCODE_CONSTRUCT_HPP

#include <string>

#include "perfcode/code.hpp"
#include "perfcode/perm.hpp"

namespace perfcode {

// Builders re-exported under the operation names.
inline Code hamming(int r) { return Code::hamming(r); }
inline Code trivial_p1() { return Code::hamming(1); }
inline Code mollard(const Code& c, const Code& d, const Options& opt = {}) { return Code::mollard(c, d, opt); }

// Membership-checked embeddings (the unchecked geometric versions live
// with MollardShape).
Word embed1_checked(const Code& c, const Word& x, const MollardShape& shape);
Word embed2_checked(const Code& d, const Word& y, const MollardShape& shape);

// Row/column lifts of coordinate permutations into the product grid:
// lift_d1(pi) maps (r,s) -> (pi(r),s) and fixes row 0; lift_d2
// symmetrically permutes columns and fixes column 0.
Perm lift_d1(const Perm& pi, const MollardShape& shape);
Perm lift_d2(const Perm& pi, const MollardShape& shape);

// Recursive code descriptor grammar:
//   hamming:<r> | p1 | file:<path> | builtin:4918 | mollard(<desc>,<desc>)
Code parse_descriptor(const std::string& text, const Options& opt = {});

} // namespace perfcode

#endif
