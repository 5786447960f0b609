#ifndef PERFCODE_MOLLARD_SHAPE_HPP
#define PERFCODE_MOLLARD_SHAPE_HPP

#include <utility>

#include "perfcode/word.hpp"

namespace perfcode {

// Coordinate grid of a length tm+t+m product code: positions are pairs
// (r,s) in {0..t} x {0..m} minus (0,0). The linear layout is fixed so
// serialized codes are bit-exact reproducible:
//   index(r,s) = (r-1)(m+1) + s + 1   for r in 1..t, s in 0..m
//   index(0,s) = t(m+1) + s           for s in 1..m
struct MollardShape {
    int t = 0;
    int m = 0;

    MollardShape(int t_, int m_) : t(t_), m(m_) {
        if (t < 1 || m < 1) throw PreconditionError("mollard shape requires t,m >= 1");
    }

    int length() const { return t * m + t + m; }

    int index(int r, int s) const {
        if (r < 0 || r > t || s < 0 || s > m || (r == 0 && s == 0))
            throw PreconditionError("coordinate pair outside the grid");
        if (r >= 1) return (r - 1) * (m + 1) + s + 1;
        return t * (m + 1) + s;
    }

    std::pair<int, int> pair_of(int idx) const {
        if (idx < 1 || idx > length()) throw PreconditionError("linear coordinate outside 1..n");
        if (idx <= t * (m + 1)) {
            int r = (idx - 1) / (m + 1) + 1;
            int s = (idx - 1) % (m + 1);
            return {r, s};
        }
        return {0, idx - t * (m + 1)};
    }
};

// Generalized parity checks: p1 sums each row r over columns 0..m,
// p2 sums each column s over rows 0..t (no (0,0) cell exists).
Word p1(const Word& z, const MollardShape& shape);
Word p2(const Word& z, const MollardShape& shape);

// Row/column embeddings: embed1(x) puts x on the column-0 cells (r,0),
// embed2(y) puts y on the row-0 cells (0,s). p1(embed1(x)) = x and
// p2(embed1(x)) = 0, symmetrically for embed2.
Word embed1(const Word& x, const MollardShape& shape);
Word embed2(const Word& y, const MollardShape& shape);

} // namespace perfcode

#endif
