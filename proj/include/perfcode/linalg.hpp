#ifndef PERFCODE_LINALG_HPP
#define PERFCODE_LINALG_HPP

#include <set>
#include <vector>

#include "perfcode/word.hpp"

namespace perfcode {

// Incremental GF(2) row space in reduced echelon form. Row pivots are
// the smallest set coordinate of each row; every pivot coordinate is
// zero in all other rows.
class Gf2Basis {
public:
    explicit Gf2Basis(int n) : n_(n) {}

    int n() const { return n_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<Word>& rows() const { return rows_; }

    // Reduces w against the basis; inserts the remainder if nonzero.
    // Returns true when the rank grew.
    bool insert(const Word& w);

    // True iff w lies in the row space.
    bool contains(const Word& w) const;

    // Remainder of w after reduction.
    Word reduce(const Word& w) const;

    // Basis of the orthogonal complement (null space of the row matrix).
    std::vector<Word> nullspace() const;

    // Enumerates the whole span; caller must ensure 2^rank is sane.
    std::vector<Word> enumerate_span() const;

private:
    int n_;
    std::vector<Word> rows_;   // sorted by pivot ascending
    std::vector<int> pivots_;  // pivot coordinate of rows_[i]
};

// Rank of the GF(2) span of a word list.
int gf2_rank(int n, const std::vector<Word>& words);

// Coordinates that are zero in every vector of the dual of span(words),
// i.e. zero in every nullspace vector of the span matrix.
std::set<int> zero_coordinates_of_dual(int n, const std::vector<Word>& words);

} // namespace perfcode

#endif
