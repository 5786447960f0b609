#include "perfcode/linalg.hpp"

#include <algorithm>

namespace perfcode {

bool Gf2Basis::insert(const Word& w) {
    if (w.length() != n_) throw PreconditionError("basis insert: length mismatch");
    Word r = reduce(w);
    if (r.is_zero()) return false;
    int p = r.lowest_set();
    // Keep reduced echelon form: clear the new pivot from existing rows.
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(p)) rows_[i] += r;
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), r);
    return true;
}

Word Gf2Basis::reduce(const Word& w) const {
    Word r = w;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (r.get(pivots_[i])) r += rows_[i];
    return r;
}

bool Gf2Basis::contains(const Word& w) const { return reduce(w).is_zero(); }

std::vector<Word> Gf2Basis::nullspace() const {
    // Rows are in RREF, so for each free coordinate f the vector with
    // v_f = 1 and v_p = row_p[f] on pivots is orthogonal to every row.
    std::vector<bool> is_pivot(static_cast<std::size_t>(n_) + 1, false);
    for (int p : pivots_) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Word> out;
    for (int f = 1; f <= n_; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Word v(n_);
        v.set(f);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].get(f)) v.set(pivots_[i]);
        out.push_back(v);
    }
    return out;
}

std::vector<Word> Gf2Basis::enumerate_span() const {
    std::vector<Word> out;
    out.reserve(std::size_t{1} << rows_.size());
    out.push_back(Word::zero(n_));
    for (const Word& r : rows_) {
        std::size_t sz = out.size();
        for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] + r);
    }
    return out;
}

int gf2_rank(int n, const std::vector<Word>& words) {
    Gf2Basis b(n);
    for (const Word& w : words) b.insert(w);
    return b.rank();
}

std::set<int> zero_coordinates_of_dual(int n, const std::vector<Word>& words) {
    Gf2Basis b(n);
    for (const Word& w : words) b.insert(w);
    std::vector<Word> dual = b.nullspace();
    std::set<int> zeros;
    for (int i = 1; i <= n; ++i) {
        bool all_zero = true;
        for (const Word& d : dual)
            if (d.get(i)) {
                all_zero = false;
                break;
            }
        if (all_zero) zeros.insert(i);
    }
    return zeros;
}

} // namespace perfcode
