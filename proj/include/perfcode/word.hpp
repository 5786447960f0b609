#ifndef PERFCODE_WORD_HPP
#define PERFCODE_WORD_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "perfcode/error.hpp"

namespace perfcode {

// A binary vector of fixed length n with 1-based coordinates, packed
// into 64-bit blocks. Coordinate 1 is the leftmost character of the
// serialized bit string. Supports n up to 1024.
class Word {
public:
    static constexpr int kMaxLength = 1024;

    Word() = default;

    explicit Word(int n) : n_(n), blocks_((n + 63) / 64, 0) {
        if (n < 1 || n > kMaxLength) throw PreconditionError("word length out of range: " + std::to_string(n));
    }

    static Word zero(int n) { return Word(n); }

    static Word from_support(int n, std::span<const int> coords) {
        Word w(n);
        for (int c : coords) w.set(c);
        return w;
    }

    static Word from_support(int n, std::initializer_list<int> coords) {
        return from_support(n, std::span<const int>(coords.begin(), coords.size()));
    }

    // Parses "0110..."; coordinate 1 is the first character.
    static Word from_bits(std::string_view s) {
        Word w(static_cast<int>(s.size()));
        for (int i = 0; i < static_cast<int>(s.size()); ++i) {
            char c = s[i];
            if (c == '1')
                w.set(i + 1);
            else if (c != '0')
                throw ParseError(std::string("invalid bit character '") + c + "'");
        }
        return w;
    }

    int length() const { return n_; }

    bool get(int i) const {
        check_coord(i);
        return (blocks_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1u;
    }

    void set(int i, bool v = true) {
        check_coord(i);
        std::uint64_t mask = std::uint64_t{1} << ((i - 1) & 63);
        if (v)
            blocks_[(i - 1) >> 6] |= mask;
        else
            blocks_[(i - 1) >> 6] &= ~mask;
    }

    void flip(int i) {
        check_coord(i);
        blocks_[(i - 1) >> 6] ^= std::uint64_t{1} << ((i - 1) & 63);
    }

    int weight() const {
        int w = 0;
        for (std::uint64_t b : blocks_) w += std::popcount(b);
        return w;
    }

    bool is_zero() const {
        for (std::uint64_t b : blocks_)
            if (b) return false;
        return true;
    }

    std::vector<int> support() const {
        std::vector<int> s;
        s.reserve(weight());
        for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
            std::uint64_t b = blocks_[bi];
            while (b) {
                int k = std::countr_zero(b);
                s.push_back(static_cast<int>(bi * 64 + k + 1));
                b &= b - 1;
            }
        }
        return s;
    }

    // Smallest set coordinate, 0 when the word is zero.
    int lowest_set() const {
        for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
            if (blocks_[bi]) return static_cast<int>(bi * 64 + std::countr_zero(blocks_[bi]) + 1);
        return 0;
    }

    Word operator+(const Word& o) const {
        Word r = *this;
        r += o;
        return r;
    }

    Word& operator+=(const Word& o) {
        if (o.n_ != n_) throw PreconditionError("word length mismatch");
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] ^= o.blocks_[i];
        return *this;
    }

    bool operator==(const Word& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
    bool operator!=(const Word& o) const { return !(*this == o); }

    // Lexicographic order on the serialized bit string (coordinate 1 first).
    bool operator<(const Word& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            std::uint64_t d = blocks_[i] ^ o.blocks_[i];
            if (d) {
                int k = std::countr_zero(d);
                return ((blocks_[i] >> k) & 1u) == 0;
            }
        }
        return false;
    }

    std::string bits() const {
        std::string s(static_cast<std::size_t>(n_), '0');
        for (int i = 1; i <= n_; ++i)
            if (get(i)) s[i - 1] = '1';
        return s;
    }

    // Packed key for n <= 64: coordinate i at bit i-1.
    std::uint64_t low64() const { return blocks_.empty() ? 0 : blocks_[0]; }

    int block_count() const { return static_cast<int>(blocks_.size()); }
    std::uint64_t block(int i) const { return blocks_[i]; }
    std::uint64_t& block_mut(int i) { return blocks_[i]; }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ULL ^ static_cast<std::size_t>(n_);
        for (std::uint64_t b : blocks_) {
            h ^= static_cast<std::size_t>(b);
            h *= 1099511628211ULL;
        }
        return h;
    }

private:
    void check_coord(int i) const {
        if (i < 1 || i > n_) throw PreconditionError("coordinate " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    }

    int n_ = 0;
    std::vector<std::uint64_t> blocks_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

inline int weight(const Word& w) { return w.weight(); }

inline int distance(const Word& a, const Word& b) {
    if (a.length() != b.length()) throw PreconditionError("distance: word length mismatch");
    int d = 0;
    for (int i = 0; i < a.block_count(); ++i) d += std::popcount(a.block(i) ^ b.block(i));
    return d;
}

} // namespace perfcode

#endif
