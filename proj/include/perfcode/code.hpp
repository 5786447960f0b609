#ifndef PERFCODE_CODE_HPP
#define PERFCODE_CODE_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "perfcode/context.hpp"
#include "perfcode/mollard_shape.hpp"
#include "perfcode/word.hpp"

namespace perfcode {

// An enumerated code: deduplicated words in canonical (lexicographic)
// order. Every code built here contains the all-zero word.
class ExplicitCode {
public:
    static ExplicitCode from_words(int n, std::vector<Word> words);

    int length() const { return n_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<Word>& words() const { return words_; }
    const Word& word(std::size_t i) const { return words_[i]; }

    bool contains(const Word& w) const;
    // Index into words() or npos.
    std::size_t index_of(const Word& w) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // The translate x + C (contains zero whenever x is a codeword).
    ExplicitCode translate(const Word& x) const;

    bool operator==(const ExplicitCode& o) const { return n_ == o.n_ && words_ == o.words_; }

private:
    int n_ = 0;
    std::vector<Word> words_;
    std::unordered_set<std::uint64_t> fast_;  // populated when n <= 64
};

class ExplicitCode;

// Structural descriptor of a code; drives oracle membership when the
// word set is too large to materialize.
struct Descriptor {
    enum class Kind { Explicit, Hamming, Mollard };

    Kind kind = Kind::Explicit;
    int hamming_r = 0;                              // Kind::Hamming
    std::shared_ptr<const Descriptor> left, right;  // Kind::Mollard
    std::shared_ptr<const ExplicitCode> leaf;       // Kind::Explicit
    bool leaf_perfect = false;                      // leaf verified perfect
    std::string label;                              // source form, e.g. "hamming:3"

    int length() const;
    std::uint64_t cardinality_log2() const;  // valid for perfect descriptors
    bool structurally_perfect() const;       // perfect by construction
};

using DescPtr = std::shared_ptr<const Descriptor>;

// Membership through a descriptor tree.
bool desc_contains(const Descriptor& d, const Word& w);

// Parity-check syndrome of the Hamming code whose column i is the
// binary representation of i; zero iff w is a codeword.
std::uint32_t hamming_syndrome(const Word& w);

// A binary code: either an explicit word set, a membership oracle with a
// structural descriptor, or both (materialized codes keep their
// descriptor so oracle and enumerated routes can be cross-checked).
class Code {
public:
    Code() = default;

    static Code from_explicit(ExplicitCode words, std::string label = "");
    // Length 2^r - 1 Hamming code; explicit for r <= 4, parity-check
    // oracle for r >= 5. r = 1 is the length-1 code {0}.
    static Code hamming(int r);
    // Mollard combination of two perfect codes; materialized when the
    // cardinality is within opt.enum_cap_log2.
    static Code mollard(const Code& c, const Code& d, const Options& opt = {});

    int length() const { return n_; }
    std::uint64_t cardinality_log2() const { return card_log2_; }
    std::string cardinality_decimal() const;

    bool is_explicit() const { return words_ != nullptr; }
    // Throws TooLargeError when only the oracle is available.
    const ExplicitCode& explicit_words() const;
    std::shared_ptr<const ExplicitCode> explicit_ptr() const { return words_; }

    const DescPtr& descriptor() const { return desc_; }
    bool is_mollard() const { return desc_ && desc_->kind == Descriptor::Kind::Mollard; }
    bool is_hamming_kind() const { return desc_ && desc_->kind == Descriptor::Kind::Hamming; }
    MollardShape shape() const;  // valid for mollard descriptors
    // Child codes of a mollard descriptor (materialized when small).
    Code left_child(const Options& opt = {}) const;
    Code right_child(const Options& opt = {}) const;

    std::string label() const;

    // Membership test; explicit lookup when materialized, descriptor
    // recursion otherwise.
    bool contains(const Word& w) const;

    // Uniform random codeword drawn through the descriptor.
    Word sample(std::uint64_t& rng_state) const;

    // True when the descriptor certifies perfectness by construction.
    bool structurally_perfect() const { return desc_ && desc_->structurally_perfect(); }

private:
    int n_ = 0;
    std::uint64_t card_log2_ = 0;
    DescPtr desc_;
    std::shared_ptr<const ExplicitCode> words_;
};

// Membership as a free operation mirroring the library surface.
bool membership(const Code& code, const Word& w);

// Exact minimum distance of an explicit code (at least 2 codewords).
int min_distance(const ExplicitCode& code);

struct PerfectCheck {
    bool perfect = false;
    bool exhaustive = false;  // false => certificate + sampled evidence
    std::string note;
};

// Perfectness decision: exhaustive radius-1 ball sweep for n <= 24,
// cardinality certificate plus sampled distance evidence above.
PerfectCheck check_perfect(const Code& code, const Options& opt = {});
bool is_perfect(const Code& code, const Options& opt = {});

// Splitmix64 step, the library-wide deterministic RNG primitive.
inline std::uint64_t next_rand(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace perfcode

#endif
