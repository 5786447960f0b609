#ifndef PERFCODE_INVARIANTS_HPP
#define PERFCODE_INVARIANTS_HPP

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "perfcode/code.hpp"
#include "perfcode/linalg.hpp"

namespace perfcode {

// A set of 3-element coordinate subsets; a Steiner triple system when
// the pair-coverage invariant holds.
struct TripleSystem {
    int n = 0;
    std::vector<std::array<int, 3>> triples;

    void normalize();  // ascending within triples, triples sorted
    std::size_t size() const { return triples.size(); }
    bool operator==(const TripleSystem& o) const { return n == o.n && triples == o.triples; }

    // Every unordered pair of points lies in exactly one triple and the
    // triple count is n(n-1)/6.
    bool is_steiner() const;

    // Number of triples through each point (1-based index i at [i-1]).
    std::vector<int> point_degrees() const;

    Word characteristic_word(std::size_t idx) const;
    std::vector<Word> characteristic_words() const;

    // One triple per line, "a b c" ascending.
    std::string to_text() const;
    static TripleSystem from_text(int n, const std::string& text);
};

// All weight-3 codewords; for explicit codes by filtering, for oracle
// codes by sweeping the C(n,3) candidates through membership.
TripleSystem sts_extract(const Code& code, const Options& opt = {});

// Per-coordinate counts of weight-3 kernel codewords through each
// coordinate, plus the multiset rendering in exponent notation.
struct MuProfile {
    std::vector<long long> counts;  // coordinate i at [i-1]

    int n() const { return static_cast<int>(counts.size()); }
    long long at(int i) const { return counts[static_cast<std::size_t>(i) - 1]; }
    std::map<long long, long long> multiset() const;
    // Bases ascending, e.g. "1^13 3^1 5^1".
    std::string exponent_form() const;
    long long total() const;

    static MuProfile constant(int n, long long v);
    // Parses exponent notation; coordinates are filled with values
    // ascending, which fixes the multiset (all uses are multiset-level).
    static MuProfile from_exponent_form(const std::string& text);

    bool operator==(const MuProfile& o) const { return counts == o.counts; }
    bool same_multiset(const MuProfile& o) const { return multiset() == o.multiset(); }
};

// Kernel Ker(C) = {x in C : x + C = C}: exact word set for explicit
// codes, componentwise predicate plus dimension arithmetic for mollard
// descriptors, the code itself for Hamming descriptors.
struct KernelInfo {
    int dim = 0;
    std::function<bool(const Word&)> member;
    std::shared_ptr<const ExplicitCode> words;  // explicit codes only
    std::vector<Word> basis;                    // explicit codes only
};

KernelInfo kernel(const Code& code, const Options& opt = {});
// Forces the componentwise descriptor route even for materialized
// codes, so the two kernel routes can be compared.
KernelInfo kernel_by_descriptor(const Code& code, const Options& opt = {});

struct RankResult {
    int value = 0;
    bool exact = false;
    bool sampled = false;  // exact via the sampled-span protocol
    std::uint64_t samples_used = 0;
};

// Exact rank for explicit codes; sampled span certified against the
// iterative rank arithmetic for oracle codes (lower bound otherwise).
RankResult rank(const Code& code, const Options& opt = {});

// Rank / kernel dimension by descriptor arithmetic alone.
int formula_rank(const Descriptor& d);
int formula_kernel_dim(const Descriptor& d);

struct DualResult {
    std::vector<Word> dual_basis;
    std::set<int> zero_set;
    bool exact = false;
    bool sampled = false;
    int span_rank = 0;
};

// I(C): coordinates that are zero in every dual vector.
DualResult dual_zero_set(const Code& code, const Options& opt = {});

// Mu profile: kernel filtering for explicit codes, the closed
// product-form for mollard descriptors, (m-1)/2 for Hamming codes.
MuProfile mu(const Code& code, const Options& opt = {});
// Independent C(n,3) sweep through the kernel predicate.
MuProfile mu_bruteforce(const Code& code, const Options& opt = {});

// Closed forms for the product construction.
MuProfile mollard_mu_formula(const MuProfile& mu_c, const MuProfile& mu_d, int t, int m);
std::pair<int, int> mollard_rank_kernel_formula(int rank_c, int ker_c, int rank_d, int ker_d, int t, int m);
std::set<int> mollard_zero_set_formula(const std::set<int>& zero_c, const std::set<int>& zero_d, int t, int m);

// Classification of a product code's triple system into the four
// structural classes (column-0 bridge, row-triple, column-triple,
// product triples). Throws on a triple matching no class.
struct TripleClassCounts {
    long long t00 = 0, t30 = 0, t03 = 0, t33 = 0;
    long long total() const { return t00 + t30 + t03 + t33; }
};

TripleClassCounts sts_mollard_decompose(const TripleSystem& ts, const Code& mollard_code);

} // namespace perfcode

#endif
