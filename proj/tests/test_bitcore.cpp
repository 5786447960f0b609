#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perfcode/construct.hpp"
#include "perfcode/dataset.hpp"
#include "perfcode/invariants.hpp"

using namespace perfcode;

namespace {

// Naive per-bit counter, the independent oracle for weight().
int naive_weight(const Word& w) {
    int c = 0;
    for (int i = 1; i <= w.length(); ++i)
        if (w.get(i)) ++c;
    return c;
}

Word random_word(int n, std::uint64_t& rng) {
    Word w(n);
    for (int i = 1; i <= n; ++i)
        if (next_rand(rng) & 1) w.set(i);
    return w;
}

} // namespace

TEST_CASE("weight basics and random oracle") {
    CHECK(Word::zero(15).weight() == 0);
    CHECK(Word::from_support(15, {2, 3, 4}).weight() == 3);
    std::uint64_t rng = 7;
    for (int trial = 0; trial < 200; ++trial) {
        Word w = random_word(31, rng);
        CHECK(w.weight() == naive_weight(w));
    }
}

TEST_CASE("distance identities and metric properties") {
    Word x = Word::from_support(15, {2, 3, 4});
    CHECK(distance(x, x) == 0);
    CHECK(distance(Word::zero(15), x) == 3);
    std::uint64_t rng = 11;
    for (int trial = 0; trial < 300; ++trial) {
        Word a = random_word(15, rng), b = random_word(15, rng), c = random_word(15, rng);
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c));
        CHECK(distance(a, b) == (a + b).weight());
        CHECK((a + a).is_zero());
    }
    CHECK_THROWS_AS(distance(Word::zero(7), Word::zero(15)), PreconditionError);
}

TEST_CASE("word order is lexicographic on bit strings") {
    std::uint64_t rng = 13;
    for (int trial = 0; trial < 500; ++trial) {
        Word a = random_word(20, rng), b = random_word(20, rng);
        CHECK((a < b) == (a.bits() < b.bits()));
    }
    // Coordinate 1 is the most significant position of the string order.
    CHECK(Word::from_support(3, {3}) < Word::from_support(3, {2}));
}

TEST_CASE("bit string parse and format round trip") {
    Word w = Word::from_bits("010110");
    CHECK(w.length() == 6);
    CHECK(w.support() == std::vector<int>{2, 4, 5});
    CHECK(w.bits() == "010110");
    CHECK_THROWS_AS(Word::from_bits("01x"), ParseError);
    CHECK_THROWS_AS(Word::zero(15).get(16), PreconditionError);
    CHECK_THROWS_AS(Word::zero(15).get(0), PreconditionError);
}

TEST_CASE("membership through explicit sets and descriptors") {
    Code m63 = mollard(hamming(3), hamming(3));
    CHECK(m63.contains(Word::zero(63)));

    Code h7 = hamming(3);
    MollardShape shape(7, 7);
    for (const Word& x : h7.explicit_words().words()) CHECK(m63.contains(embed1(x, shape)));

    // Exhaustive member count of the built-in length-15 code.
    Code c = build_code_4918();
    long long members = 0;
    Word w(15);
    for (std::uint32_t v = 0; v < (1u << 15); ++v) {
        w.block_mut(0) = v;
        if (c.contains(w)) ++members;
    }
    CHECK(members == 2048);
}

TEST_CASE("explicit enumeration agrees with the oracle on every word of length 15") {
    Code m15 = mollard(hamming(3), trivial_p1());
    REQUIRE(m15.is_explicit());
    const Descriptor& desc = *m15.descriptor();
    Word w(15);
    for (std::uint32_t v = 0; v < (1u << 15); ++v) {
        w.block_mut(0) = v;
        REQUIRE(m15.explicit_words().contains(w) == desc_contains(desc, w));
    }
}

TEST_CASE("min distance") {
    CHECK(min_distance(hamming(3).explicit_words()) == 3);
    Code c = build_code_4918();
    CHECK(min_distance(c.explicit_words()) == 3);
    KernelInfo ker = kernel(c);
    CHECK(min_distance(*ker.words) == 4);
    ExplicitCode tiny = ExplicitCode::from_words(4, {Word::zero(4)});
    CHECK_THROWS_AS(min_distance(tiny), PreconditionError);
}

TEST_CASE("perfectness decisions") {
    CHECK(is_perfect(hamming(3)));
    CHECK(is_perfect(hamming(2)));
    CHECK(is_perfect(build_code_4918()));

    ExplicitCode only_zero = ExplicitCode::from_words(15, {Word::zero(15)});
    CHECK_FALSE(is_perfect(Code::from_explicit(only_zero)));

    // Oracle scale: certificate + sampled evidence, flagged.
    Code m31 = mollard(build_code_4918(), trivial_p1());
    PerfectCheck pc = check_perfect(m31);
    CHECK(pc.perfect);
    CHECK_FALSE(pc.exhaustive);
    CHECK(pc.note.find("sampled") != std::string::npos);
}

TEST_CASE("materialization threshold is enforced with a distinct error") {
    Code m31 = mollard(build_code_4918(), trivial_p1());
    CHECK(m31.cardinality_log2() == 26);
    CHECK_FALSE(m31.is_explicit());
    CHECK_THROWS_AS(m31.explicit_words(), TooLargeError);
}

TEST_CASE("explicit codes require the zero word and deduplicate") {
    std::vector<Word> words{Word::zero(5), Word::from_support(5, {1, 2}), Word::from_support(5, {1, 2})};
    ExplicitCode c = ExplicitCode::from_words(5, words);
    CHECK(c.size() == 2);
    CHECK_THROWS_AS(ExplicitCode::from_words(5, {Word::from_support(5, {1})}), PreconditionError);
}

TEST_CASE("cardinality rendering") {
    CHECK(pow2_decimal(0) == "1");
    CHECK(pow2_decimal(10) == "1024");
    CHECK(pow2_decimal(57) == "144115188075855872");
    Code m63 = mollard(hamming(3), hamming(3));
    CHECK(m63.cardinality_decimal() == "144115188075855872");
    CHECK(m63.cardinality_log2() == 57);
}
