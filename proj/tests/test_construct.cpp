#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "perfcode/construct.hpp"
#include "perfcode/dataset.hpp"
#include "perfcode/groups.hpp"

using namespace perfcode;

TEST_CASE("hamming builders") {
    Code h1 = hamming(1);
    CHECK(h1.length() == 1);
    CHECK(h1.explicit_words().size() == 1);
    CHECK(h1.explicit_words().word(0).is_zero());

    Code h2 = hamming(2);
    CHECK(h2.explicit_words().size() == 2);
    CHECK(h2.explicit_words().word(1).support() == std::vector<int>{1, 2, 3});

    Code h3 = hamming(3);
    CHECK(h3.length() == 7);
    REQUIRE(h3.explicit_words().size() == 16);
    std::map<int, int> by_weight;
    for (const Word& w : h3.explicit_words().words()) ++by_weight[w.weight()];
    CHECK(by_weight == std::map<int, int>{{0, 1}, {3, 7}, {4, 7}, {7, 1}});

    Code h5 = hamming(5);
    CHECK(h5.length() == 31);
    CHECK_FALSE(h5.is_explicit());
    CHECK(h5.contains(Word::zero(31)));
    CHECK(h5.cardinality_log2() == 26);
}

TEST_CASE("mollard combinations and the cardinality law") {
    Code m15 = mollard(hamming(3), trivial_p1());
    CHECK(m15.length() == 15);
    CHECK(m15.explicit_words().size() == 2048);
    CHECK(is_perfect(m15));
    CHECK(m15.explicit_words().size() ==
          (std::size_t{1} << (7 * 1)) * hamming(3).explicit_words().size() * 1);

    Code m63 = mollard(hamming(3), hamming(3));
    CHECK(m63.length() == 63);
    CHECK(m63.cardinality_log2() == 57);

    Code m31 = mollard(build_code_4918(), trivial_p1());
    CHECK(m31.length() == 31);
    CHECK(m31.cardinality_log2() == 26);
}

TEST_CASE("mollard rejects non-perfect inputs") {
    std::vector<Word> even;
    for (std::uint32_t v = 0; v < 16; ++v) {
        Word w(4);
        w.block_mut(0) = v;
        if (w.weight() % 2 == 0) even.push_back(w);
    }
    Code not_perfect = Code::from_explicit(ExplicitCode::from_words(4, even));
    CHECK_THROWS_AS(mollard(not_perfect, trivial_p1()), PreconditionError);
}

TEST_CASE("shape indexing is the fixed bijection") {
    MollardShape s(15, 1);
    CHECK(s.index(2, 0) == 3);
    CHECK(s.index(3, 0) == 5);
    CHECK(s.index(4, 0) == 7);
    CHECK(s.index(0, 1) == 31);
    CHECK_THROWS_AS(s.index(0, 0), PreconditionError);

    for (int t : {2, 7, 15})
        for (int m : {1, 3, 7}) {
            MollardShape shape(t, m);
            std::vector<bool> seen(static_cast<std::size_t>(shape.length()) + 1, false);
            for (int r = 0; r <= t; ++r)
                for (int c = 0; c <= m; ++c) {
                    if (r == 0 && c == 0) continue;
                    int idx = shape.index(r, c);
                    CHECK(idx >= 1);
                    CHECK(idx <= shape.length());
                    CHECK_FALSE(seen[static_cast<std::size_t>(idx)]);
                    seen[static_cast<std::size_t>(idx)] = true;
                    CHECK(shape.pair_of(idx) == std::pair<int, int>{r, c});
                }
        }
}

TEST_CASE("parity checks and embeddings") {
    MollardShape shape(7, 7);
    CHECK(p1(Word::zero(63), shape).is_zero());
    CHECK(p2(Word::zero(63), shape).is_zero());

    Code h7 = hamming(3);
    for (const Word& x : h7.explicit_words().words()) {
        Word e = embed1(x, shape);
        CHECK(p1(e, shape) == x);
        CHECK(p2(e, shape).is_zero());
        Word e2 = embed2(x, shape);
        CHECK(p2(e2, shape) == x);
        CHECK(p1(e2, shape).is_zero());
    }

    // Random members have projections inside the factors.
    Code m63 = mollard(h7, h7);
    std::uint64_t rng = 99;
    for (int i = 0; i < 10000; ++i) {
        Word z = m63.sample(rng);
        REQUIRE(m63.contains(z));
        REQUIRE(h7.contains(p1(z, shape)));
        REQUIRE(h7.contains(p2(z, shape)));
    }

    // p1 is linear.
    for (int i = 0; i < 200; ++i) {
        Word a(63), b(63);
        for (int bi = 0; bi < a.block_count(); ++bi) {
            a.block_mut(bi) = next_rand(rng);
            b.block_mut(bi) = next_rand(rng);
        }
        a.block_mut(0) &= (std::uint64_t{1} << 63) - 1;
        b.block_mut(0) &= (std::uint64_t{1} << 63) - 1;
        CHECK(p1(a + b, shape) == p1(a, shape) + p1(b, shape));
        CHECK(p2(a + b, shape) == p2(a, shape) + p2(b, shape));
    }
}

TEST_CASE("embedding of the named support") {
    MollardShape shape(15, 1);
    Word x = Word::from_support(15, {2, 3, 4});
    CHECK(embed1(x, shape).support() == std::vector<int>{3, 5, 7});
    CHECK(embed1(Word::zero(15), shape).is_zero());
}

TEST_CASE("embeddings land in the product code") {
    Code h7 = hamming(3);
    Code m = mollard(h7, h7);
    MollardShape shape = m.shape();
    for (const Word& y : h7.explicit_words().words()) {
        CHECK(m.contains(embed2_checked(h7, y, shape)));
        CHECK(m.contains(embed1_checked(h7, y, shape)));
    }
    CHECK_THROWS_AS(embed1_checked(h7, Word::from_support(7, {1}), shape), PreconditionError);
}

TEST_CASE("row and column lifts") {
    MollardShape shape(7, 1);
    CHECK(lift_d1(Perm::identity(7), shape).is_identity());
    CHECK(lift_d2(Perm::identity(1), shape).is_identity());

    // Symmetries of the left factor lift to symmetries of the product:
    // exhaustive membership sweep at length 15.
    Code h7 = hamming(3);
    Code m15 = mollard(h7, trivial_p1());
    PermGroup sym7 = symmetry_group(h7.explicit_words());
    REQUIRE(sym7.order() == 168);
    int checked = 0;
    for (const Perm& s : sym7.elements()) {
        if (++checked > 24) break;  // two dozen generators-worth is plenty for the sweep
        Perm lifted = lift_d1(s, shape);
        for (const Word& w : m15.explicit_words().words()) REQUIRE(m15.contains(lifted.apply(w)));
    }

    // Lifted row and column permutations commute (disjoint moved sets).
    std::uint64_t rng = 3;
    MollardShape shape77(7, 7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint16_t> ia{0, 1, 2, 3, 4, 5, 6, 7}, ib{0, 1, 2, 3, 4, 5, 6, 7};
        for (int i = 7; i > 1; --i) {
            std::swap(ia[static_cast<std::size_t>(i)], ia[next_rand(rng) % i + 1]);
            std::swap(ib[static_cast<std::size_t>(i)], ib[next_rand(rng) % i + 1]);
        }
        Perm pa{ia}, pb{ib};
        Perm left = lift_d1(pa, shape77), right = lift_d2(pb, shape77);
        CHECK(left.compose(right) == right.compose(left));
    }

    // Sampled membership preservation at length 31.
    Code c = build_code_4918();
    Code m31 = mollard(c, trivial_p1());
    MollardShape shape31(15, 1);
    PermGroup sym_c = symmetry_group(c.explicit_words());
    for (const Perm& s : sym_c.elements()) {
        Perm lifted = lift_d1(s, shape31);
        std::uint64_t in_rng = 17;
        for (int i = 0; i < 10000; ++i) {
            Word z = m31.sample(in_rng);
            REQUIRE(m31.contains(lifted.apply(z)));
        }
    }
}

TEST_CASE("descriptor grammar") {
    CHECK(parse_descriptor("hamming:3").length() == 7);
    CHECK(parse_descriptor("p1").length() == 1);
    CHECK(parse_descriptor("builtin:4918").length() == 15);
    Code m = parse_descriptor("mollard(hamming:3,p1)");
    CHECK(m.length() == 15);
    Code nested = parse_descriptor("mollard(mollard(hamming:3,p1),hamming:2)");
    CHECK(nested.length() == 15 * 3 + 15 + 3);
    CHECK_THROWS_AS(parse_descriptor("mollard(hamming:3)"), ParseError);
    CHECK_THROWS_AS(parse_descriptor("builtin:999"), ParseError);
    CHECK_THROWS_AS(parse_descriptor("nonsense"), ParseError);
}
