#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perfcode/construct.hpp"
#include "perfcode/dataset.hpp"
#include "perfcode/propelinear.hpp"

using namespace perfcode;

namespace {

Perm random_perm(int n, std::uint64_t& rng) {
    std::vector<std::uint16_t> img(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
    for (int i = n; i > 1; --i)
        std::swap(img[static_cast<std::size_t>(i)], img[next_rand(rng) % i + 1]);
    return Perm(std::move(img));
}

Word random_word(int n, std::uint64_t& rng) {
    Word w(n);
    for (int i = 1; i <= n; ++i)
        if (next_rand(rng) & 1) w.set(i);
    return w;
}

} // namespace

TEST_CASE("permutation action and composition laws") {
    std::uint64_t rng = 5;
    for (int trial = 0; trial < 200; ++trial) {
        Perm a = random_perm(12, rng), b = random_perm(12, rng);
        Word w = random_word(12, rng);
        // Supports map forward and composition matches the action.
        CHECK(a.apply(w).support() == [&] {
            std::vector<int> s;
            for (int i : w.support()) s.push_back(a(i));
            std::sort(s.begin(), s.end());
            return s;
        }());
        CHECK(a.compose(b).apply(w) == a.apply(b.apply(w)));
        CHECK(a.compose(a.inverse()).is_identity());
    }
}

TEST_CASE("automorphism pairs compose by the twisted rule") {
    std::uint64_t rng = 19;
    for (int trial = 0; trial < 200; ++trial) {
        Automorphism f{random_word(10, rng), random_perm(10, rng)};
        Automorphism g{random_word(10, rng), random_perm(10, rng)};
        Word y = random_word(10, rng);
        CHECK(f.compose(g).act(y) == f.act(g.act(y)));
        Automorphism e = f.compose(f.inverse());
        CHECK(e.x.is_zero());
        CHECK(e.pi.is_identity());
    }
}

TEST_CASE("cycle notation") {
    Perm p = Perm::from_cycles(15, "(5,15)(9,12)(10,14)(11,13)");
    CHECK(p.cycles() == "(5,15)(9,12)(10,14)(11,13)");
    CHECK(p.order() == 2);
    CHECK(Perm::identity(9).cycles() == "id");
    CHECK(Perm::from_cycles(9, "id").is_identity());
    Perm q = Perm::from_cycles(7, "(1,2,3)");
    CHECK(q(1) == 2);
    CHECK(q(3) == 1);
    CHECK(q.order() == 3);
    std::uint64_t rng = 23;
    for (int trial = 0; trial < 100; ++trial) {
        Perm r = random_perm(14, rng);
        CHECK(Perm::from_cycles(14, r.cycles()) == r);
    }
}

TEST_CASE("triple-system automorphisms") {
    TripleSystem fano = sts_extract(hamming(3));
    PermGroup aut = sts_automorphisms(fano);
    CHECK(aut.order() == 168);
    CHECK(aut.contains(Perm::identity(7)));
    CHECK(aut.verify_closure());

    TripleSystem sts{15, code4918_sts_triples()};
    sts.normalize();
    PermGroup aut15 = sts_automorphisms(sts);
    CHECK(aut15.order() == 4);
    CHECK(aut15.contains(Perm::from_cycles(15, "(5,15)(9,12)(10,14)(11,13)")));

    TripleSystem broken{7, {{1, 2, 3}}};
    CHECK_THROWS_AS(sts_automorphisms(broken), PreconditionError);
}

TEST_CASE("symmetry groups") {
    PermGroup sym7 = symmetry_group(hamming(3).explicit_words());
    CHECK(sym7.order() == 168);

    Code c = build_code_4918();
    PermGroup sym = symmetry_group(c.explicit_words());
    REQUIRE(sym.order() == 4);
    for (const std::string& cyc : code4918_symmetry_cycles()) CHECK(sym.contains(Perm::from_cycles(15, cyc)));

    // Weight-class fallback for a code with no weight-3 words: the even
    // weight code of length 4 is invariant under all of S4.
    std::vector<Word> even;
    for (std::uint32_t v = 0; v < 16; ++v) {
        Word w(4);
        w.block_mut(0) = v;
        if (w.weight() % 2 == 0) even.push_back(w);
    }
    PermGroup s4 = symmetry_group(ExplicitCode::from_words(4, even));
    CHECK(s4.order() == 24);

    // Symmetries of the code stabilize its kernel setwise.
    KernelInfo ker = kernel(c);
    for (const Perm& p : sym.elements())
        for (const Word& w : ker.words->words()) CHECK(ker.words->contains(p.apply(w)));
}

TEST_CASE("equivalence search") {
    Code h7_code = hamming(3);
    const ExplicitCode& h7 = h7_code.explicit_words();
    std::vector<Perm> all = equivalence_maps(h7, h7, SearchMode::All);
    CHECK(all.size() == 168);

    // Relabeling two coordinates is recovered.
    Perm swap12 = Perm::transposition(7, 1, 2);
    std::vector<Word> relabeled;
    for (const Word& w : h7.words()) relabeled.push_back(swap12.apply(w));
    ExplicitCode b = ExplicitCode::from_words(7, relabeled);
    std::vector<Perm> maps = equivalence_maps(h7, b, SearchMode::All);
    CHECK_FALSE(maps.empty());
    CHECK(std::find(maps.begin(), maps.end(), swap12) != maps.end());

    // Translates of the built-in code are reachable (it is transitive).
    Code c = build_code_4918();
    Word x = Word::from_support(15, {2, 3, 4});
    CHECK_FALSE(equivalence_maps(c.explicit_words(), c.explicit_words().translate(x), SearchMode::First)
                    .empty());

    CHECK_THROWS_AS(equivalence_maps(h7, ExplicitCode::from_words(4, {Word::zero(4)}), SearchMode::All),
                    PreconditionError);
}

TEST_CASE("rotation cosets") {
    Code c = build_code_4918();
    const ExplicitCode& ec = c.explicit_words();
    PermGroup sym = symmetry_group(ec);

    // R_0 is the symmetry group itself.
    std::vector<Perm> r0 = rotations_at(ec, Word::zero(15));
    CHECK(r0 == sym.elements());

    // Kernel words admit the identity rotation.
    KernelInfo ker = kernel(c);
    Word k = ker.words->word(1);
    std::vector<Perm> rk = rotations_at(ec, k);
    CHECK(std::find(rk.begin(), rk.end(), Perm::identity(15)) != rk.end());

    CHECK_THROWS_AS(rotations_at(ec, Word::from_support(15, {1})), PreconditionError);

    // Every nonempty coset is exactly pi0 * Sym.
    Word x = Word::from_support(15, {2, 3, 4});
    std::vector<Perm> rx = rotations_at(ec, x);
    REQUIRE(rx.size() == 4);
    std::vector<Perm> coset;
    for (const Perm& g : sym.elements()) coset.push_back(rx.front().compose(g));
    std::sort(coset.begin(), coset.end());
    CHECK(coset == rx);
}

TEST_CASE("transitivity") {
    CHECK(is_transitive(hamming(4).explicit_words()));
    Code c = build_code_4918();
    CHECK(is_transitive(c.explicit_words()));

    // Removing a nonzero codeword breaks distance invariance.
    std::vector<Word> mutilated(c.explicit_words().words().begin() + 1, c.explicit_words().words().end());
    mutilated.insert(mutilated.begin(), Word::zero(15));
    mutilated.pop_back();
    CHECK_FALSE(is_transitive(ExplicitCode::from_words(15, mutilated)));
}

TEST_CASE("automorphism group materialization") {
    Code c = build_code_4918();
    AutGroup aut = automorphism_group(c.explicit_words());
    CHECK(aut.order() == 8192);
    CHECK(aut.transitive);

    std::uint64_t rng = 31;
    for (int trial = 0; trial < 10000; ++trial) {
        const Automorphism& a = aut.elements[next_rand(rng) % aut.order()];
        const Automorphism& b = aut.elements[next_rand(rng) % aut.order()];
        REQUIRE(aut.contains(a.compose(b)));
    }

    AutGroup aut7 = automorphism_group(hamming(3).explicit_words());
    CHECK(aut7.order() == 16 * 168);

    CHECK_THROWS_AS(automorphism_group(hamming(4).explicit_words()), TooLargeError);
}

TEST_CASE("rotation group projections") {
    Code c = build_code_4918();
    PermGroup rot = rotation_group(c.explicit_words());
    CHECK(rot.order() == 128);
    CHECK(symmetry_group(c.explicit_words()).is_subgroup_of(rot));
    // Rotations stabilize the dual zero set.
    std::set<int> zero_set = dual_zero_set(c).zero_set;
    for (const Perm& p : rot.elements()) CHECK(p.apply(zero_set) == zero_set);

    PermGroup h7_rot = rotation_group(hamming(3).explicit_words());
    PermGroup h7_sym = symmetry_group(hamming(3).explicit_words());
    CHECK(h7_rot.elements() == h7_sym.elements());
}

TEST_CASE("factor rotations assemble into product rotations") {
    // For z in M(C,D) and rotations at the projections, the lifted pair
    // composes to a rotation at z (checked by full membership sweep).
    Code h7 = hamming(3);
    Code m15 = mollard(h7, trivial_p1());
    MollardShape shape(7, 1);
    const ExplicitCode& m = m15.explicit_words();
    std::uint64_t rng = 77;
    for (int trial = 0; trial < 3; ++trial) {
        Word z = m.word(next_rand(rng) % m.size());
        Word pz = p1(z, shape);
        std::vector<Perm> rx = rotations_at(h7.explicit_words(), pz);
        REQUIRE_FALSE(rx.empty());
        Perm lifted = lift_d1(rx.front(), shape);
        for (const Word& w : m.words()) REQUIRE(m.contains(z + lifted.apply(w)));
    }
}

TEST_CASE("group enumeration caps") {
    std::vector<Perm> gens;
    gens.push_back(Perm::from_cycles(17, "(1,2)"));
    gens.push_back(Perm::from_cycles(17, "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17)"));
    CHECK_THROWS_AS(PermGroup::generate(17, gens), TooLargeError);  // S17 blows past 2^16
}
