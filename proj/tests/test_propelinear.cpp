#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perfcode/construct.hpp"
#include "perfcode/dataset.hpp"
#include "perfcode/propelinear.hpp"

using namespace perfcode;

TEST_CASE("incorrect inverse decisions") {
    Code c = build_code_4918();
    const ExplicitCode& ec = c.explicit_words();
    CHECK(incorrect_inverse(ec, Word::from_support(15, {2, 3, 4})));

    // Kernel words admit the identity rotation, which has order 1.
    KernelInfo ker = kernel(c);
    CHECK_FALSE(incorrect_inverse(ec, ker.words->word(1)));

    // Linear codes never have one.
    Code h15_code = hamming(4);
    const ExplicitCode& h15 = h15_code.explicit_words();
    Word w3;
    for (const Word& w : h15.words())
        if (w.weight() == 3) {
            w3 = w;
            break;
        }
    CHECK_FALSE(incorrect_inverse(h15, w3));

    CHECK_THROWS_AS(incorrect_inverse(ec, Word::from_support(15, {1})), PreconditionError);
}

TEST_CASE("even symmetry order and support stabilization") {
    Code c = build_code_4918();
    const ExplicitCode& ec = c.explicit_words();
    Word x = Word::from_support(15, {2, 3, 4});
    CHECK(corollary1_check(ec, x));

    // Injecting a synthetic odd-order group flags the inconsistency.
    PermGroup odd = PermGroup::generate(15, {Perm::from_cycles(15, "(9,10,11)")});
    REQUIRE(odd.order() == 3);
    CHECK_FALSE(corollary1_check(ec, x, {}, &odd));

    Code h15_code = hamming(4);
    const ExplicitCode& h15 = h15_code.explicit_words();
    Word w3;
    for (const Word& w : h15.words())
        if (w.weight() == 3) {
            w3 = w;
            break;
        }
    CHECK_THROWS_AS(corollary1_check(h15, w3), PreconditionError);
}

TEST_CASE("assignment verification") {
    Code h15_code = hamming(4);
    const ExplicitCode& h15 = h15_code.explicit_words();
    PropelinearAssignment all_id;
    all_id.code = std::make_shared<const ExplicitCode>(h15);
    all_id.pi.assign(h15.size(), Perm::identity(15));
    AssignmentCheck check = verify_propelinear_assignment(h15, all_id, true);
    CHECK(check.ok);
    CHECK(check.exhaustive);
    CHECK(check.normalized_ok);  // one permutation = |C| / |Ker|

    // Breaking one entry produces a counterexample pair.
    PropelinearAssignment broken = all_id;
    broken.pi[3] = Perm::transposition(15, 1, 2);
    AssignmentCheck bad = verify_propelinear_assignment(h15, broken, false);
    CHECK_FALSE(bad.ok);
    CHECK(bad.counterexample.has_value());

    PropelinearAssignment incomplete;
    incomplete.code = all_id.code;
    CHECK_THROWS_AS(verify_propelinear_assignment(h15, incomplete, false), PreconditionError);
}

TEST_CASE("regular subgroup search finds translations of linear codes") {
    Code h7_code = hamming(3);
    const ExplicitCode& h7 = h7_code.explicit_words();
    RegularSearchResult res = regular_subgroup_search(h7, h7.size());
    REQUIRE(res.assignment.has_value());
    CHECK(res.assignment->distinct_permutations() == 1);
    CHECK(verify_propelinear_assignment(h7, *res.assignment, true).normalized_ok);

    Code m15 = mollard(hamming(3), trivial_p1());
    RegularSearchResult linear = regular_subgroup_search(m15.explicit_words(), 2048);
    REQUIRE(linear.assignment.has_value());
    CHECK(linear.assignment->distinct_permutations() == 1);
}

TEST_CASE("no regular subgroup over the built-in length-15 code") {
    Code c = build_code_4918();
    const ExplicitCode& ec = c.explicit_words();

    RegularSearchResult search = regular_subgroup_search(ec, 2048);
    CHECK_FALSE(search.assignment.has_value());
    CHECK(search.complete);

    AutGroup aut = automorphism_group(ec);
    RegularSearchResult descent = regular_subgroup_descent(aut, 2048);
    CHECK_FALSE(descent.assignment.has_value());
    CHECK(descent.complete);
    CHECK(descent.strategy == "index2-descent");

    // Both refutation routes agree with the incorrect-inverse argument.
    CHECK(incorrect_inverse(ec, Word::from_support(15, {2, 3, 4})));

    CHECK_THROWS_AS(regular_subgroup_search(ec, 1024), PreconditionError);
}

TEST_CASE("found structures transport to a group operation") {
    Code h7_code = hamming(3);
    const ExplicitCode& h7 = h7_code.explicit_words();
    RegularSearchResult res = regular_subgroup_search(h7, h7.size());
    REQUIRE(res.assignment.has_value());
    const PropelinearAssignment& pa = *res.assignment;
    // x * y = x + pi_x(y): associative with identity 0 on sampled triples.
    std::uint64_t rng = 41;
    auto star = [&](const Word& a, const Word& b) { return a + pa.at(a).apply(b); };
    for (int trial = 0; trial < 2000; ++trial) {
        const Word& a = h7.word(next_rand(rng) % h7.size());
        const Word& b = h7.word(next_rand(rng) % h7.size());
        const Word& c = h7.word(next_rand(rng) % h7.size());
        CHECK(star(star(a, b), c) == star(a, star(b, c)));
        CHECK(star(Word::zero(7), a) == a);
    }
}

TEST_CASE("certificates for the product series") {
    Code c = build_code_4918();
    Word x = Word::from_support(15, {2, 3, 4});

    for (int r : {1, 2, 3}) {
        CertificateResult res = theorem1_certificate(c, x, DSide::hamming(r), 1);
        REQUIRE(res.ok);
        CHECK(res.certificate.kind == "theorem1-part1");
        for (const Premise& p : res.certificate.premises) {
            CHECK(p.holds);
            CHECK_FALSE(p.recheck.empty());
        }
        CHECK(res.certificate.witness_bits.size() == static_cast<std::size_t>(15 * ((1 << r) - 1) + 15 + (1 << r) - 1));
    }

    // Part 2 with the published profile rows.
    for (int id : {51, 694, 724, 771}) {
        MuProfile mu_d = MuProfile::from_exponent_form(reference_row(id).mu);
        CertificateResult res =
            theorem1_certificate(c, x, DSide::from_profile(mu_d, "ref:" + std::to_string(id)), 2);
        CHECK(res.ok);
    }

    // Hamming right side fails the strict window: mu = (m-1)/2 exactly.
    CertificateResult rejected = theorem1_certificate(c, x, DSide::hamming(3), 2);
    CHECK_FALSE(rejected.ok);
    CHECK(rejected.failed_condition == "mu-window");

    // A zero in the profile fails the lower bound.
    CertificateResult zero_mu =
        theorem1_certificate(c, x, DSide::from_profile(MuProfile::from_exponent_form("0^1 1^14"), "synthetic"), 2);
    CHECK_FALSE(zero_mu.ok);
    CHECK(zero_mu.failed_condition == "mu-window");

    // Part 3 chains parts 1 and 2.
    CertificateResult part3 = theorem1_certificate(
        c, x, DSide::from_profile(MuProfile::from_exponent_form("1^13 3^1 5^1"), "ref:51"), 3);
    REQUIRE(part3.ok);
    CHECK(part3.certificate.kind == "theorem1-part3");

    // A linear left side has no incorrect-inverse witness.
    Code h15_code = hamming(4);
    Word h15_w3;
    for (const Word& w : h15_code.explicit_words().words())
        if (w.weight() == 3) {
            h15_w3 = w;
            break;
        }
    CertificateResult linear_left = theorem1_certificate(hamming(4), h15_w3, DSide::hamming(1), 1);
    CHECK_FALSE(linear_left.ok);
    CHECK(linear_left.failed_condition == "incorrect-inverse");
}

TEST_CASE("certificate json is machine readable") {
    Code c = build_code_4918();
    Word x = Word::from_support(15, {2, 3, 4});
    CertificateResult res = theorem1_certificate(c, x, DSide::hamming(1), 1);
    REQUIRE(res.ok);
    std::string json = res.certificate.to_json_text();
    CHECK(json.find("\"kind\": \"theorem1-part1\"") != std::string::npos);
    CHECK(json.find("\"premises\"") != std::string::npos);
    CHECK(json.find("incorrect-inverse") != std::string::npos);
}

TEST_CASE("mu value separation over the product grid") {
    Code c = build_code_4918();

    SeparationReport m31 = mu_orbit_separation(mollard(c, trivial_p1()));
    CHECK(m31.row0_values == std::set<long long>{15});
    CHECK(m31.col0_values == std::set<long long>{1});
    CHECK(m31.interior_values == std::set<long long>{1});
    CHECK(m31.row0_separated);
    CHECK_FALSE(m31.col0_separated);
    CHECK(m31.row0_unique_max);

    SeparationReport m127 = mu_orbit_separation(mollard(c, hamming(3)));
    CHECK(m127.row0_values == std::set<long long>{63});
    CHECK(m127.row0_unique_max);

    // Linear case: every coordinate has the same value, nothing separates.
    SeparationReport m63 = mu_orbit_separation(mollard(hamming(3), hamming(3)));
    CHECK(m63.row0_values == std::set<long long>{31});
    CHECK_FALSE(m63.row0_separated);
    CHECK_FALSE(m63.row0_unique_max);
}

TEST_CASE("witness discovery") {
    Code c = build_code_4918();
    auto witness = find_incorrect_inverse_witness(c.explicit_words());
    REQUIRE(witness.has_value());
    CHECK(incorrect_inverse(c.explicit_words(), *witness));

    auto none = find_incorrect_inverse_witness(hamming(3).explicit_words());
    CHECK_FALSE(none.has_value());
}

TEST_CASE("descent finds regular subgroups when they exist") {
    // Repetition code of length 2: Aut has order 4 (a 2-power), and the
    // translations form a regular subgroup of order |C| = 2.
    ExplicitCode rep2 = ExplicitCode::from_words(2, {Word::zero(2), Word::from_support(2, {1, 2})});
    AutGroup aut = automorphism_group(rep2);
    REQUIRE(aut.order() == 4);
    RegularSearchResult res = regular_subgroup_descent(aut, 2);
    REQUIRE(res.assignment.has_value());
    CHECK(verify_propelinear_assignment(rep2, *res.assignment, false).ok);

    // The probe agrees.
    RegularSearchResult probe = regular_subgroup_search(rep2, 2);
    REQUIRE(probe.assignment.has_value());
    CHECK(verify_propelinear_assignment(rep2, *probe.assignment, false).ok);
}

TEST_CASE("descent preconditions") {
    AutGroup aut7 = automorphism_group(hamming(3).explicit_words());
    REQUIRE(aut7.order() == 2688);  // not a 2-power
    CHECK_THROWS_AS(regular_subgroup_descent(aut7, 16), PreconditionError);
    Code c = build_code_4918();
    AutGroup aut = automorphism_group(c.explicit_words());
    CHECK_THROWS_AS(regular_subgroup_descent(aut, 1024), PreconditionError);
}
