#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "perfcode/dataset.hpp"
#include "perfcode/invariants.hpp"

using namespace perfcode;

TEST_CASE("embedded tables are internally consistent") {
    TripleSystem sts{15, code4918_sts_triples()};
    sts.normalize();
    CHECK(sts.size() == 35);
    CHECK(sts.is_steiner());

    Gf2Basis basis(15);
    for (const auto& supp : code4918_kernel_basis_supports())
        CHECK(basis.insert(Word::from_support(15, std::span<const int>(supp.data(), supp.size()))));
    CHECK(basis.rank() == 6);

    CHECK(code4918_coset_rep_supports().size() == 31);
    CHECK(code4918_symmetry_cycles().size() == 3);
}

TEST_CASE("checked reconstruction") {
    Code c = build_code_4918();
    CHECK(c.explicit_words().size() == 2048);
    CHECK(c.explicit_words().contains(Word::zero(15)));
    CHECK(c.label() == "builtin:4918");
}

TEST_CASE("reference rows") {
    const ReferenceRow& row = reference_row(4918);
    CHECK(row.rank == 14);
    CHECK(row.kernel_dim == 6);
    CHECK(row.sym_order == 4);
    CHECK(row.mu == "0^15");
    CHECK(row.aut_sts_order == 4);
    CHECK(row.sts_rank == 14);

    const ReferenceRow& r51 = reference_row(51);
    CHECK(r51.rank == 13);
    CHECK(r51.kernel_dim == 7);
    CHECK(r51.sym_order == 8);
    CHECK(r51.mu == "1^13 3^1 5^1");
    CHECK(r51.aut_sts_order == 8);
    CHECK(r51.sts_rank == 13);

    CHECK_THROWS_AS(reference_row(999), PreconditionError);
}

TEST_CASE("code file round trip") {
    Code h3 = Code::hamming(3);
    std::string path = "test_roundtrip.code";
    save_code(h3.explicit_words(), path);
    ExplicitCode back = load_code(path);
    CHECK(back == h3.explicit_words());
    std::remove(path.c_str());
}

TEST_CASE("loader accepts comments and duplicates, rejects bad input") {
    std::istringstream ok("# comment\nn=3 k=3\n000\n111\n111\n");
    ExplicitCode c = load_code_from_stream(ok, "test");
    CHECK(c.size() == 2);  // duplicate removed (with a warning on stderr)

    std::istringstream missing_zero("n=3 k=1\n111\n");
    CHECK_THROWS_AS(load_code_from_stream(missing_zero, "test"), ParseError);

    std::istringstream short_row("n=3 k=2\n000\n11\n");
    CHECK_THROWS_AS(load_code_from_stream(short_row, "test"), ParseError);

    std::istringstream bad_header("k=3 n=3\n000\n");
    CHECK_THROWS_AS(load_code_from_stream(bad_header, "test"), ParseError);

    std::istringstream truncated("n=3 k=2\n000\n");
    CHECK_THROWS_AS(load_code_from_stream(truncated, "test"), ParseError);

    CHECK_THROWS_AS(load_code("no_such_file.code"), ParseError);
}

TEST_CASE("canonical write order is lexicographic") {
    std::string text = code_to_text(Code::hamming(2).explicit_words());
    CHECK(text == "n=3 k=2\n000\n111\n");
}

TEST_CASE("shipped data files match the embedded tables") {
    // The golden code file is byte-identical to a fresh serialization.
    std::ifstream golden(std::string(PERFCODE_SOURCE_DIR) + "/data/code4918.code");
    REQUIRE(golden.good());
    std::stringstream buf;
    buf << golden.rdbuf();
    CHECK(buf.str() == code_to_text(build_code_4918().explicit_words()));

    std::ifstream sts_file(std::string(PERFCODE_SOURCE_DIR) + "/data/sts4918.txt");
    REQUIRE(sts_file.good());
    std::stringstream sts_buf;
    sts_buf << sts_file.rdbuf();
    CHECK(sts_buf.str() == sts_extract(build_code_4918()).to_text());

    std::ifstream table(std::string(PERFCODE_SOURCE_DIR) + "/data/table4.json");
    REQUIRE(table.good());
    nlohmann::json rows = nlohmann::json::parse(table);
    REQUIRE(rows.is_array());
    REQUIRE(rows.size() == reference_rows().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ReferenceRow& r = reference_rows()[i];
        CHECK(rows[i]["code"] == r.id);
        CHECK(rows[i]["rank"] == r.rank);
        CHECK(rows[i]["kernel_dim"] == r.kernel_dim);
        CHECK(rows[i]["sym_order"] == r.sym_order);
        CHECK(rows[i]["mu"] == r.mu);
        CHECK(rows[i]["aut_sts_order"] == r.aut_sts_order);
        CHECK(rows[i]["sts_rank"] == r.sts_rank);
    }
}

TEST_CASE("transcription drift surfaces as a failed reconstruction") {
    // Rebuild with one coset support corrupted: the word set is no
    // longer a perfect code, which is what the builder asserts against.
    Gf2Basis basis(15);
    for (const auto& supp : code4918_kernel_basis_supports())
        basis.insert(Word::from_support(15, std::span<const int>(supp.data(), supp.size())));
    std::vector<Word> words = basis.enumerate_span();
    auto reps = code4918_coset_rep_supports();
    reps[0] = {1, 12, 14};  // tampered: should be {1,12,15}
    std::vector<Word> kernel_words = words;
    for (const auto& supp : reps) {
        Word rep = Word::from_support(15, std::span<const int>(supp.data(), supp.size()));
        for (const Word& k : kernel_words) words.push_back(rep + k);
    }
    Code broken = Code::from_explicit(ExplicitCode::from_words(15, std::move(words)));
    CHECK(broken.explicit_words().size() == 2048);
    CHECK_FALSE(is_perfect(broken));
}
