#include "perfcode/dataset.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "perfcode/error.hpp"
#include "perfcode/invariants.hpp"
#include "perfcode/linalg.hpp"

namespace perfcode {

const std::vector<std::array<int, 3>>& code4918_sts_triples() {
    static const std::vector<std::array<int, 3>> triples = {
        {1, 3, 7},   {6, 11, 12}, {1, 5, 9},   {5, 7, 13},  {8, 10, 15},
        {3, 6, 8},   {1, 11, 14}, {6, 10, 14}, {7, 9, 10},  {2, 14, 15},
        {1, 4, 8},   {4, 10, 11}, {5, 8, 14},  {1, 12, 15}, {4, 5, 12},
        {1, 2, 6},   {3, 10, 12}, {6, 9, 13},  {5, 6, 15},  {8, 12, 13},
        {2, 3, 4},   {1, 10, 13}, {3, 13, 15}, {7, 12, 14}, {3, 9, 14},
        {4, 6, 7},   {2, 9, 12},  {2, 5, 10},  {4, 13, 14}, {2, 11, 13},
        {2, 7, 8},   {8, 9, 11},  {3, 5, 11},  {7, 11, 15}, {4, 9, 15},
    };
    return triples;
}

const std::vector<std::vector<int>>& code4918_kernel_basis_supports() {
    static const std::vector<std::vector<int>> basis = {
        {9, 11, 12, 13},
        {4, 6, 7, 8, 11, 12, 14, 15},
        {5, 12, 13, 14},
        {2, 3, 6, 7, 11, 13, 14, 15},
        {10, 12, 13, 15},
        {1, 6, 7, 12, 13},
    };
    return basis;
}

const std::vector<std::vector<int>>& code4918_coset_rep_supports() {
    static const std::vector<std::vector<int>> reps = {
        {1, 12, 15},    {4, 6, 7},        {2, 4, 7, 10, 12},   {5, 6, 8, 9},
        {4, 9, 15},     {4, 6, 14, 15},   {2, 11, 13},         {1, 4, 8},
        {3, 9, 14},     {5, 7, 13},       {1, 2, 6},           {3, 5, 7, 12},
        {4, 13, 14},    {1, 3, 7},        {2, 6, 8, 13, 15},   {2, 4, 9, 13},
        {2, 8, 10, 11}, {8, 9, 11},       {3, 6, 8},           {6, 9, 13},
        {5, 7, 8, 15},  {1, 5, 9},        {2, 5, 6, 13},       {6, 10, 14},
        {2, 5, 10},     {3, 4, 5, 13},    {3, 13, 15},         {7, 11, 15},
        {2, 7, 8},      {6, 8, 12, 15},   {3, 5, 8, 10},
    };
    return reps;
}

const std::vector<std::string>& code4918_symmetry_cycles() {
    static const std::vector<std::string> perms = {
        "(5,15)(9,12)(10,14)(11,13)",
        "(5,10)(9,13)(11,12)(14,15)",
        "(5,14)(9,11)(10,15)(12,13)",
    };
    return perms;
}

const std::vector<ReferenceRow>& reference_rows() {
    static const std::vector<ReferenceRow> rows = {
        {51, 13, 7, 8, "1^13 3^1 5^1", 8, 13},
        {694, 13, 8, 32, "1^8 3^5 5^2", 32, 13},
        {724, 13, 8, 32, "1^13 3^1 5^1", 96, 13},
        {771, 13, 8, 96, "1^12 3^3", 288, 13},
        {4918, 14, 6, 4, "0^15", 4, 14},
    };
    return rows;
}

const ReferenceRow& reference_row(int id) {
    for (const ReferenceRow& r : reference_rows())
        if (r.id == id) return r;
    throw PreconditionError("unknown reference code id: " + std::to_string(id));
}

namespace {

Code build_and_check_4918() {
    const int n = 15;
    std::vector<Word> kernel_basis;
    for (const auto& supp : code4918_kernel_basis_supports())
        kernel_basis.push_back(Word::from_support(n, std::span<const int>(supp.data(), supp.size())));
    Gf2Basis basis(n);
    for (const Word& w : kernel_basis)
        if (!basis.insert(w)) throw Error("code4918 build: kernel basis supports are not independent");
    std::vector<Word> kernel_words = basis.enumerate_span();
    if (kernel_words.size() != 64) throw Error("code4918 build: kernel span is not 2^6");

    std::vector<Word> words = kernel_words;
    for (const auto& supp : code4918_coset_rep_supports()) {
        Word rep = Word::from_support(n, std::span<const int>(supp.data(), supp.size()));
        for (const Word& k : kernel_words) words.push_back(rep + k);
    }
    Code code = Code::from_explicit(ExplicitCode::from_words(n, std::move(words)), "builtin:4918");

    // Every published fact is recomputed, not trusted.
    const ExplicitCode& ec = code.explicit_words();
    if (ec.size() != 2048) throw Error("code4918 build failed: cardinality != 2048");
    if (!is_perfect(code)) throw Error("code4918 build failed: not a perfect code");
    if (min_distance(ec) != 3) throw Error("code4918 build failed: min distance != 3");
    TripleSystem sts = sts_extract(code);
    TripleSystem expected{n, code4918_sts_triples()};
    expected.normalize();
    if (!(sts == expected)) throw Error("code4918 build failed: weight-3 words differ from the tabulated system");
    if (gf2_rank(n, ec.words()) != 14) throw Error("code4918 build failed: rank != 14");
    KernelInfo ker = kernel(code);
    if (ker.dim != 6) throw Error("code4918 build failed: kernel dimension != 6");
    return code;
}

} // namespace

Code build_code_4918() {
    static const Code code = build_and_check_4918();
    return code;
}

ExplicitCode load_code_from_stream(std::istream& in, const std::string& origin) {
    std::string line;
    int line_no = 0;
    auto next_payload_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::size_t b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            std::size_t e = line.find_last_not_of(" \t\r");
            out = line.substr(b, e - b + 1);
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_payload_line(header)) throw ParseError(origin + ": missing header line", line_no);
    int n = 0, k = 0;
    if (std::sscanf(header.c_str(), "n=%d k=%d", &n, &k) != 2)
        throw ParseError(origin + ": header must be 'n=<int> k=<int>'", line_no);
    if (n < 1 || n > Word::kMaxLength || k < 1)
        throw ParseError(origin + ": implausible n or k in header", line_no);

    std::vector<Word> words;
    words.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::string row;
        if (!next_payload_line(row)) throw ParseError(origin + ": expected " + std::to_string(k) + " codewords", line_no);
        if (static_cast<int>(row.size()) != n)
            throw ParseError(origin + ": codeword length != n", line_no);
        try {
            words.push_back(Word::from_bits(row));
        } catch (const ParseError& pe) {
            throw ParseError(origin + ": " + pe.what(), line_no);
        }
    }

    std::size_t before = words.size();
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (words.size() != before)
        std::cerr << "warning: " << origin << ": " << (before - words.size())
                  << " duplicate codeword(s) removed\n";
    if (!words.front().is_zero())
        throw ParseError(origin + ": code does not contain the all-zero word");
    return ExplicitCode::from_words(n, std::move(words));
}

ExplicitCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open code file: " + path);
    return load_code_from_stream(in, path);
}

std::string code_to_text(const ExplicitCode& code) {
    std::ostringstream out;
    out << "n=" << code.length() << " k=" << code.size() << "\n";
    for (const Word& w : code.words()) out << w.bits() << "\n";
    return out.str();
}

void save_code(const ExplicitCode& code, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write code file: " + path);
    out << code_to_text(code);
}

} // namespace perfcode
