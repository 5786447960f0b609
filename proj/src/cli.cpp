#include "perfcode/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "perfcode/construct.hpp"
#include "perfcode/dataset.hpp"
#include "perfcode/propelinear.hpp"
#include "perfcode/report.hpp"
#include "perfcode/selfcheck.hpp"

namespace perfcode {

namespace {

std::string oracle_manifest(const Code& code) {
    nlohmann::ordered_json j;
    j["type"] = "oracle";
    j["descriptor"] = code.label();
    j["n"] = code.length();
    j["cardinality"] = code.cardinality_decimal();
    j["cardinality_log2"] = code.cardinality_log2();
    return j.dump(2);
}

int write_output(const std::string& text, const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (out_path.empty()) {
        out << text;
        return exit_code::ok;
    }
    std::ofstream f(out_path);
    if (!f) {
        err << "error: cannot write " << out_path << "\n";
        return exit_code::usage;
    }
    f << text;
    return exit_code::ok;
}

} // namespace

int cmd_construct(const std::string& descriptor, const std::string& out_path, const CliOptions& cli,
                  std::ostream& out, std::ostream& err) {
    Code code;
    try {
        code = parse_descriptor(descriptor, cli.base);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    std::string text = code.is_explicit() ? code_to_text(code.explicit_words()) : oracle_manifest(code) + "\n";
    return write_output(text, out_path, out, err);
}

int cmd_invariants(const std::string& descriptor, const CliOptions& cli, bool with_groups,
                   std::ostream& out, std::ostream& err) {
    Code code;
    try {
        code = parse_descriptor(descriptor, cli.base);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    InvariantReport report = compute_report(code, cli.base, with_groups && code.is_explicit());
    out << (cli.json ? report.to_json_text() + "\n" : report.to_text());
    bool partial = report.rank_prov == Prov::LowerBound || report.zero_set_prov == Prov::LowerBound;
    if (partial) {
        err << "warning: sampled span did not stabilize; rank/zero-set are lower bounds\n";
        return exit_code::budget;
    }
    return exit_code::ok;
}

namespace {

int report_propelinear(const PropelinearAssignment& pa, const CliOptions& cli, std::ostream& out,
                       const std::string& how) {
    out << "verdict: propelinear\n";
    out << "witness: " << how << ", " << pa.distinct_permutations() << " distinct permutation(s)\n";
    if (cli.json) {
        nlohmann::ordered_json j;
        j["verdict"] = "propelinear";
        j["witness"] = how;
        j["distinct_permutations"] = pa.distinct_permutations();
        nlohmann::ordered_json assignment = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < pa.code->size(); ++i)
            assignment.push_back({{"word", pa.code->word(i).bits()}, {"perm", pa.pi[i].cycles()}});
        j["assignment"] = std::move(assignment);
        out << j.dump(2) << "\n";
    }
    return exit_code::ok;
}

int report_nonpropelinear(const Certificate& cert, const CliOptions& cli, std::ostream& out) {
    out << "verdict: nonpropelinear\n";
    out << "kind: " << cert.kind << "\n";
    if (!cert.witness_bits.empty()) out << "witness: " << cert.witness_bits << "\n";
    if (cli.json) out << cert.to_json_text() << "\n";
    return exit_code::nonpropelinear;
}

int report_undecided(const std::string& reason, std::ostream& out) {
    out << "verdict: undecided (budget)\n";
    out << "reason: " << reason << "\n";
    return exit_code::undecided;
}

// Sampled sanity check that translations act on a structurally linear
// oracle code.
bool translations_act(const Code& code, const Options& opt) {
    std::uint64_t rng = opt.seed;
    for (int i = 0; i < 64; ++i) {
        Word z = code.sample(rng);
        Word w = code.sample(rng);
        if (!code.contains(z + w)) return false;
    }
    return true;
}

int decide_mollard(const Code& code, const CliOptions& cli, std::ostream& out, std::ostream& err) {
    const Options& opt = cli.base;
    // Structurally linear product: translations are a regular subgroup.
    if (static_cast<std::uint64_t>(formula_rank(*code.descriptor())) == code.cardinality_log2()) {
        if (!translations_act(code, opt)) {
            err << "error: linearity detection contradicted by sampling\n";
            return exit_code::undecided;
        }
        out << "verdict: propelinear\n";
        out << "witness: translations (code is linear), 1 distinct permutation(s)\n";
        return exit_code::ok;
    }

    Code left = code.left_child(opt);
    Code right = code.right_child(opt);

    // Base code with an incorrect-inverse codeword on the left.
    if (left.is_explicit() && !left.is_mollard()) {
        auto witness = find_incorrect_inverse_witness(left.explicit_words(), opt);
        if (!witness) return report_undecided("no incorrect-inverse witness found in " + left.label(), out);
        int part = right.is_hamming_kind() ? 1 : 2;
        DSide d = right.is_hamming_kind() ? DSide::hamming(right.descriptor()->hamming_r)
                                          : DSide::from_code(right, opt);
        CertificateResult cert = theorem1_certificate(left, *witness, d, part, opt);
        if (cert.ok) return report_nonpropelinear(cert.certificate, cli, out);
        return report_undecided("condition " + cert.failed_condition + " does not hold", out);
    }

    // Double product M(M(C,D),H).
    if (left.is_mollard() && right.is_hamming_kind()) {
        Code base = left.left_child(opt);
        Code d_code = left.right_child(opt);
        if (base.is_explicit() && !base.is_mollard()) {
            auto witness = find_incorrect_inverse_witness(base.explicit_words(), opt);
            if (!witness) return report_undecided("no incorrect-inverse witness found in " + base.label(), out);
            CertificateResult cert =
                theorem1_certificate(base, *witness, DSide::from_code(d_code, opt), 3, opt);
            if (cert.ok) return report_nonpropelinear(cert.certificate, cli, out);
            return report_undecided("condition " + cert.failed_condition + " does not hold", out);
        }
    }
    return report_undecided("no decision route for " + code.label(), out);
}

} // namespace

int cmd_propelinear(const std::string& descriptor, const CliOptions& cli, std::ostream& out,
                    std::ostream& err) {
    Code code;
    try {
        code = parse_descriptor(descriptor, cli.base);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    const Options& opt = cli.base;

    if (code.is_explicit() && code.explicit_words().size() <= (std::size_t{1} << 11)) {
        const ExplicitCode& ec = code.explicit_words();
        RegularSearchResult res = regular_subgroup_search(ec, ec.size(), opt);
        if (res.assignment) return report_propelinear(*res.assignment, cli, out, "regular subgroup (" + res.strategy + ")");
        if (res.complete) {
            Certificate cert;
            cert.kind = "exhaustive-regular-search";
            cert.target_descriptor = code.label();
            auto witness = find_incorrect_inverse_witness(ec, opt);
            if (witness) {
                cert.witness_bits = witness->bits();
                Premise p;
                p.name = "incorrect-inverse";
                p.operands = "code=" + code.label() + " x=" + witness->bits();
                p.recheck = "perfcode propelinear " + code.label();
                p.holds = true;
                cert.premises.push_back(p);
            }
            Premise p;
            p.name = "exhaustive-regular-search";
            p.operands = "strategy=" + res.strategy + " target_order=" + std::to_string(ec.size());
            p.recheck = "perfcode propelinear " + code.label();
            p.holds = true;
            cert.premises.push_back(p);
            return report_nonpropelinear(cert, cli, out);
        }
        return report_undecided("search budget exhausted", out);
    }

    if (code.is_mollard()) return decide_mollard(code, cli, out, err);

    if (code.is_hamming_kind()) {
        out << "verdict: propelinear\n";
        out << "witness: translations (code is linear), 1 distinct permutation(s)\n";
        return exit_code::ok;
    }
    return report_undecided("explicit code exceeds the direct-search cap", out);
}

int cmd_verify(const CliOptions& cli, bool budget_low, std::ostream& out, std::ostream& err) {
    (void)err;
    // Times stay off stdout so identical runs are byte-identical.
    std::vector<CriterionResult> results = run_selfcheck(cli.base, budget_low, out, false);
    return all_passed(results) ? exit_code::ok : 1;
}

} // namespace perfcode
