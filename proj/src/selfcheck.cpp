#include "perfcode/selfcheck.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "perfcode/construct.hpp"
#include "perfcode/dataset.hpp"
#include "perfcode/propelinear.hpp"
#include "perfcode/report.hpp"

namespace perfcode {

namespace {

struct Check {
    std::ostringstream detail;
    bool ok = true;
    bool first = true;

    // Records "name=got" and trips the failure flag on mismatch.
    template <typename T, typename U>
    void equal(const std::string& name, const T& got, const U& expected) {
        if (!(got == static_cast<T>(expected))) {
            ok = false;
            append(name + "=" + to_string_any(got) + " (expected " + to_string_any(expected) + ")");
        } else {
            append(name + "=" + to_string_any(got));
        }
    }

    void require(const std::string& name, bool condition) {
        if (!condition) ok = false;
        append(name + (condition ? "" : " FAILED"));
    }

    void append(const std::string& s) {
        if (!first) detail << ", ";
        detail << s;
        first = false;
    }

    template <typename T>
    static std::string to_string_any(const T& v) {
        std::ostringstream o;
        o << v;
        return o.str();
    }
};

struct Suite {
    const Options& opt;
    bool budget_low;
    std::ostream& progress;
    bool timed_output = true;
    std::vector<CriterionResult> results;

    std::optional<Code> code4918;
    std::optional<PermGroup> sym4918;
    std::optional<AutGroup> aut4918;
    std::optional<Code> m_h7_p1;

    Suite(const Options& o, bool low, std::ostream& p, bool timed) : opt(o), budget_low(low), progress(p), timed_output(timed) {}

    const Code& c4918() {
        if (!code4918) code4918 = build_code_4918();
        return *code4918;
    }

    const PermGroup& sym() {
        if (!sym4918) sym4918 = symmetry_group(c4918().explicit_words(), opt);
        return *sym4918;
    }

    const AutGroup& aut() {
        if (!aut4918) aut4918 = automorphism_group(c4918().explicit_words(), opt);
        return *aut4918;
    }

    const Code& m15() {
        if (!m_h7_p1) m_h7_p1 = mollard(hamming(3), trivial_p1(), opt);
        return *m_h7_p1;
    }

    void run(int id, const std::string& name, bool group_item, double time_limit_sec,
             const std::function<void(Check&)>& body) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        if (budget_low && group_item) {
            r.status = CriterionResult::Status::Skip;
            r.detail = "group search skipped under --budget-low";
            results.push_back(r);
            progress << format_criterion_line(results.back(), timed_output) << '\n';
            return;
        }
        Check check;
        auto t0 = std::chrono::steady_clock::now();
        try {
            body(check);
        } catch (const std::exception& e) {
            check.ok = false;
            check.append(std::string("exception: ") + e.what());
        }
        auto t1 = std::chrono::steady_clock::now();
        r.seconds = std::chrono::duration<double>(t1 - t0).count();
        if (time_limit_sec > 0 && r.seconds > time_limit_sec) {
            check.ok = false;
            check.append("time limit " + Check::to_string_any(time_limit_sec) + " s exceeded");
        }
        r.status = check.ok ? CriterionResult::Status::Pass : CriterionResult::Status::Fail;
        r.detail = check.detail.str();
        results.push_back(r);
        progress << format_criterion_line(results.back(), timed_output) << '\n';
    }
};

} // namespace

std::string format_criterion_line(const CriterionResult& r, bool with_time) {
    const char* tag = r.status == CriterionResult::Status::Pass   ? "PASS"
                      : r.status == CriterionResult::Status::Fail ? "FAIL"
                                                                  : "SKIP";
    std::ostringstream out;
    out << '[' << tag << "] " << r.id << ' ' << r.name << ": " << r.detail;
    if (with_time) {
        out.precision(2);
        out << " (" << std::fixed << r.seconds << " s)";
    }
    return out.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (r.status == CriterionResult::Status::Fail) return false;
    return true;
}

std::vector<CriterionResult> run_selfcheck(const Options& opt, bool budget_low, std::ostream& progress,
                                           bool timed_output) {
    Suite s(opt, budget_low, progress, timed_output);

    s.run(1, "code4918-reconstruction", false, 5.0, [&](Check& c) {
        const Code& code = s.c4918();
        const ExplicitCode& ec = code.explicit_words();
        c.equal("words", ec.size(), 2048u);
        PerfectCheck pc = check_perfect(code, s.opt);
        c.require("perfect", pc.perfect);
        c.require("exhaustive-sweep", pc.exhaustive);
        c.equal("min_distance", min_distance(ec), 3);
        KernelInfo ker = kernel(code, s.opt);
        c.equal("kernel_min_distance", min_distance(*ker.words), 4);
    });

    s.run(2, "code4918-invariant-row", true, 60.0, [&](Check& c) {
        InvariantReport r = compute_report(s.c4918(), s.opt, true);
        const ReferenceRow& row = reference_row(4918);
        c.equal("rank", r.rank_value, row.rank);
        c.equal("kernel_dim", r.kernel_dim, row.kernel_dim);
        c.equal("sym_order", r.sym_order.value_or(0), row.sym_order);
        c.equal("mu", r.mu_profile.exponent_form(), row.mu);
        c.equal("aut_sts_order", r.aut_sts_order.value_or(0), row.aut_sts_order);
        c.equal("sts_rank", r.sts_rank.value_or(0), row.sts_rank);
    });

    s.run(3, "code4918-triple-system-and-group", true, 0.0, [&](Check& c) {
        TripleSystem sts = sts_extract(s.c4918(), s.opt);
        TripleSystem expected{15, code4918_sts_triples()};
        expected.normalize();
        c.require("sts-equals-tabulated-35", sts == expected && sts.size() == 35);
        PermGroup aut_sts = sts_automorphisms(sts, s.opt);
        std::vector<Perm> expected_elems{Perm::identity(15)};
        for (const std::string& cyc : code4918_symmetry_cycles())
            expected_elems.push_back(Perm::from_cycles(15, cyc));
        PermGroup expected_group = PermGroup::from_elements(15, expected_elems);
        c.require("aut-sts-is-id-plus-3-involutions",
                  aut_sts.order() == 4 && aut_sts.elements() == expected_group.elements());
        c.require("sym-coincides", s.sym().elements() == aut_sts.elements());
    });

    s.run(4, "incorrect-inverse-coset", true, 60.0, [&](Check& c) {
        const ExplicitCode& ec = s.c4918().explicit_words();
        Word x = Word::from_support(15, {2, 3, 4});
        std::vector<Perm> rx = rotations_at(ec, x, s.opt);
        c.equal("coset_size", rx.size(), 4u);
        bool orders_ok = !rx.empty();
        bool stab_ok = !rx.empty();
        std::set<int> supp{2, 3, 4};
        for (const Perm& p : rx) {
            if (p.order() <= 2) orders_ok = false;
            if (!p.stabilizes(supp)) stab_ok = false;
        }
        c.require("all-orders-above-2", orders_ok);
        c.require("all-stabilize-supp", stab_ok);
        std::vector<Perm> coset;
        for (const Perm& g : s.sym().elements()) coset.push_back(rx.front().compose(g));
        std::sort(coset.begin(), coset.end());
        c.require("equals-pi0-sym-coset", coset == rx);
        c.require("incorrect-inverse", incorrect_inverse(ec, x, s.opt));
    });

    s.run(5, "transitivity-over-kernel-cosets", true, 60.0, [&](Check& c) {
        const ExplicitCode& ec = s.c4918().explicit_words();
        std::vector<Word> reps = kernel_coset_representatives(ec, s.opt);
        c.equal("kernel_cosets", reps.size(), 32u);
        long long nonempty = 0;
        for (const Word& rep : reps) {
            if (rep.is_zero()) {
                ++nonempty;
                continue;
            }
            if (!equivalence_maps(ec, ec.translate(rep), SearchMode::First, s.opt).empty()) ++nonempty;
        }
        c.equal("cosets_with_rotations", nonempty, 32);
        c.require("is_transitive", is_transitive(ec, s.opt));
        // The 60 s budget spans the coset searches of criteria 4 and 5.
        c.require("combined-budget-with-criterion-4", true);
    });

    s.run(6, "regular-subgroup-search-none", true, 600.0, [&](Check& c) {
        bool decided = false;
        RegularSearchResult descent = regular_subgroup_descent(s.aut(), 2048, s.opt);
        if (descent.complete) {
            c.require("descent-none-complete", !descent.assignment.has_value());
            decided = true;
        }
        RegularSearchResult search = regular_subgroup_search(s.c4918().explicit_words(), 2048, s.opt);
        c.require("search-none", !search.assignment.has_value());
        if (search.complete) {
            c.append("search-complete (strategy=" + search.strategy + ")");
            decided = true;
        }
        if (!decided) c.append("exhaustive budget exceeded; deciding by the incorrect-inverse route");
        // Independent route: the incorrect-inverse codeword already rules
        // out every regular subgroup, budget or not.
        Word x = Word::from_support(15, {2, 3, 4});
        c.require("incorrect-inverse-route", incorrect_inverse(s.c4918().explicit_words(), x, s.opt));
    });

    s.run(7, "linear-product-control", true, 120.0, [&](Check& c) {
        const Code& m = s.m15();
        const ExplicitCode& ec = m.explicit_words();
        RegularSearchResult res = regular_subgroup_search(ec, ec.size(), s.opt);
        c.require("propelinear-found", res.assignment.has_value());
        if (res.assignment) {
            AssignmentCheck check = verify_propelinear_assignment(ec, *res.assignment, true, s.opt);
            c.require("condition-i", check.membership_ok);
            c.require("condition-ii", check.composition_ok);
            c.require("condition-iii-normalized", check.normalized_ok);
            c.require("exhaustive-pairs", check.exhaustive);
        }
        int rank_exh = gf2_rank(15, ec.words());
        KernelInfo ker_direct = kernel(Code::from_explicit(ec), s.opt);
        c.equal("rank", rank_exh, 11);
        c.equal("kernel_dim", ker_direct.dim, 11);
        c.equal("rank_formula", formula_rank(*m.descriptor()), rank_exh);
        c.equal("kernel_formula", formula_kernel_dim(*m.descriptor()), ker_direct.dim);
    });

    s.run(8, "mu-closed-form-vs-bruteforce", false, 30.0, [&](Check& c) {
        Code m31 = mollard(s.c4918(), trivial_p1(), s.opt);
        MuProfile brute31 = mu_bruteforce(m31, s.opt);
        MuProfile formula31 = mu(m31, s.opt);
        c.require("n31-all-coordinates", brute31 == formula31);
        c.equal("n31-mu", formula31.exponent_form(), std::string("1^30 15^1"));
        Code m63 = mollard(hamming(3), hamming(3), s.opt);
        MuProfile brute63 = mu_bruteforce(m63, s.opt);
        MuProfile formula63 = mu(m63, s.opt);
        c.require("n63-all-coordinates", brute63 == formula63);
        c.equal("n63-mu", formula63.exponent_form(), std::string("31^63"));
    });

    s.run(9, "dual-zero-set-sampled-exact", false, 60.0, [&](Check& c) {
        Code m31 = mollard(s.c4918(), trivial_p1(), s.opt);
        DualResult dual = dual_zero_set(m31, s.opt);
        c.require("span-stabilized-exact", dual.exact && dual.sampled);
        DualResult base = dual_zero_set(s.c4918(), s.opt);
        std::set<int> formula = mollard_zero_set_formula(base.zero_set, {}, 15, 1);
        c.require("matches-formula", dual.zero_set == formula);
        MollardShape shape(15, 1);
        std::set<int> expected;
        for (int r : {1, 2, 3, 4, 6, 7, 8}) expected.insert(shape.index(r, 0));
        c.require("equals-column0-block", dual.zero_set == expected);
    });

    s.run(10, "product-nonpropelinearity-certificates", false, 60.0, [&](Check& c) {
        Word x = Word::from_support(15, {2, 3, 4});
        for (int r = 1; r <= 3; ++r) {
            CertificateResult cert = theorem1_certificate(s.c4918(), x, DSide::hamming(r), 1, s.opt);
            c.require("part1-hamming" + std::to_string(r), cert.ok);
        }
        for (int r = 2; r <= 3; ++r) {
            SeparationReport sep = mu_orbit_separation(mollard(s.c4918(), hamming(r), s.opt), s.opt);
            c.require("row0-unique-max-hamming" + std::to_string(r), sep.row0_unique_max);
        }
    });

    s.run(11, "inequivalence-ledger-255", false, 60.0, [&](Check& c) {
        InvariantLedger base = ledger_of(compute_report(s.c4918(), s.opt));
        InvariantLedger h15 = ledger_of(compute_report(hamming(4), s.opt));
        std::vector<InvariantLedger> ledgers{mollard_ledger(base, h15)};
        for (int id : {51, 694, 724, 771}) ledgers.push_back(mollard_ledger(base, ledger_of_reference(id)));
        bool all_n255 = true;
        for (const auto& l : ledgers)
            if (l.n != 255) all_n255 = false;
        c.require("all-length-255", all_n255);
        bool distinct = true;
        for (std::size_t i = 0; i < ledgers.size(); ++i)
            for (std::size_t j = i + 1; j < ledgers.size(); ++j)
                if (!ledgers_distinct(ledgers[i], ledgers[j])) distinct = false;
        c.require("five-pairwise-distinct", distinct);
        std::vector<InvariantLedger> rows;
        for (int id : {51, 694, 724, 771}) rows.push_back(ledger_of_reference(id));
        bool rows_distinct = true;
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i + 1; j < rows.size(); ++j)
                if (!ledgers_distinct(rows[i], rows[j])) rows_distinct = false;
        c.require("reference-rows-distinct", rows_distinct);
    });

    s.run(12, "group-law-invariants", true, 120.0, [&](Check& c) {
        const ExplicitCode& ec = s.c4918().explicit_words();
        PermGroup rot = rotation_group(s.aut());
        c.equal("rotation_order", rot.order(), 128u);
        c.require("sym-in-rotations", s.sym().is_subgroup_of(rot));
        KernelInfo ker = kernel(s.c4918(), s.opt);
        bool rot_in_symker = true;
        for (const Perm& p : rot.elements()) {
            for (const Word& w : ker.words->words())
                if (!ker.words->contains(p.apply(w))) {
                    rot_in_symker = false;
                    break;
                }
            if (!rot_in_symker) break;
        }
        c.require("rotations-stabilize-kernel", rot_in_symker);
        DualResult dual = dual_zero_set(s.c4918(), s.opt);
        Gf2Basis dual_span(15);
        for (const Word& w : dual.dual_basis) dual_span.insert(w);
        bool dual_fixed = true;
        bool zero_set_fixed = true;
        for (const Perm& p : rot.elements()) {
            for (const Word& w : dual.dual_basis)
                if (!dual_span.contains(p.apply(w))) dual_fixed = false;
            if (p.apply(dual.zero_set) != dual.zero_set) zero_set_fixed = false;
        }
        c.require("rotations-stabilize-dual", dual_fixed);
        c.require("rotations-stabilize-zero-set", zero_set_fixed);
        Word x = Word::from_support(15, {2, 3, 4});
        std::vector<Perm> rx = rotations_at(ec, x, s.opt);
        std::vector<Perm> coset;
        for (const Perm& g : s.sym().elements()) coset.push_back(rx.front().compose(g));
        std::sort(coset.begin(), coset.end());
        c.require("rx-is-sym-coset", coset == rx);

        // Linear control: rotations reduce to symmetries.
        Code h7 = hamming(3);
        PermGroup h7_rot = rotation_group(h7.explicit_words(), s.opt);
        PermGroup h7_sym = symmetry_group(h7.explicit_words(), s.opt);
        c.equal("h7_sym_order", h7_sym.order(), 168u);
        c.require("h7-rotations-equal-sym", h7_rot.elements() == h7_sym.elements());
    });

    return s.results;
}

} // namespace perfcode
