#include "perfcode/report.hpp"

#include <sstream>

#include <json.hpp>

#include "perfcode/dataset.hpp"
#include "perfcode/groups.hpp"

namespace perfcode {

const char* prov_name(Prov p) {
    switch (p) {
        case Prov::Exact: return "exact";
        case Prov::Formula: return "formula";
        case Prov::SampledExact: return "sampled-exact";
        case Prov::LowerBound: return "lower-bound";
        case Prov::Skipped: return "skipped";
    }
    return "?";
}

namespace {

std::string set_text(const std::set<int>& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int v : s) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    out << '}';
    return out.str();
}

} // namespace

std::string InvariantReport::to_text() const {
    std::ostringstream out;
    out << "code: " << label << '\n';
    out << "n: " << n << '\n';
    out << "cardinality: " << cardinality << '\n';
    out << "rank: " << rank_value << " [" << prov_name(rank_prov) << "]\n";
    out << "kernel_dim: " << kernel_dim << " [" << prov_name(kernel_prov) << "]\n";
    out << "zero_set: " << set_text(zero_set) << " [" << prov_name(zero_set_prov) << "]\n";
    out << "mu: " << mu_profile.exponent_form() << " [" << prov_name(mu_prov) << "]\n";
    out << "sts_triples: " << sts_triples << '\n';
    if (min_dist) out << "min_distance: " << *min_dist << '\n';
    if (sym_order) out << "sym_order: " << *sym_order << '\n';
    if (aut_sts_order) out << "aut_sts_order: " << *aut_sts_order << '\n';
    if (sts_rank) out << "sts_rank: " << *sts_rank << '\n';
    return out.str();
}

std::string InvariantReport::to_json_text() const {
    nlohmann::ordered_json j;
    j["code"] = label;
    j["n"] = n;
    j["cardinality"] = cardinality;
    j["rank"] = {{"value", rank_value}, {"method", prov_name(rank_prov)}};
    j["kernel_dim"] = {{"value", kernel_dim}, {"method", prov_name(kernel_prov)}};
    j["zero_set"] = {{"value", std::vector<int>(zero_set.begin(), zero_set.end())},
                     {"method", prov_name(zero_set_prov)}};
    j["mu"] = {{"value", mu_profile.exponent_form()}, {"method", prov_name(mu_prov)}};
    j["sts_triples"] = sts_triples;
    if (min_dist) j["min_distance"] = *min_dist;
    if (sym_order) j["sym_order"] = *sym_order;
    if (aut_sts_order) j["aut_sts_order"] = *aut_sts_order;
    if (sts_rank) j["sts_rank"] = *sts_rank;
    return j.dump(2);
}

InvariantReport compute_report(const Code& code, const Options& opt, bool with_groups) {
    InvariantReport r;
    r.label = code.label();
    r.n = code.length();
    r.cardinality = code.cardinality_decimal();

    RankResult rk = rank(code, opt);
    r.rank_value = rk.value;
    r.rank_prov = rk.sampled ? (rk.exact ? Prov::SampledExact : Prov::LowerBound) : Prov::Exact;

    KernelInfo ker = kernel(code, opt);
    r.kernel_dim = ker.dim;
    r.kernel_prov = code.is_explicit() ? Prov::Exact : Prov::Formula;

    DualResult dual = dual_zero_set(code, opt);
    r.zero_set = dual.zero_set;
    r.zero_set_prov = dual.sampled ? (dual.exact ? Prov::SampledExact : Prov::LowerBound) : Prov::Exact;

    r.mu_profile = mu(code, opt);
    r.mu_prov = code.is_mollard() ? Prov::Formula : Prov::Exact;

    TripleSystem sts = sts_extract(code, opt);
    r.sts_triples = static_cast<long long>(sts.size());

    if (code.is_explicit()) {
        if (code.explicit_words().size() >= 2) r.min_dist = min_distance(code.explicit_words());
        if (with_groups) {
            r.sts_rank = gf2_rank(r.n, sts.characteristic_words());
            if (sts.is_steiner()) r.aut_sts_order = sts_automorphisms(sts, opt).order();
            r.sym_order = symmetry_group(code.explicit_words(), opt).order();
        }
    }
    return r;
}

bool mu_inequivalence(const InvariantReport& a, const InvariantReport& b) {
    if (a.rank_value != b.rank_value) return true;
    if (a.kernel_dim != b.kernel_dim) return true;
    return !a.mu_profile.same_multiset(b.mu_profile);
}

InvariantLedger ledger_of(const InvariantReport& r) {
    return {r.label, r.n, r.rank_value, r.kernel_dim, r.mu_profile};
}

InvariantLedger ledger_of_reference(int id) {
    const ReferenceRow& row = reference_row(id);
    MuProfile mu_profile = MuProfile::from_exponent_form(row.mu);
    if (mu_profile.n() != 15) throw Error("reference row mu profile is not length 15");
    return {"ref:" + std::to_string(id), 15, row.rank, row.kernel_dim, std::move(mu_profile)};
}

InvariantLedger mollard_ledger(const InvariantLedger& c, const InvariantLedger& d) {
    InvariantLedger out;
    out.label = "mollard(" + c.label + "," + d.label + ")";
    out.n = c.n * d.n + c.n + d.n;
    auto [rk, ker] = mollard_rank_kernel_formula(c.rank_value, c.kernel_dim, d.rank_value, d.kernel_dim, c.n, d.n);
    out.rank_value = rk;
    out.kernel_dim = ker;
    out.mu_profile = mollard_mu_formula(c.mu_profile, d.mu_profile, c.n, d.n);
    return out;
}

bool ledgers_distinct(const InvariantLedger& a, const InvariantLedger& b) {
    return a.rank_value != b.rank_value || a.kernel_dim != b.kernel_dim ||
           !a.mu_profile.same_multiset(b.mu_profile);
}

} // namespace perfcode
