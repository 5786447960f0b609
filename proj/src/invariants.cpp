#include "perfcode/invariants.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "perfcode/error.hpp"

namespace perfcode {

void TripleSystem::normalize() {
    for (auto& t : triples) std::sort(t.begin(), t.end());
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
}

bool TripleSystem::is_steiner() const {
    if (static_cast<long long>(triples.size()) * 6 != static_cast<long long>(n) * (n - 1)) return false;
    std::vector<std::uint8_t> pair_seen(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    for (const auto& t : triples) {
        const int idx[3][2] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
        for (auto& p : idx) {
            if (p[0] == p[1] || p[0] < 1 || p[1] > n) return false;
            std::size_t key = static_cast<std::size_t>(p[0]) * (n + 1) + p[1];
            if (pair_seen[key]) return false;
            pair_seen[key] = 1;
        }
    }
    return true;  // all C(n,2) pairs covered once by the counting identity
}

std::vector<int> TripleSystem::point_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& t : triples)
        for (int p : t) ++deg[static_cast<std::size_t>(p) - 1];
    return deg;
}

Word TripleSystem::characteristic_word(std::size_t idx) const {
    const auto& t = triples[idx];
    return Word::from_support(n, {t[0], t[1], t[2]});
}

std::vector<Word> TripleSystem::characteristic_words() const {
    std::vector<Word> out;
    out.reserve(triples.size());
    for (std::size_t i = 0; i < triples.size(); ++i) out.push_back(characteristic_word(i));
    return out;
}

std::string TripleSystem::to_text() const {
    std::ostringstream out;
    for (const auto& t : triples) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    return out.str();
}

TripleSystem TripleSystem::from_text(int n, const std::string& text) {
    TripleSystem ts;
    ts.n = n;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        std::array<int, 3> t{};
        if (!(row >> t[0] >> t[1] >> t[2])) throw ParseError("expected three points per line", line_no);
        for (int p : t)
            if (p < 1 || p > n) throw ParseError("point outside 1..n", line_no);
        ts.triples.push_back(t);
    }
    ts.normalize();
    return ts;
}

TripleSystem sts_extract(const Code& code, const Options& opt) {
    const int n = code.length();
    TripleSystem ts;
    ts.n = n;
    if (code.is_explicit()) {
        for (const Word& w : code.explicit_words().words())
            if (w.weight() == 3) {
                auto s = w.support();
                ts.triples.push_back({s[0], s[1], s[2]});
            }
        ts.normalize();
        return ts;
    }
    std::vector<std::vector<std::array<int, 3>>> found(static_cast<std::size_t>(opt.threads < 1 ? 1 : opt.threads));
    parallel_for(n, opt.threads, [&](long long b, long long e, int chunk) {
        auto& local = found[static_cast<std::size_t>(chunk)];
        Word w(n);
        for (long long a = b + 1; a <= e; ++a)
            for (int bb = static_cast<int>(a) + 1; bb <= n; ++bb)
                for (int cc = bb + 1; cc <= n; ++cc) {
                    w.set(static_cast<int>(a));
                    w.set(bb);
                    w.set(cc);
                    if (code.contains(w)) local.push_back({static_cast<int>(a), bb, cc});
                    w.set(static_cast<int>(a), false);
                    w.set(bb, false);
                    w.set(cc, false);
                }
    });
    for (const auto& local : found) ts.triples.insert(ts.triples.end(), local.begin(), local.end());
    ts.normalize();
    return ts;
}

std::map<long long, long long> MuProfile::multiset() const {
    std::map<long long, long long> m;
    for (long long v : counts) ++m[v];
    return m;
}

std::string MuProfile::exponent_form() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [base, count] : multiset()) {
        if (!first) out << ' ';
        out << base << '^' << count;
        first = false;
    }
    return out.str();
}

long long MuProfile::total() const {
    long long s = 0;
    for (long long v : counts) s += v;
    return s;
}

MuProfile MuProfile::constant(int n, long long v) {
    MuProfile p;
    p.counts.assign(static_cast<std::size_t>(n), v);
    return p;
}

MuProfile MuProfile::from_exponent_form(const std::string& text) {
    std::map<long long, long long> m;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::size_t caret = tok.find('^');
        if (caret == std::string::npos) throw ParseError("expected base^count token: " + tok);
        m[std::stoll(tok.substr(0, caret))] += std::stoll(tok.substr(caret + 1));
    }
    MuProfile p;
    for (const auto& [base, count] : m)
        for (long long i = 0; i < count; ++i) p.counts.push_back(base);
    return p;
}

namespace {

// Kernel through the descriptor tree. The mollard rule is the
// componentwise criterion: x in Ker(M(C,D)) iff p1(x) in Ker(C) and
// p2(x) in Ker(D); it is validated against the direct test at
// enumerable scale in the test suite.
KernelInfo kernel_of_desc(const Descriptor& d, const Options& opt);

KernelInfo kernel_of_explicit(const ExplicitCode& ec) {
    const int n = ec.length();
    Gf2Basis basis(n);
    for (const Word& w : ec.words()) {
        if (w.is_zero() || basis.contains(w)) continue;  // span of found kernel words is in the kernel
        bool ok = true;
        for (const Word& c : ec.words())
            if (!ec.contains(w + c)) {
                ok = false;
                break;
            }
        if (ok) basis.insert(w);
    }
    KernelInfo info;
    info.dim = basis.rank();
    info.basis = basis.rows();
    std::vector<Word> words = basis.enumerate_span();
    auto ker_code = std::make_shared<const ExplicitCode>(ExplicitCode::from_words(n, std::move(words)));
    info.words = ker_code;
    info.member = [ker_code](const Word& w) { return ker_code->contains(w); };
    return info;
}

KernelInfo kernel_of_desc(const Descriptor& d, const Options& opt) {
    switch (d.kind) {
        case Descriptor::Kind::Explicit: return kernel_of_explicit(*d.leaf);
        case Descriptor::Kind::Hamming: {
            // Linear code: the kernel is the code itself.
            KernelInfo info;
            info.dim = d.length() - d.hamming_r;
            info.member = [](const Word& w) { return hamming_syndrome(w) == 0; };
            if (d.hamming_r <= 4) {
                auto ec = std::make_shared<const ExplicitCode>(Code::hamming(d.hamming_r).explicit_words());
                info.words = ec;
                Gf2Basis b(d.length());
                for (const Word& w : ec->words()) b.insert(w);
                info.basis = b.rows();
            }
            return info;
        }
        case Descriptor::Kind::Mollard: {
            auto left = std::make_shared<KernelInfo>(kernel_of_desc(*d.left, opt));
            auto right = std::make_shared<KernelInfo>(kernel_of_desc(*d.right, opt));
            MollardShape shape(d.left->length(), d.right->length());
            KernelInfo info;
            info.dim = left->dim + right->dim + shape.t * shape.m;
            info.member = [left, right, shape](const Word& w) {
                return left->member(p1(w, shape)) && right->member(p2(w, shape));
            };
            return info;
        }
    }
    throw Error("corrupt descriptor");
}

} // namespace

KernelInfo kernel(const Code& code, const Options& opt) {
    // Materialized non-hamming codes get the direct x + C = C test; the
    // descriptor recursion covers oracle codes.
    if (code.is_explicit() && !(code.descriptor() && code.descriptor()->kind == Descriptor::Kind::Hamming))
        return kernel_of_explicit(code.explicit_words());
    return kernel_of_desc(*code.descriptor(), opt);
}

KernelInfo kernel_by_descriptor(const Code& code, const Options& opt) {
    return kernel_of_desc(*code.descriptor(), opt);
}

int formula_rank(const Descriptor& d) {
    switch (d.kind) {
        case Descriptor::Kind::Explicit: return gf2_rank(d.leaf->length(), d.leaf->words());
        case Descriptor::Kind::Hamming: return d.length() - d.hamming_r;
        case Descriptor::Kind::Mollard:
            return formula_rank(*d.left) + formula_rank(*d.right) + d.left->length() * d.right->length();
    }
    throw Error("corrupt descriptor");
}

int formula_kernel_dim(const Descriptor& d) {
    switch (d.kind) {
        case Descriptor::Kind::Explicit: return kernel_of_explicit(*d.leaf).dim;
        case Descriptor::Kind::Hamming: return d.length() - d.hamming_r;
        case Descriptor::Kind::Mollard:
            return formula_kernel_dim(*d.left) + formula_kernel_dim(*d.right) +
                   d.left->length() * d.right->length();
    }
    throw Error("corrupt descriptor");
}

namespace {

struct SampledSpan {
    Gf2Basis basis;
    bool stable = false;
    std::uint64_t samples_used = 0;
};

// Draws random codewords through the descriptor until the span
// dimension has been stable for 64 consecutive samples (or the budget
// runs out).
SampledSpan sample_span(const Code& code, const Options& opt) {
    SampledSpan out{Gf2Basis(code.length())};
    std::uint64_t rng = opt.seed;
    int stable = 0;
    std::uint64_t budget = std::max<std::uint64_t>(opt.sample_budget, 128);
    for (std::uint64_t i = 0; i < budget && stable < 64; ++i) {
        Word w = code.sample(rng);
        ++out.samples_used;
        if (out.basis.insert(w))
            stable = 0;
        else
            ++stable;
    }
    out.stable = stable >= 64;
    return out;
}

} // namespace

RankResult rank(const Code& code, const Options& opt) {
    RankResult r;
    if (code.is_explicit()) {
        r.value = gf2_rank(code.length(), code.explicit_words().words());
        r.exact = true;
        return r;
    }
    if (code.is_hamming_kind()) {
        r.value = code.length() - code.descriptor()->hamming_r;
        r.exact = true;
        return r;
    }
    SampledSpan span = sample_span(code, opt);
    r.value = span.basis.rank();
    r.samples_used = span.samples_used;
    r.sampled = true;
    // The sampled span never overshoots; stability plus agreement with
    // the iterative arithmetic certifies exactness.
    r.exact = span.stable && r.value == formula_rank(*code.descriptor());
    return r;
}

DualResult dual_zero_set(const Code& code, const Options& opt) {
    DualResult out;
    const int n = code.length();
    Gf2Basis span(n);
    if (code.is_explicit()) {
        for (const Word& w : code.explicit_words().words()) span.insert(w);
        out.exact = true;
    } else if (code.is_hamming_kind()) {
        // Dual basis is the parity-check matrix; every coordinate is hit.
        int r = code.descriptor()->hamming_r;
        for (int row = 0; row < r; ++row) {
            Word w(n);
            for (int i = 1; i <= n; ++i)
                if ((i >> row) & 1) w.set(i);
            out.dual_basis.push_back(w);
        }
        out.span_rank = n - r;
        out.exact = true;
        return out;  // zero set empty
    } else {
        SampledSpan sampled = sample_span(code, opt);
        span = sampled.basis;
        out.sampled = true;
        out.exact = sampled.stable && span.rank() == formula_rank(*code.descriptor());
    }
    out.span_rank = span.rank();
    out.dual_basis = span.nullspace();
    for (int i = 1; i <= n; ++i) {
        bool all_zero = true;
        for (const Word& d : out.dual_basis)
            if (d.get(i)) {
                all_zero = false;
                break;
            }
        if (all_zero) out.zero_set.insert(i);
    }
    return out;
}

MuProfile mollard_mu_formula(const MuProfile& mu_c, const MuProfile& mu_d, int t, int m) {
    if (mu_c.n() != t || mu_d.n() != m) throw PreconditionError("mu formula: profile lengths must be t and m");
    MollardShape shape(t, m);
    MuProfile out = MuProfile::constant(shape.length(), 0);
    for (int r = 1; r <= t; ++r)
        out.counts[static_cast<std::size_t>(shape.index(r, 0)) - 1] = mu_c.at(r) * (m + 1) + m;
    for (int s = 1; s <= m; ++s)
        out.counts[static_cast<std::size_t>(shape.index(0, s)) - 1] = mu_d.at(s) * (t + 1) + t;
    for (int r = 1; r <= t; ++r)
        for (int s = 1; s <= m; ++s)
            out.counts[static_cast<std::size_t>(shape.index(r, s)) - 1] =
                1 + 2 * (mu_d.at(s) + mu_c.at(r) + mu_c.at(r) * mu_d.at(s));
    return out;
}

std::pair<int, int> mollard_rank_kernel_formula(int rank_c, int ker_c, int rank_d, int ker_d, int t, int m) {
    return {rank_c + rank_d + t * m, ker_c + ker_d + t * m};
}

std::set<int> mollard_zero_set_formula(const std::set<int>& zero_c, const std::set<int>& zero_d, int t, int m) {
    MollardShape shape(t, m);
    std::set<int> out;
    for (int r : zero_c) out.insert(shape.index(r, 0));
    for (int s : zero_d) out.insert(shape.index(0, s));
    for (int r : zero_c)
        for (int s : zero_d) out.insert(shape.index(r, s));
    return out;
}

MuProfile mu(const Code& code, const Options& opt) {
    if (code.is_mollard()) {
        MollardShape shape = code.shape();
        MuProfile left = mu(code.left_child(opt), opt);
        MuProfile right = mu(code.right_child(opt), opt);
        return mollard_mu_formula(left, right, shape.t, shape.m);
    }
    if (code.is_hamming_kind())
        return MuProfile::constant(code.length(), (code.length() - 1) / 2);
    KernelInfo ker = kernel(code, opt);
    MuProfile out = MuProfile::constant(code.length(), 0);
    for (const Word& w : ker.words->words())
        if (w.weight() == 3)
            for (int i : w.support()) ++out.counts[static_cast<std::size_t>(i) - 1];
    return out;
}

MuProfile mu_bruteforce(const Code& code, const Options& opt) {
    const int n = code.length();
    KernelInfo ker = kernel(code, opt);
    int workers = opt.threads < 1 ? 1 : opt.threads;
    std::vector<std::vector<long long>> partial(static_cast<std::size_t>(workers),
                                                std::vector<long long>(static_cast<std::size_t>(n), 0));
    parallel_for(n, opt.threads, [&](long long b, long long e, int chunk) {
        auto& local = partial[static_cast<std::size_t>(chunk)];
        Word w(n);
        for (long long a = b + 1; a <= e; ++a)
            for (int bb = static_cast<int>(a) + 1; bb <= n; ++bb)
                for (int cc = bb + 1; cc <= n; ++cc) {
                    w.set(static_cast<int>(a));
                    w.set(bb);
                    w.set(cc);
                    if (ker.member(w)) {
                        ++local[static_cast<std::size_t>(a) - 1];
                        ++local[static_cast<std::size_t>(bb) - 1];
                        ++local[static_cast<std::size_t>(cc) - 1];
                    }
                    w.set(static_cast<int>(a), false);
                    w.set(bb, false);
                    w.set(cc, false);
                }
    });
    MuProfile out = MuProfile::constant(n, 0);
    for (const auto& local : partial)
        for (int i = 0; i < n; ++i) out.counts[static_cast<std::size_t>(i)] += local[static_cast<std::size_t>(i)];
    return out;
}

TripleClassCounts sts_mollard_decompose(const TripleSystem& ts, const Code& mollard_code) {
    if (!mollard_code.is_mollard()) throw PreconditionError("decompose: code is not a mollard code");
    MollardShape shape = mollard_code.shape();
    if (ts.n != shape.length()) throw PreconditionError("decompose: triple system does not match the code length");
    const Descriptor& left = *mollard_code.descriptor()->left;
    const Descriptor& right = *mollard_code.descriptor()->right;

    auto in_left_sts = [&](int a, int b, int c) {
        if (a == b || a == c || b == c) return false;
        return desc_contains(left, Word::from_support(shape.t, {a, b, c}));
    };
    auto in_right_sts = [&](int a, int b, int c) {
        if (a == b || a == c || b == c) return false;
        return desc_contains(right, Word::from_support(shape.m, {a, b, c}));
    };

    TripleClassCounts counts;
    for (const auto& t : ts.triples) {
        std::vector<std::pair<int, int>> col0, row0, interior;
        for (int p : t) {
            auto rs = shape.pair_of(p);
            if (rs.second == 0)
                col0.push_back(rs);
            else if (rs.first == 0)
                row0.push_back(rs);
            else
                interior.push_back(rs);
        }
        bool ok = false;
        if (col0.size() == 1 && row0.size() == 1 && interior.size() == 1) {
            ok = interior[0].first == col0[0].first && interior[0].second == row0[0].second;
            if (ok) ++counts.t00;
        } else if (col0.size() == 3) {
            ok = in_left_sts(col0[0].first, col0[1].first, col0[2].first);
            if (ok) ++counts.t30;
        } else if (col0.size() == 1 && interior.size() == 2) {
            ok = interior[0].second == interior[1].second &&
                 in_left_sts(col0[0].first, interior[0].first, interior[1].first);
            if (ok) ++counts.t30;
        } else if (row0.size() == 3) {
            ok = in_right_sts(row0[0].second, row0[1].second, row0[2].second);
            if (ok) ++counts.t03;
        } else if (row0.size() == 1 && interior.size() == 2) {
            ok = interior[0].first == interior[1].first &&
                 in_right_sts(row0[0].second, interior[0].second, interior[1].second);
            if (ok) ++counts.t03;
        } else if (interior.size() == 3) {
            ok = in_left_sts(interior[0].first, interior[1].first, interior[2].first) &&
                 in_right_sts(interior[0].second, interior[1].second, interior[2].second);
            if (ok) ++counts.t33;
        }
        if (!ok)
            throw Error("unclassifiable triple {" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                        std::to_string(t[2]) + "} in the product triple system");
    }
    return counts;
}

} // namespace perfcode
