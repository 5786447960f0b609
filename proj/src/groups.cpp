#include "perfcode/groups.hpp"

#include <algorithm>
#include <map>

#include "perfcode/error.hpp"

namespace perfcode {

namespace {

// ---------------------------------------------------------------------
// Backtracking isomorphism search between two triple systems with the
// same point count. Pair-consistency forcing: once two points of a
// known triple are mapped, the third point's image is forced through
// the target's third-point table.

struct ThirdTable {
    int n = 0;
    std::vector<std::int16_t> third;  // (n+1)^2, 0 = pair uncovered
    bool unique_pairs = true;

    explicit ThirdTable(const TripleSystem& ts) : n(ts.n), third(static_cast<std::size_t>(n + 1) * (n + 1), 0) {
        for (const auto& t : ts.triples) {
            const int p[3][3] = {{t[0], t[1], t[2]}, {t[0], t[2], t[1]}, {t[1], t[2], t[0]}};
            for (const auto& e : p) {
                std::int16_t& slot_a = at(e[0], e[1]);
                std::int16_t& slot_b = at(e[1], e[0]);
                if (slot_a != 0) unique_pairs = false;
                slot_a = static_cast<std::int16_t>(e[2]);
                slot_b = static_cast<std::int16_t>(e[2]);
            }
        }
    }

    std::int16_t& at(int i, int j) { return third[static_cast<std::size_t>(i) * (n + 1) + j]; }
    std::int16_t get(int i, int j) const { return third[static_cast<std::size_t>(i) * (n + 1) + j]; }
};

struct IsoSearch {
    int n;
    const ThirdTable& ta;
    const ThirdTable& tb;
    const std::vector<std::vector<long long>>& inv_a;  // per-point invariant vectors
    const std::vector<std::vector<long long>>& inv_b;
    const std::function<bool(const Perm&)>& visit;  // returns false to stop

    std::vector<int> order;     // static source order
    std::vector<int> img;       // 0 = unassigned
    std::vector<int> pre;       // target -> source, 0 = unused
    std::vector<int> assigned;  // assignment stack
    bool stopped = false;

    IsoSearch(int n_, const ThirdTable& a, const ThirdTable& b, const std::vector<std::vector<long long>>& ia,
              const std::vector<std::vector<long long>>& ib, const std::function<bool(const Perm&)>& v)
        : n(n_), ta(a), tb(b), inv_a(ia), inv_b(ib), visit(v) {
        img.assign(static_cast<std::size_t>(n) + 1, 0);
        pre.assign(static_cast<std::size_t>(n) + 1, 0);
        // Descending invariant vector, ties by smallest label, so the
        // search tree is deterministic.
        order.resize(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) order[static_cast<std::size_t>(i) - 1] = i;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            if (inv_a[static_cast<std::size_t>(x) - 1] != inv_a[static_cast<std::size_t>(y) - 1])
                return inv_a[static_cast<std::size_t>(x) - 1] > inv_a[static_cast<std::size_t>(y) - 1];
            return x < y;
        });
    }

    // Assigns p -> q and propagates all forced images; records every
    // assignment in trail. Returns false on conflict.
    bool propagate(int p, int q, std::vector<int>& trail) {
        std::vector<std::pair<int, int>> queue{{p, q}};
        while (!queue.empty()) {
            auto [a, b] = queue.back();
            queue.pop_back();
            if (img[static_cast<std::size_t>(a)] != 0) {
                if (img[static_cast<std::size_t>(a)] != b) return false;
                continue;
            }
            if (pre[static_cast<std::size_t>(b)] != 0) return false;
            if (inv_a[static_cast<std::size_t>(a) - 1] != inv_b[static_cast<std::size_t>(b) - 1]) return false;
            img[static_cast<std::size_t>(a)] = b;
            pre[static_cast<std::size_t>(b)] = a;
            assigned.push_back(a);
            trail.push_back(a);
            for (std::size_t k = 0; k + 1 < assigned.size(); ++k) {
                int j = assigned[k];
                int t = ta.get(a, j);
                int t_img = tb.get(b, img[static_cast<std::size_t>(j)]);
                if ((t == 0) != (t_img == 0)) return false;
                if (t == 0) continue;
                int current = img[static_cast<std::size_t>(t)];
                if (current != 0) {
                    if (current != t_img) return false;
                } else {
                    queue.emplace_back(t, t_img);
                }
            }
        }
        return true;
    }

    void undo(const std::vector<int>& trail) {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            pre[static_cast<std::size_t>(img[static_cast<std::size_t>(*it)])] = 0;
            img[static_cast<std::size_t>(*it)] = 0;
            assigned.pop_back();
        }
    }

    void run() { dfs(); }

    void dfs() {
        if (stopped) return;
        int p = 0;
        for (int candidate : order)
            if (img[static_cast<std::size_t>(candidate)] == 0) {
                p = candidate;
                break;
            }
        if (p == 0) {
            std::vector<std::uint16_t> images(static_cast<std::size_t>(n) + 1);
            for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(img[static_cast<std::size_t>(i)]);
            if (!visit(Perm(std::move(images)))) stopped = true;
            return;
        }
        for (int q = 1; q <= n && !stopped; ++q) {
            if (pre[static_cast<std::size_t>(q)] != 0) continue;
            if (inv_a[static_cast<std::size_t>(p) - 1] != inv_b[static_cast<std::size_t>(q) - 1]) continue;
            std::vector<int> trail;
            if (propagate(p, q, trail)) dfs();
            undo(trail);
        }
    }
};

std::vector<std::vector<long long>> sts_point_invariants(const TripleSystem& ts) {
    std::vector<std::vector<long long>> inv(static_cast<std::size_t>(ts.n));
    std::vector<int> deg = ts.point_degrees();
    // Pair-graph degree: number of distinct partners across triples.
    std::vector<std::set<int>> partners(static_cast<std::size_t>(ts.n) + 1);
    for (const auto& t : ts.triples)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) partners[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])].insert(t[static_cast<std::size_t>(j)]);
    for (int i = 1; i <= ts.n; ++i)
        inv[static_cast<std::size_t>(i) - 1] = {deg[static_cast<std::size_t>(i) - 1],
                                                static_cast<long long>(partners[static_cast<std::size_t>(i)].size())};
    return inv;
}

// Verifies that every triple of a maps into b under p (leaf check after
// a completed assignment).
bool maps_triples(const TripleSystem& a, const TripleSystem& b, const Perm& p) {
    for (const auto& t : a.triples) {
        std::array<int, 3> m{p(t[0]), p(t[1]), p(t[2])};
        std::sort(m.begin(), m.end());
        if (!std::binary_search(b.triples.begin(), b.triples.end(), m)) return false;
    }
    return true;
}

void sts_isomorphisms(const TripleSystem& a, const TripleSystem& b,
                      const std::vector<std::vector<long long>>& inv_a,
                      const std::vector<std::vector<long long>>& inv_b,
                      const std::function<bool(const Perm&)>& visit) {
    if (a.n != b.n || a.triples.size() != b.triples.size()) return;
    ThirdTable ta(a), tb(b);
    if (!ta.unique_pairs || !tb.unique_pairs)
        throw PreconditionError("triple-system search requires pair-unique systems");
    auto checked_visit = [&](const Perm& p) {
        if (!maps_triples(a, b, p)) return true;  // unreachable for consistent tables
        return visit(p);
    };
    std::function<bool(const Perm&)> cb = checked_visit;
    IsoSearch search(a.n, ta, tb, inv_a, inv_b, cb);
    search.run();
}

// ---------------------------------------------------------------------
// Fallback for codes without usable weight-3 structure: coordinate
// backtracking with weight-class pruning (per-coordinate and per-pair
// weight profiles).

struct CodeProfiles {
    std::vector<std::vector<long long>> coord;                // per coordinate
    std::vector<std::vector<std::vector<long long>>> pair;    // per coordinate pair
};

CodeProfiles code_profiles(const ExplicitCode& c) {
    const int n = c.length();
    std::vector<int> weights;
    for (const Word& w : c.words()) weights.push_back(w.weight());
    std::vector<int> classes = weights;
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    std::map<int, std::size_t> class_of;
    for (std::size_t i = 0; i < classes.size(); ++i) class_of[classes[static_cast<std::size_t>(i)]] = i;

    CodeProfiles p;
    p.coord.assign(static_cast<std::size_t>(n), std::vector<long long>(classes.size(), 0));
    p.pair.assign(static_cast<std::size_t>(n),
                  std::vector<std::vector<long long>>(static_cast<std::size_t>(n),
                                                      std::vector<long long>(classes.size(), 0)));
    for (std::size_t wi = 0; wi < c.size(); ++wi) {
        const Word& w = c.word(wi);
        std::size_t cls = class_of[weights[wi]];
        auto supp = w.support();
        for (std::size_t i = 0; i < supp.size(); ++i) {
            ++p.coord[static_cast<std::size_t>(supp[i]) - 1][cls];
            for (std::size_t j = i + 1; j < supp.size(); ++j) {
                ++p.pair[static_cast<std::size_t>(supp[i]) - 1][static_cast<std::size_t>(supp[j]) - 1][cls];
                ++p.pair[static_cast<std::size_t>(supp[j]) - 1][static_cast<std::size_t>(supp[i]) - 1][cls];
            }
        }
    }
    return p;
}

void generic_code_isomorphisms(const ExplicitCode& a, const ExplicitCode& b,
                               const std::function<bool(const Perm&)>& visit) {
    const int n = a.length();
    CodeProfiles pa = code_profiles(a), pb = code_profiles(b);

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) order[static_cast<std::size_t>(i) - 1] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (pa.coord[static_cast<std::size_t>(x) - 1] != pa.coord[static_cast<std::size_t>(y) - 1])
            return pa.coord[static_cast<std::size_t>(x) - 1] > pa.coord[static_cast<std::size_t>(y) - 1];
        return x < y;
    });

    std::vector<int> img(static_cast<std::size_t>(n) + 1, 0), pre(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> assigned;
    bool stopped = false;

    std::function<void()> dfs = [&] {
        if (stopped) return;
        int p = 0;
        for (int candidate : order)
            if (img[static_cast<std::size_t>(candidate)] == 0) {
                p = candidate;
                break;
            }
        if (p == 0) {
            std::vector<std::uint16_t> images(static_cast<std::size_t>(n) + 1);
            for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(img[static_cast<std::size_t>(i)]);
            Perm perm(std::move(images));
            bool maps = true;
            for (const Word& w : a.words())
                if (!b.contains(perm.apply(w))) {
                    maps = false;
                    break;
                }
            if (maps && !visit(perm)) stopped = true;
            return;
        }
        for (int q = 1; q <= n && !stopped; ++q) {
            if (pre[static_cast<std::size_t>(q)] != 0) continue;
            if (pa.coord[static_cast<std::size_t>(p) - 1] != pb.coord[static_cast<std::size_t>(q) - 1]) continue;
            bool consistent = true;
            for (int j : assigned)
                if (pa.pair[static_cast<std::size_t>(p) - 1][static_cast<std::size_t>(j) - 1] !=
                    pb.pair[static_cast<std::size_t>(q) - 1][static_cast<std::size_t>(img[static_cast<std::size_t>(j)]) - 1]) {
                    consistent = false;
                    break;
                }
            if (!consistent) continue;
            img[static_cast<std::size_t>(p)] = q;
            pre[static_cast<std::size_t>(q)] = p;
            assigned.push_back(p);
            dfs();
            assigned.pop_back();
            pre[static_cast<std::size_t>(q)] = 0;
            img[static_cast<std::size_t>(p)] = 0;
        }
    };
    dfs();
}

TripleSystem weight3_system(const ExplicitCode& c) {
    TripleSystem ts;
    ts.n = c.length();
    for (const Word& w : c.words())
        if (w.weight() == 3) {
            auto s = w.support();
            ts.triples.push_back({s[0], s[1], s[2]});
        }
    ts.normalize();
    return ts;
}

// Invariant vector per coordinate: triple degree, mu value, pair-graph
// degree; candidates must match exactly and branching follows the
// descending order of these vectors.
std::vector<std::vector<long long>> code_point_invariants(const ExplicitCode& code, const TripleSystem& ts,
                                                          const Options& opt) {
    auto inv = sts_point_invariants(ts);
    MuProfile mu_profile = mu(Code::from_explicit(code), opt);
    for (std::size_t i = 0; i < inv.size(); ++i) {
        long long pair_degree = inv[i][1];
        inv[i][1] = mu_profile.counts[i];
        inv[i].push_back(pair_degree);
    }
    return inv;
}

} // namespace

PermGroup sts_automorphisms(const TripleSystem& ts, const Options&) {
    if (!ts.is_steiner()) throw PreconditionError("sts_automorphisms requires a valid Steiner triple system");
    auto inv = sts_point_invariants(ts);
    std::vector<Perm> found;
    sts_isomorphisms(ts, ts, inv, inv, [&](const Perm& p) {
        found.push_back(p);
        if (found.size() > PermGroup::kOrderCap) throw TooLargeError("triple-system group exceeds 2^16 elements");
        return true;
    });
    return PermGroup::from_elements(ts.n, std::move(found));
}

PermGroup symmetry_group(const ExplicitCode& code, const Options& opt) {
    TripleSystem ts = weight3_system(code);
    std::vector<Perm> found;
    if (!ts.triples.empty()) {
        auto inv = code_point_invariants(code, ts, opt);
        sts_isomorphisms(ts, ts, inv, inv, [&](const Perm& p) {
            bool keeps = true;
            for (const Word& w : code.words())
                if (!code.contains(p.apply(w))) {
                    keeps = false;
                    break;
                }
            if (keeps) {
                found.push_back(p);
                if (found.size() > PermGroup::kOrderCap) throw TooLargeError("symmetry group exceeds 2^16 elements");
            }
            return true;
        });
    } else {
        generic_code_isomorphisms(code, code, [&](const Perm& p) {
            found.push_back(p);
            if (found.size() > PermGroup::kOrderCap) throw TooLargeError("symmetry group exceeds 2^16 elements");
            return true;
        });
    }
    return PermGroup::from_elements(code.length(), std::move(found));
}

std::vector<Perm> equivalence_maps(const ExplicitCode& a, const ExplicitCode& b, SearchMode mode,
                                   const Options& opt) {
    if (a.length() != b.length()) throw PreconditionError("equivalence: length mismatch");
    if (a.size() != b.size()) throw PreconditionError("equivalence: cardinality mismatch");
    std::vector<Perm> found;
    TripleSystem ts_a = weight3_system(a), ts_b = weight3_system(b);
    if (ts_a.size() != ts_b.size()) return found;  // weight distributions differ

    auto verify_and_collect = [&](const Perm& p) {
        for (const Word& w : a.words())
            if (!b.contains(p.apply(w))) return true;  // not a code map; keep searching
        found.push_back(p);
        if (found.size() > PermGroup::kOrderCap) throw TooLargeError("equivalence map list exceeds 2^16 entries");
        return mode == SearchMode::All;
    };

    if (!ts_a.triples.empty()) {
        auto inv_a = code_point_invariants(a, ts_a, opt);
        auto inv_b = code_point_invariants(b, ts_b, opt);
        sts_isomorphisms(ts_a, ts_b, inv_a, inv_b, verify_and_collect);
    } else {
        generic_code_isomorphisms(a, b, [&](const Perm& p) {
            found.push_back(p);
            if (found.size() > PermGroup::kOrderCap) throw TooLargeError("equivalence map list exceeds 2^16 entries");
            return mode == SearchMode::All;
        });
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<Perm> rotations_at(const ExplicitCode& code, const Word& x, const Options& opt) {
    if (!code.contains(x)) throw PreconditionError("rotations_at: x is not a codeword");
    return equivalence_maps(code, code.translate(x), SearchMode::All, opt);
}

std::vector<Word> kernel_coset_representatives(const ExplicitCode& code, const Options& opt) {
    KernelInfo ker = kernel(Code::from_explicit(code), opt);
    std::vector<Word> reps;
    std::unordered_set<std::uint64_t> covered;  // lengths beyond 64 fall back to a word set
    std::set<Word> covered_big;
    const bool small = code.length() <= 64;
    for (const Word& w : code.words()) {
        bool seen = small ? covered.count(w.low64()) != 0 : covered_big.count(w) != 0;
        if (seen) continue;
        reps.push_back(w);
        for (const Word& k : ker.words->words()) {
            Word member = w + k;
            if (small)
                covered.insert(member.low64());
            else
                covered_big.insert(member);
        }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

bool is_transitive(const ExplicitCode& code, const Options& opt) {
    // Transitive codes are distance invariant; a cheap distribution check
    // from a few codewords rejects mutilated inputs before any search.
    auto distribution_from = [&](const Word& x) {
        std::vector<long long> dist(static_cast<std::size_t>(code.length()) + 1, 0);
        for (const Word& w : code.words()) ++dist[static_cast<std::size_t>(distance(w, x))];
        return dist;
    };
    auto base = distribution_from(code.word(0));
    for (std::size_t probe : {code.size() / 3, code.size() / 2, code.size() - 1})
        if (distribution_from(code.word(probe)) != base) return false;

    for (const Word& rep : kernel_coset_representatives(code, opt)) {
        if (rep.is_zero()) continue;
        if (equivalence_maps(code, code.translate(rep), SearchMode::First, opt).empty()) return false;
    }
    return true;
}

bool AutGroup::contains(const Automorphism& a) const {
    return std::binary_search(elements.begin(), elements.end(), a);
}

AutGroup automorphism_group(const ExplicitCode& code, const Options& opt) {
    AutGroup out;
    out.code = std::make_shared<const ExplicitCode>(code);

    PermGroup sym = symmetry_group(code, opt);
    KernelInfo ker = kernel(Code::from_explicit(code), opt);
    std::vector<Word> reps = kernel_coset_representatives(code, opt);

    // R_x depends only on the kernel coset of x: pi(C) = x + C is a
    // coset-level condition. One witness per coset spans everything.
    std::vector<std::pair<Word, Perm>> witnesses;
    for (const Word& rep : reps) {
        if (rep.is_zero()) {
            witnesses.emplace_back(rep, Perm::identity(code.length()));
            continue;
        }
        auto first = equivalence_maps(code, code.translate(rep), SearchMode::First, opt);
        if (!first.empty()) witnesses.emplace_back(rep, first.front());
    }
    out.transitive = witnesses.size() == reps.size();

    std::uint64_t order = static_cast<std::uint64_t>(witnesses.size()) * ker.words->size() * sym.order();
    if (order > (std::uint64_t{1} << 16)) throw TooLargeError("automorphism group exceeds the 2^16 element cap");

    out.elements.reserve(order);
    for (const auto& [rep, pi0] : witnesses)
        for (const Word& k : ker.words->words())
            for (const Perm& s : sym.elements()) out.elements.push_back({rep + k, pi0.compose(s)});
    std::sort(out.elements.begin(), out.elements.end());
    out.elements.erase(std::unique(out.elements.begin(), out.elements.end(),
                                   [](const Automorphism& a, const Automorphism& b) { return a == b; }),
                       out.elements.end());
    if (out.elements.size() != order) throw Error("automorphism group construction produced duplicates");
    return out;
}

PermGroup rotation_group(const AutGroup& aut) {
    std::vector<Perm> perms;
    perms.reserve(aut.elements.size());
    for (const Automorphism& a : aut.elements) perms.push_back(a.pi);
    return PermGroup::from_elements(aut.code->length(), std::move(perms));
}

PermGroup rotation_group(const ExplicitCode& code, const Options& opt) {
    return rotation_group(automorphism_group(code, opt));
}

} // namespace perfcode
