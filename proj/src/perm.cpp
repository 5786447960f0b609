#include "perfcode/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "perfcode/error.hpp"

namespace perfcode {

Perm::Perm(int n) : img_(static_cast<std::size_t>(n) + 1) {
    if (n < 1 || n > Word::kMaxLength) throw PreconditionError("permutation degree out of range");
    for (int i = 0; i <= n; ++i) img_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
}

Perm::Perm(std::vector<std::uint16_t> img) : img_(std::move(img)) {
    int n = static_cast<int>(img_.size()) - 1;
    if (n < 1) throw PreconditionError("empty permutation");
    std::vector<bool> seen(img_.size(), false);
    img_[0] = 0;
    for (int i = 1; i <= n; ++i) {
        int v = img_[static_cast<std::size_t>(i)];
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw PreconditionError("not a bijection on 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Perm Perm::transposition(int n, int a, int b) {
    Perm p(n);
    p.img_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(b);
    p.img_[static_cast<std::size_t>(b)] = static_cast<std::uint16_t>(a);
    return p;
}

Perm Perm::from_cycles(int n, const std::string& s) {
    Perm p(n);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    };
    skip_ws();
    if (s.substr(i) == "id" || s.substr(i) == "()") return p;
    while (i < s.size()) {
        skip_ws();
        if (i >= s.size()) break;
        if (s[i] != '(') throw ParseError("expected '(' in cycle notation");
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            std::size_t j = i;
            while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
            if (j == i) throw ParseError("expected point in cycle notation");
            int v = std::stoi(s.substr(i, j - i));
            if (v < 1 || v > n) throw ParseError("cycle point outside 1..n");
            cyc.push_back(v);
            i = j;
            skip_ws();
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            if (i < s.size() && s[i] == ')') {
                ++i;
                break;
            }
            throw ParseError("expected ',' or ')' in cycle notation");
        }
        for (std::size_t k = 0; k < cyc.size(); ++k)
            p.img_[static_cast<std::size_t>(cyc[k])] = static_cast<std::uint16_t>(cyc[(k + 1) % cyc.size()]);
    }
    // Re-validate bijectivity after stitching cycles together.
    return Perm(p.img_);
}

bool Perm::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (img_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

Perm Perm::compose(const Perm& other) const {
    if (other.n() != n()) throw PreconditionError("compose: degree mismatch");
    std::vector<std::uint16_t> img(img_.size());
    img[0] = 0;
    for (int i = 1; i <= n(); ++i) img[static_cast<std::size_t>(i)] = img_[other.img_[static_cast<std::size_t>(i)]];
    Perm p;
    p.img_ = std::move(img);
    return p;
}

Perm Perm::inverse() const {
    std::vector<std::uint16_t> img(img_.size());
    img[0] = 0;
    for (int i = 1; i <= n(); ++i) img[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint16_t>(i);
    Perm p;
    p.img_ = std::move(img);
    return p;
}

int Perm::order() const {
    std::vector<bool> seen(img_.size(), false);
    long long ord = 1;
    for (int i = 1; i <= n(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        int j = i;
        do {
            seen[static_cast<std::size_t>(j)] = true;
            j = img_[static_cast<std::size_t>(j)];
            ++len;
        } while (j != i);
        ord = std::lcm(ord, static_cast<long long>(len));
    }
    return static_cast<int>(ord);
}

Word Perm::apply(const Word& w) const {
    if (w.length() != n()) throw PreconditionError("perm apply: length mismatch");
    Word r(w.length());
    for (int bi = 0; bi < w.block_count(); ++bi) {
        std::uint64_t b = w.block(bi);
        while (b) {
            int k = std::countr_zero(b);
            r.set(img_[static_cast<std::size_t>(bi * 64 + k + 1)]);
            b &= b - 1;
        }
    }
    return r;
}

std::set<int> Perm::apply(const std::set<int>& s) const {
    std::set<int> r;
    for (int v : s) r.insert(img_[static_cast<std::size_t>(v)]);
    return r;
}

std::vector<int> Perm::apply_sorted(const std::vector<int>& s) const {
    std::vector<int> r;
    r.reserve(s.size());
    for (int v : s) r.push_back(img_[static_cast<std::size_t>(v)]);
    std::sort(r.begin(), r.end());
    return r;
}

bool Perm::stabilizes(const std::set<int>& s) const {
    for (int v : s)
        if (!s.count(img_[static_cast<std::size_t>(v)])) return false;
    return true;
}

std::string Perm::cycles() const {
    std::vector<bool> seen(img_.size(), false);
    std::ostringstream out;
    bool any = false;
    for (int i = 1; i <= n(); ++i) {
        if (seen[static_cast<std::size_t>(i)] || img_[static_cast<std::size_t>(i)] == i) continue;
        out << '(';
        int j = i;
        bool first = true;
        do {
            if (!first) out << ',';
            out << j;
            first = false;
            seen[static_cast<std::size_t>(j)] = true;
            j = img_[static_cast<std::size_t>(j)];
        } while (j != i);
        out << ')';
        any = true;
    }
    return any ? out.str() : std::string("id");
}

std::size_t Perm::hash() const {
    std::size_t h = 14695981039346656037ULL;
    for (std::uint16_t v : img_) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return h;
}

PermGroup PermGroup::from_elements(int n, std::vector<Perm> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    PermGroup g;
    g.n_ = n;
    g.elems_ = std::move(elems);
    return g;
}

PermGroup PermGroup::generate(int n, const std::vector<Perm>& gens) {
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> queue;
    seen.insert(Perm::identity(n));
    queue.push_back(Perm::identity(n));
    std::vector<Perm> all_gens = gens;
    for (const Perm& g : gens) all_gens.push_back(g.inverse());
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Perm cur = queue[qi];
        for (const Perm& g : all_gens) {
            Perm next = g.compose(cur);
            if (seen.insert(next).second) {
                if (seen.size() > kOrderCap) throw TooLargeError("group enumeration exceeds 2^16 elements");
                queue.push_back(next);
            }
        }
    }
    return from_elements(n, std::vector<Perm>(seen.begin(), seen.end()));
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
    for (const Perm& p : elems_)
        if (!g.contains(p)) return false;
    return true;
}

bool PermGroup::verify_closure() const {
    for (const Perm& a : elems_) {
        if (!contains(a.inverse())) return false;
        for (const Perm& b : elems_)
            if (!contains(a.compose(b))) return false;
    }
    return true;
}

} // namespace perfcode
