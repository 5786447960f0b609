#ifndef PERFCODE_PERM_HPP
#define PERFCODE_PERM_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "perfcode/word.hpp"

namespace perfcode {

// A permutation of coordinates 1..n. Acts on words by moving the value
// at coordinate i to coordinate pi(i), so supports map forward:
// supp(pi(w)) = pi(supp(w)).
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);                           // identity
    explicit Perm(std::vector<std::uint16_t> img);  // img[0] unused, img[i] = pi(i)

    static Perm identity(int n) { return Perm(n); }
    // Parses cycle notation "(5,15)(9,12)"; "id" or "()" is the identity.
    static Perm from_cycles(int n, const std::string& s);
    static Perm transposition(int n, int a, int b);

    int n() const { return static_cast<int>(img_.size()) - 1; }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }

    bool is_identity() const;

    // Function composition: (this o other)(i) = this(other(i)); matches
    // the action law (a o b)(w) = a(b(w)).
    Perm compose(const Perm& other) const;
    Perm inverse() const;
    int order() const;

    Word apply(const Word& w) const;
    std::set<int> apply(const std::set<int>& s) const;
    std::vector<int> apply_sorted(const std::vector<int>& s) const;

    // Setwise stabilization of a coordinate set.
    bool stabilizes(const std::set<int>& s) const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    // Cycle notation with fixed points omitted, cycles sorted by their
    // minimum element, e.g. "(5,15)(9,12)(10,14)(11,13)"; identity -> "id".
    std::string cycles() const;

    std::size_t hash() const;

    const std::vector<std::uint16_t>& images() const { return img_; }

private:
    std::vector<std::uint16_t> img_;  // size n+1; img_[0] = 0
};

struct PermHash {
    std::size_t operator()(const Perm& p) const { return p.hash(); }
};

// A Hamming-space automorphism (x, pi) acting by y -> x + pi(y).
struct Automorphism {
    Word x;
    Perm pi;

    Word act(const Word& y) const { return x + pi.apply(y); }

    // (x,pi) . (y,pi') = (x + pi(y), pi o pi')
    Automorphism compose(const Automorphism& o) const { return {x + pi.apply(o.x), pi.compose(o.pi)}; }

    Automorphism inverse() const {
        Perm inv = pi.inverse();
        return {inv.apply(x), inv};
    }

    bool operator==(const Automorphism& o) const { return x == o.x && pi == o.pi; }
    bool operator<(const Automorphism& o) const {
        if (x != o.x) return x < o.x;
        return pi < o.pi;
    }
};

// An explicitly enumerated permutation group. Elements are kept sorted
// so identical groups print identically. Enumeration is capped at 2^16
// elements; larger groups must be handled through membership tests.
class PermGroup {
public:
    static constexpr std::size_t kOrderCap = std::size_t{1} << 16;

    PermGroup() = default;
    explicit PermGroup(int n) : n_(n), elems_{Perm::identity(n)} {}

    static PermGroup from_elements(int n, std::vector<Perm> elems);
    // Closure of gens under composition and inverse; throws TooLargeError
    // past the cap.
    static PermGroup generate(int n, const std::vector<Perm>& gens);

    int n() const { return n_; }
    std::size_t order() const { return elems_.size(); }
    const std::vector<Perm>& elements() const { return elems_; }
    bool contains(const Perm& p) const;
    bool is_subgroup_of(const PermGroup& g) const;

    // Checks the group axioms by enumeration (test support).
    bool verify_closure() const;

private:
    int n_ = 0;
    std::vector<Perm> elems_;
};

} // namespace perfcode

#endif
