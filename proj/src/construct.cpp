#include "perfcode/construct.hpp"

#include "perfcode/dataset.hpp"
#include "perfcode/error.hpp"

namespace perfcode {

Word embed1_checked(const Code& c, const Word& x, const MollardShape& shape) {
    if (!c.contains(x)) throw PreconditionError("embed1: word is not a codeword of C");
    return embed1(x, shape);
}

Word embed2_checked(const Code& d, const Word& y, const MollardShape& shape) {
    if (!d.contains(y)) throw PreconditionError("embed2: word is not a codeword of D");
    return embed2(y, shape);
}

Perm lift_d1(const Perm& pi, const MollardShape& shape) {
    if (pi.n() != shape.t) throw PreconditionError("lift_d1: permutation degree must equal t");
    std::vector<std::uint16_t> img(static_cast<std::size_t>(shape.length()) + 1);
    for (int idx = 1; idx <= shape.length(); ++idx) {
        auto [r, s] = shape.pair_of(idx);
        img[static_cast<std::size_t>(idx)] =
            static_cast<std::uint16_t>(r == 0 ? idx : shape.index(pi(r), s));
    }
    return Perm(std::move(img));
}

Perm lift_d2(const Perm& pi, const MollardShape& shape) {
    if (pi.n() != shape.m) throw PreconditionError("lift_d2: permutation degree must equal m");
    std::vector<std::uint16_t> img(static_cast<std::size_t>(shape.length()) + 1);
    for (int idx = 1; idx <= shape.length(); ++idx) {
        auto [r, s] = shape.pair_of(idx);
        img[static_cast<std::size_t>(idx)] =
            static_cast<std::uint16_t>(s == 0 ? idx : shape.index(r, pi(s)));
    }
    return Perm(std::move(img));
}

namespace {

// Splits "a,b" at the single top-level comma of a mollard argument list.
std::pair<std::string, std::string> split_args(const std::string& inner) {
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
        char c = inner[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) return {inner.substr(0, i), inner.substr(i + 1)};
    }
    throw ParseError("mollard descriptor needs two comma-separated arguments");
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

} // namespace

Code parse_descriptor(const std::string& raw, const Options& opt) {
    std::string text = strip(raw);
    if (text == "p1") return trivial_p1();
    if (text.rfind("hamming:", 0) == 0) {
        int r = 0;
        try {
            r = std::stoi(text.substr(8));
        } catch (const std::exception&) {
            throw ParseError("bad hamming descriptor: " + text);
        }
        return hamming(r);
    }
    if (text.rfind("file:", 0) == 0) {
        std::string path = text.substr(5);
        return Code::from_explicit(load_code(path), text);
    }
    if (text.rfind("builtin:", 0) == 0) {
        if (text.substr(8) == "4918") return build_code_4918();
        throw ParseError("unknown builtin code: " + text);
    }
    if (text.rfind("mollard(", 0) == 0 && text.back() == ')') {
        auto [a, b] = split_args(text.substr(8, text.size() - 9));
        Code left = parse_descriptor(a, opt);
        Code right = parse_descriptor(b, opt);
        return mollard(left, right, opt);
    }
    throw ParseError("unrecognized code descriptor: " + text);
}

} // namespace perfcode
