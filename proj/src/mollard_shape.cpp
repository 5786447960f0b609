#include "perfcode/mollard_shape.hpp"

namespace perfcode {

Word p1(const Word& z, const MollardShape& shape) {
    if (z.length() != shape.length()) throw PreconditionError("p1: word does not match shape");
    Word out(shape.t);
    for (int r = 1; r <= shape.t; ++r) {
        int parity = 0;
        for (int s = 0; s <= shape.m; ++s) parity ^= z.get(shape.index(r, s)) ? 1 : 0;
        if (parity) out.set(r);
    }
    return out;
}

Word p2(const Word& z, const MollardShape& shape) {
    if (z.length() != shape.length()) throw PreconditionError("p2: word does not match shape");
    Word out(shape.m);
    for (int s = 1; s <= shape.m; ++s) {
        int parity = 0;
        for (int r = 0; r <= shape.t; ++r) parity ^= z.get(shape.index(r, s)) ? 1 : 0;
        if (parity) out.set(s);
    }
    return out;
}

Word embed1(const Word& x, const MollardShape& shape) {
    if (x.length() != shape.t) throw PreconditionError("embed1: word length must be t");
    Word out(shape.length());
    for (int r = 1; r <= shape.t; ++r)
        if (x.get(r)) out.set(shape.index(r, 0));
    return out;
}

Word embed2(const Word& y, const MollardShape& shape) {
    if (y.length() != shape.m) throw PreconditionError("embed2: word length must be m");
    Word out(shape.length());
    for (int s = 1; s <= shape.m; ++s)
        if (y.get(s)) out.set(shape.index(0, s));
    return out;
}

} // namespace perfcode
