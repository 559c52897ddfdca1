#pragma once

#include <vector>

#include "hecke/rootdata.hpp"

namespace hecke {

// Element (x, w) of the extended affine Weyl group X ⋊ W, meaning the
// translation by x followed on the right by w:  (x,w)(y,v) = (x + w(y), wv).
struct ExtAffElt {
    LatticeElt x;
    WeylElt w;

    ExtAffElt() = default;
    ExtAffElt(LatticeElt x_, WeylElt w_) : x(std::move(x_)), w(std::move(w_)) {}
    static ExtAffElt identity(const RootDatum& rd) {
        return {rd.zero(), WeylElt::identity(rd.dim())};
    }
    static ExtAffElt translation(const LatticeElt& x) {
        return {x, WeylElt::identity(static_cast<int>(x.c.size()))};
    }

    auto operator<=>(const ExtAffElt&) const = default;
};

// Reduced expression s_{i1} ... s_{ik} * omega; letter 0 is the affine node.
struct ReducedWord {
    std::vector<int> letters;
    ExtAffElt omega;  // length-zero residual
};

ExtAffElt ext_mul(const ExtAffElt& a, const ExtAffElt& b);
ExtAffElt ext_inverse(const RootDatum& rd, const ExtAffElt& a);

// Iwahori-Matsumoto length via the closed formula
//   l(x,w) = sum_{a>0, w^{-1}a>0} |a(x)| + sum_{a>0, w^{-1}a<0} |a(x) - 1|.
i64 ext_length(const RootDatum& rd, const ExtAffElt& a);

// i >= 1: (0, s_i); i = 0: (theta^vee, s_theta) for the highest root theta.
ExtAffElt affine_simple(const RootDatum& rd, int i);

// Greedy left peeling with least-index descents; deterministic.
// Throws NoDescentError only if the length formula were broken.
ReducedWord ext_reduced_word(const RootDatum& rd, ExtAffElt a);

ExtAffElt assemble_word(const RootDatum& rd, const ReducedWord& rw);

}  // namespace hecke
