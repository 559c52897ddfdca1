#include "hecke/extweyl.hpp"

#include <cstdlib>

namespace hecke {

ExtAffElt ext_mul(const ExtAffElt& a, const ExtAffElt& b) {
    return {a.x + a.w.apply(b.x), a.w * b.w};
}

ExtAffElt ext_inverse(const RootDatum& rd, const ExtAffElt& a) {
    WeylElt winv = rd.weyl_inverse(a.w);
    return {-winv.apply(a.x), winv};
}

i64 ext_length(const RootDatum& rd, const ExtAffElt& a) {
    // Reindex over gamma > 0 via alpha = +-w(gamma):
    //   w(gamma) = +alpha:  w^{-1}(alpha) > 0, contributes |alpha(x)|
    //   w(gamma) = -alpha:  w^{-1}(alpha) < 0, contributes |alpha(x) - 1|
    i64 total = 0;
    for (int t = 0; t < rd.num_positive_roots(); ++t) {
        auto [u, sign] = rd.coroot_image(a.w, t);
        i64 p = rd.root_pairing(u, a.x);
        total += sign > 0 ? std::abs(p) : std::abs(p - 1);
    }
    return total;
}

ExtAffElt affine_simple(const RootDatum& rd, int i) {
    if (i < 0 || i > rd.rank())
        throw InputError("affine_simple: index out of range: " + std::to_string(i));
    if (i >= 1) return {rd.zero(), rd.simple_reflection(i - 1)};
    int h = rd.highest_root_index();
    return {rd.coroot_elt(h), rd.reflection(h)};
}

ReducedWord ext_reduced_word(const RootDatum& rd, ExtAffElt a) {
    ReducedWord rw;
    i64 len = ext_length(rd, a);
    while (len > 0) {
        bool found = false;
        for (int i = 0; i <= rd.rank(); ++i) {
            ExtAffElt next = ext_mul(affine_simple(rd, i), a);
            i64 nlen = ext_length(rd, next);
            if (nlen < len) {
                rw.letters.push_back(i);
                a = std::move(next);
                len = nlen;
                found = true;
                break;
            }
        }
        if (!found) throw NoDescentError("ext_reduced_word: no descent at positive length");
    }
    rw.omega = std::move(a);
    return rw;
}

ExtAffElt assemble_word(const RootDatum& rd, const ReducedWord& rw) {
    ExtAffElt a = ExtAffElt::identity(rd);
    for (int i : rw.letters) a = ext_mul(a, affine_simple(rd, i));
    return ext_mul(a, rw.omega);
}

}  // namespace hecke
