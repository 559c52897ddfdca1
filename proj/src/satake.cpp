#include "hecke/satake.hpp"

namespace hecke {

GroupAlgElement ga_mul(const GroupAlgElement& a, const GroupAlgElement& b) {
    GroupAlgElement r;
    for (const auto& [xa, ca] : a.terms())
        for (const auto& [xb, cb] : b.terms()) r.add_term(xa + xb, ca * cb);
    return r;
}

BernElement e_K(const RootDatum& rd) {
    BernElement r;
    for (const auto& w : rd.weyl_elements())
        r.add_term({rd.zero(), w}, LaurentScalar::one());
    return r;
}

LaurentScalar poincare_polynomial(const RootDatum& rd) {
    LaurentScalar r;
    for (const auto& w : rd.weyl_elements())
        r += LaurentScalar::q_power(rd.finite_length(w));
    return r;
}

GroupAlgElement sat_transform(const RootDatum& rd, const BernElement& f) {
    GroupAlgElement r;
    for (const auto& [key, c] : f.terms())
        r.add_term(key.x, ScalarFraction(c * LaurentScalar::q_power(rd.finite_length(key.w))));
    return r;
}

GroupAlgElement sat_transform(const RootDatum& rd, const FracBernElement& f) {
    GroupAlgElement r;
    for (const auto& [key, c] : f.terms())
        r.add_term(key.x,
                   c * ScalarFraction(LaurentScalar::q_power(rd.finite_length(key.w))));
    return r;
}

GroupAlgElement satake_spherical(const HeckeContext& ctx, const LatticeElt& lambda) {
    return sat_transform(ctx.rd(), from_im(ctx, spherical_indicator(ctx, lambda)));
}

FracBernElement center_map_Z(const HeckeContext& ctx, const BernElement& z) {
    BernElement ze = bern_mul(ctx, z, e_K(ctx.rd()));
    ScalarFraction inv_wk =
        ScalarFraction(LaurentScalar::one(), poincare_polynomial(ctx.rd()));
    return FracBernElement(ze, inv_wk);
}

bool w_invariant(const RootDatum& rd, const GroupAlgElement& g) {
    for (const auto& [x, c] : g.terms())
        for (const auto& w : rd.weyl_elements()) {
            if (!(g.coeff(w.apply(x)) == c)) return false;
        }
    return true;
}

}  // namespace hecke
