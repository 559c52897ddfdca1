#include "hecke/hecke_im.hpp"

#include <set>

namespace hecke {

HeckeContext::HeckeContext(const RootDatum& rd, i64 budget) : rd_(rd), budget_(budget) {
    if (budget < 1) throw InputError("budget must be >= 1");
    quad_upper_ = q_minus_one();
    quad_lower_ = LaurentScalar::q_power(1);
    quad_lower_inv_ = quad_lower_.unit_inverse();
}

void HeckeContext::set_quadratic_rule(LaurentScalar upper, LaurentScalar lower) {
    quad_lower_inv_ = lower.unit_inverse();  // throws unless a unit
    quad_upper_ = std::move(upper);
    quad_lower_ = std::move(lower);
}

i64 HeckeContext::length(const ExtAffElt& a) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = len_cache_.find(a);
        if (it != len_cache_.end()) return it->second;
    }
    i64 len = ext_length(rd_, a);
    std::lock_guard<std::mutex> lock(mu_);
    len_cache_.emplace(a, len);
    return len;
}

ReducedWord HeckeContext::word(const ExtAffElt& a) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = word_cache_.find(a);
        if (it != word_cache_.end()) return it->second;
    }
    ReducedWord rw = ext_reduced_word(rd_, a);
    std::lock_guard<std::mutex> lock(mu_);
    word_cache_.emplace(a, rw);
    return rw;
}

ImElement HeckeContext::cached_theta(const LatticeElt& x,
                                     const std::function<ImElement()>& make) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = theta_cache_.find(x);
        if (it != theta_cache_.end()) return it->second;
    }
    ImElement val = make();
    std::lock_guard<std::mutex> lock(mu_);
    return theta_cache_.emplace(x, std::move(val)).first->second;
}

ImElement HeckeContext::cached_bern_image(const LatticeElt& x, const WeylElt& w,
                                          const std::function<ImElement()>& make) const {
    auto key = std::make_pair(x, w);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = bern_image_cache_.find(key);
        if (it != bern_image_cache_.end()) return it->second;
    }
    ImElement val = make();
    std::lock_guard<std::mutex> lock(mu_);
    return bern_image_cache_.emplace(std::move(key), std::move(val)).first->second;
}

BernElement HeckeContext::cached_cross(const WeylElt& w, const LatticeElt& y,
                                       const std::function<BernElement()>& make) const {
    auto key = std::make_pair(w, y);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cross_cache_.find(key);
        if (it != cross_cache_.end()) return it->second;
    }
    BernElement val = make();
    std::lock_guard<std::mutex> lock(mu_);
    return cross_cache_.emplace(std::move(key), std::move(val)).first->second;
}

namespace {

void check_budget(const HeckeContext& ctx, i64 len) {
    if (len > ctx.budget())
        throw BudgetExceededError("support length " + std::to_string(len) +
                                  " exceeds budget " + std::to_string(ctx.budget()));
}

}  // namespace

ImElement right_mul_gen(const HeckeContext& ctx, const ImElement& f, int i) {
    ImElement r;
    ExtAffElt s = affine_simple(ctx.rd(), i);
    for (const auto& [u, c] : f.terms()) {
        ExtAffElt us = ext_mul(u, s);
        if (ctx.length(us) > ctx.length(u)) {
            check_budget(ctx, ctx.length(us));
            r.add_term(us, c);
        } else {
            r.add_term(us, c * ctx.quad_lower());
            r.add_term(u, c * ctx.quad_upper());
        }
    }
    return r;
}

ImElement right_mul_gen_inv(const HeckeContext& ctx, const ImElement& f, int i) {
    // T_u T_s^{-1} = T_{us} when the length drops, else b^{-1} T_{us} - a b^{-1} T_u
    ImElement r;
    ExtAffElt s = affine_simple(ctx.rd(), i);
    LaurentScalar neg_ab = -(ctx.quad_upper() * ctx.quad_lower_inv());
    for (const auto& [u, c] : f.terms()) {
        ExtAffElt us = ext_mul(u, s);
        if (ctx.length(us) < ctx.length(u)) {
            r.add_term(us, c);
        } else {
            check_budget(ctx, ctx.length(us));
            r.add_term(us, c * ctx.quad_lower_inv());
            r.add_term(u, c * neg_ab);
        }
    }
    return r;
}

ImElement right_mul_omega(const ImElement& f, const ExtAffElt& omega) {
    ImElement r;
    for (const auto& [u, c] : f.terms()) r.add_term(ext_mul(u, omega), c);
    return r;
}

ImElement left_mul_gen(const HeckeContext& ctx, int i, const ImElement& f) {
    ImElement r;
    ExtAffElt s = affine_simple(ctx.rd(), i);
    for (const auto& [u, c] : f.terms()) {
        ExtAffElt su = ext_mul(s, u);
        if (ctx.length(su) > ctx.length(u)) {
            check_budget(ctx, ctx.length(su));
            r.add_term(su, c);
        } else {
            r.add_term(su, c * ctx.quad_lower());
            r.add_term(u, c * ctx.quad_upper());
        }
    }
    return r;
}

ImElement left_mul_omega(const ExtAffElt& omega, const ImElement& f) {
    ImElement r;
    for (const auto& [u, c] : f.terms()) r.add_term(ext_mul(omega, u), c);
    return r;
}

ImElement im_mul(const HeckeContext& ctx, const ImElement& f, const ImElement& g) {
    if (f.is_zero() || g.is_zero()) return {};
    // walk the cheaper factorization: expanding g costs |f| work per letter
    // of each word of g, and symmetrically
    i64 cost_right = 0, cost_left = 0;
    for (const auto& [v, c] : g.terms()) cost_right += 1 + ctx.length(v);
    for (const auto& [u, c] : f.terms()) cost_left += 1 + ctx.length(u);
    cost_right *= static_cast<i64>(f.size());
    cost_left *= static_cast<i64>(g.size());

    ImElement result;
    if (cost_right <= cost_left) {
        for (const auto& [v, c] : g.terms()) {
            ReducedWord rw = ctx.word(v);
            ImElement acc = f.scaled(c);
            for (int letter : rw.letters) acc = right_mul_gen(ctx, acc, letter);
            if (!rw.omega.x.is_zero() || !rw.omega.w.is_identity())
                acc = right_mul_omega(acc, rw.omega);
            result += acc;
        }
    } else {
        for (const auto& [u, c] : f.terms()) {
            ReducedWord rw = ctx.word(u);
            ImElement acc = g.scaled(c);
            if (!rw.omega.x.is_zero() || !rw.omega.w.is_identity())
                acc = left_mul_omega(rw.omega, acc);
            for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it)
                acc = left_mul_gen(ctx, *it, acc);
            result += acc;
        }
    }
    return result;
}

ImElement im_inverse_basis(const HeckeContext& ctx, const ExtAffElt& a) {
    // (T_{s_{i1}} ... T_{s_{ik}} T_w)^{-1}, walked right to left
    ReducedWord rw = ctx.word(a);
    ImElement r = ImElement::basis(ext_inverse(ctx.rd(), rw.omega));
    for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it)
        r = right_mul_gen_inv(ctx, r, *it);
    return r;
}

ImElement theta_im_via(const HeckeContext& ctx, const LatticeElt& y, const LatticeElt& z) {
    const RootDatum& rd = ctx.rd();
    if (!rd.is_dominant(y) || !rd.is_dominant(z))
        throw InputError("theta_im_via: decomposition parts must be dominant");
    ExtAffElt ty = ExtAffElt::translation(y);
    ExtAffElt tz = ExtAffElt::translation(z);
    i64 ly = ctx.length(ty), lz = ctx.length(tz);
    check_budget(ctx, ly);
    check_budget(ctx, lz);
    ReducedWord rwz = ctx.word(tz);
    ImElement p = ImElement::basis(ext_mul(ty, ext_inverse(rd, rwz.omega)));
    for (auto it = rwz.letters.rbegin(); it != rwz.letters.rend(); ++it)
        p = right_mul_gen_inv(ctx, p, *it);
    return p.scaled(LaurentScalar::v_power(static_cast<int>(lz - ly)));
}

ImElement theta_im(const HeckeContext& ctx, const LatticeElt& x) {
    return ctx.cached_theta(x, [&] {
        auto [y, z] = ctx.rd().decompose_dominant(x);
        return theta_im_via(ctx, y, z);
    });
}

ImElement spherical_indicator(const HeckeContext& ctx, const LatticeElt& lambda) {
    const RootDatum& rd = ctx.rd();
    if (!rd.is_dominant(lambda)) throw NotDominantError("spherical_indicator: lambda not dominant");
    ExtAffElt t = ExtAffElt::translation(lambda);
    std::set<ExtAffElt> coset;
    for (const auto& w : rd.weyl_elements()) {
        ExtAffElt wt = ext_mul({rd.zero(), w}, t);
        for (const auto& v : rd.weyl_elements()) coset.insert(ext_mul(wt, {rd.zero(), v}));
    }
    ImElement r;
    for (const auto& elt : coset) r.add_term(elt, LaurentScalar::one());
    return r;
}

}  // namespace hecke
