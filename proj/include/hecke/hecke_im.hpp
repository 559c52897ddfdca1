#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <utility>

#include "hecke/bern_element.hpp"
#include "hecke/extweyl.hpp"
#include "hecke/laurent.hpp"

namespace hecke {

// Sparse element of H_I over the T-basis indexed by the extended affine
// Weyl group.  No zero coefficients are stored.
class ImElement {
  public:
    using Terms = std::map<ExtAffElt, LaurentScalar>;

    ImElement() = default;
    static ImElement basis(const ExtAffElt& key) {
        ImElement f;
        f.terms_[key] = LaurentScalar::one();
        return f;
    }
    static ImElement unit(const RootDatum& rd) { return basis(ExtAffElt::identity(rd)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    LaurentScalar coeff(const ExtAffElt& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? LaurentScalar() : it->second;
    }

    void add_term(const ExtAffElt& key, const LaurentScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ImElement& operator+=(const ImElement& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    ImElement& operator-=(const ImElement& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend ImElement operator+(ImElement a, const ImElement& b) { return a += b; }
    friend ImElement operator-(ImElement a, const ImElement& b) { return a -= b; }

    ImElement scaled(const LaurentScalar& s) const {
        ImElement r;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
        return r;
    }

    bool operator==(const ImElement& o) const { return terms_ == o.terms_; }

  private:
    Terms terms_;
};

// Shared computation context: the root datum, the support guard, the
// quadratic coefficients of the T-basis (T_s^2 = upper*T_s + lower), and
// memo tables.  All mutation is cache-only and mutex-guarded, so a context
// can be shared across threads.
class HeckeContext {
  public:
    explicit HeckeContext(const RootDatum& rd, i64 budget = 40);

    const RootDatum& rd() const { return rd_; }
    i64 budget() const { return budget_; }

    const LaurentScalar& quad_upper() const { return quad_upper_; }
    const LaurentScalar& quad_lower() const { return quad_lower_; }
    const LaurentScalar& quad_lower_inv() const { return quad_lower_inv_; }
    // test-harness hook; lower must stay a unit
    void set_quadratic_rule(LaurentScalar upper, LaurentScalar lower);

    i64 length(const ExtAffElt& a) const;
    ReducedWord word(const ExtAffElt& a) const;

    ImElement cached_theta(const LatticeElt& x, const std::function<ImElement()>& make) const;
    ImElement cached_bern_image(const LatticeElt& x, const WeylElt& w,
                                const std::function<ImElement()>& make) const;
    // memoized T_w * theta_y rewrites for the Bernstein product
    BernElement cached_cross(const WeylElt& w, const LatticeElt& y,
                             const std::function<BernElement()>& make) const;

  private:
    const RootDatum& rd_;
    i64 budget_;
    LaurentScalar quad_upper_, quad_lower_, quad_lower_inv_;

    mutable std::mutex mu_;
    mutable std::map<ExtAffElt, i64> len_cache_;
    mutable std::map<ExtAffElt, ReducedWord> word_cache_;
    mutable std::map<LatticeElt, ImElement> theta_cache_;
    mutable std::map<std::pair<LatticeElt, WeylElt>, ImElement> bern_image_cache_;
    mutable std::map<std::pair<WeylElt, LatticeElt>, BernElement> cross_cache_;
};

// whole-element generator multiplications; the budget guard lives here
ImElement right_mul_gen(const HeckeContext& ctx, const ImElement& f, int i);
ImElement right_mul_gen_inv(const HeckeContext& ctx, const ImElement& f, int i);
ImElement right_mul_omega(const ImElement& f, const ExtAffElt& omega);
ImElement left_mul_gen(const HeckeContext& ctx, int i, const ImElement& f);
ImElement left_mul_omega(const ExtAffElt& omega, const ImElement& f);

ImElement im_mul(const HeckeContext& ctx, const ImElement& f, const ImElement& g);

// two-sided inverse of the basis element T_a
ImElement im_inverse_basis(const HeckeContext& ctx, const ExtAffElt& a);

// v^{l(z)-l(y)} * T_y * T_z^{-1} for a specific dominant pair y - z
ImElement theta_im_via(const HeckeContext& ctx, const LatticeElt& y, const LatticeElt& z);
// Bernstein's theta_x through the canonical decomposition; memoized
ImElement theta_im(const HeckeContext& ctx, const LatticeElt& x);

// sum of T over the double coset W t_lambda W; lambda must be dominant
ImElement spherical_indicator(const HeckeContext& ctx, const LatticeElt& lambda);

}  // namespace hecke
