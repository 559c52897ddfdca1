#pragma once

#include <map>

#include "hecke/hecke_bern.hpp"

namespace hecke {

// Element of the group algebra of X with fraction coefficients; the target
// of the Satake transform.  Fractions are only reduced up to content, so
// equality goes through cross multiplication per coefficient.
class GroupAlgElement {
  public:
    using Terms = std::map<LatticeElt, ScalarFraction>;

    GroupAlgElement() = default;
    static GroupAlgElement basis(const LatticeElt& x) {
        GroupAlgElement g;
        g.terms_.emplace(x, ScalarFraction(LaurentScalar::one()));
        return g;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    ScalarFraction coeff(const LatticeElt& x) const {
        auto it = terms_.find(x);
        return it == terms_.end() ? ScalarFraction() : it->second;
    }

    void add_term(const LatticeElt& x, const ScalarFraction& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(x);
        if (it == terms_.end()) {
            terms_.emplace(x, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GroupAlgElement& operator+=(const GroupAlgElement& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    GroupAlgElement& operator-=(const GroupAlgElement& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    GroupAlgElement scaled(const ScalarFraction& s) const {
        GroupAlgElement r;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
        return r;
    }

    bool equals(const GroupAlgElement& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (a->first != b->first || a->second != b->second) return false;
        return true;
    }

  private:
    Terms terms_;
};

// convolution on X
GroupAlgElement ga_mul(const GroupAlgElement& a, const GroupAlgElement& b);

// Bernstein element with fraction coefficients; appears once the spherical
// unit 1_K = e_K / [K:I] enters the picture.
class FracBernElement {
  public:
    using Terms = std::map<BernKey, ScalarFraction>;

    FracBernElement() = default;
    FracBernElement(const BernElement& f, const ScalarFraction& scale) {
        for (const auto& [k, c] : f.terms()) {
            ScalarFraction v = ScalarFraction(c) * scale;
            if (!v.is_zero()) terms_.emplace(k, v);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

  private:
    Terms terms_;
};

// e_K = sum of T_w over the finite Weyl group, as a Bernstein element
BernElement e_K(const RootDatum& rd);
// [K:I], the Poincare polynomial sum of q^{l(w)} over W
LaurentScalar poincare_polynomial(const RootDatum& rd);

// Satake transform on Bernstein coefficients: sum c_{x,w} q^{l(w)} [x].
GroupAlgElement sat_transform(const RootDatum& rd, const BernElement& f);
GroupAlgElement sat_transform(const RootDatum& rd, const FracBernElement& f);

// Satake transform of the K-double-coset indicator at dominant lambda
GroupAlgElement satake_spherical(const HeckeContext& ctx, const LatticeElt& lambda);

// z * 1_K = (1/[K:I]) z e_K, with fraction scalars
FracBernElement center_map_Z(const HeckeContext& ctx, const BernElement& z);

// coefficients constant along every W-orbit meeting the support
bool w_invariant(const RootDatum& rd, const GroupAlgElement& g);

}  // namespace hecke
