#pragma once

#include <map>

#include "hecke/extweyl.hpp"
#include "hecke/laurent.hpp"

namespace hecke {

// Index of the Bernstein basis element theta_x T_w.
struct BernKey {
    LatticeElt x;
    WeylElt w;

    auto operator<=>(const BernKey&) const = default;
};

// Sparse element of H_I over the Bernstein basis; no zero coefficients.
class BernElement {
  public:
    using Terms = std::map<BernKey, LaurentScalar>;

    BernElement() = default;
    static BernElement basis(const BernKey& key) {
        BernElement f;
        f.terms_[key] = LaurentScalar::one();
        return f;
    }
    static BernElement theta(const LatticeElt& x) {
        return basis({x, WeylElt::identity(static_cast<int>(x.c.size()))});
    }
    static BernElement unit(const RootDatum& rd) {
        return basis({rd.zero(), WeylElt::identity(rd.dim())});
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    LaurentScalar coeff(const BernKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? LaurentScalar() : it->second;
    }

    void add_term(const BernKey& key, const LaurentScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BernElement& operator+=(const BernElement& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    BernElement& operator-=(const BernElement& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend BernElement operator+(BernElement a, const BernElement& b) { return a += b; }
    friend BernElement operator-(BernElement a, const BernElement& b) { return a -= b; }

    BernElement scaled(const LaurentScalar& s) const {
        BernElement r;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
        return r;
    }
    // left multiplication by theta_d: shifts every translation index
    BernElement theta_shifted(const LatticeElt& d) const {
        BernElement r;
        for (const auto& [k, c] : terms_) r.terms_[{k.x + d, k.w}] = c;
        return r;
    }

    bool operator==(const BernElement& o) const { return terms_ == o.terms_; }

  private:
    Terms terms_;
};

}  // namespace hecke
