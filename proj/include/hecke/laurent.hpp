#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>

#include "hecke/errors.hpp"

namespace hecke {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Element of Z[v, v^-1].  v is a formal square root of q: q = v^2, and
// q^{k/2} is spelled v^k.  Stored sparsely, exponent -> nonzero coefficient,
// so equal values always have identical term maps.
class LaurentScalar {
  public:
    LaurentScalar() = default;
    LaurentScalar(long n) {
        if (n != 0) terms_[0] = n;
    }
    LaurentScalar(Int n) {
        if (n != 0) terms_[0] = std::move(n);
    }

    static LaurentScalar monomial(Int coeff, int exp) {
        LaurentScalar s;
        if (coeff != 0) s.terms_[exp] = std::move(coeff);
        return s;
    }
    static LaurentScalar v_power(int k) { return monomial(1, k); }
    // q^k as v^{2k}
    static LaurentScalar q_power(int k) { return monomial(1, 2 * k); }
    static LaurentScalar one() { return LaurentScalar(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 &&
               terms_.begin()->second == 1;
    }
    // Units of Z[v^{±1}] are exactly ±v^k.
    bool is_unit() const {
        if (terms_.size() != 1) return false;
        const Int& c = terms_.begin()->second;
        return c == 1 || c == -1;
    }
    LaurentScalar unit_inverse() const {
        if (!is_unit()) throw NonUnitError("unit_inverse: not a unit (" + to_string() + ")");
        return monomial(terms_.begin()->second, -terms_.begin()->first);
    }

    const std::map<int, Int>& terms() const { return terms_; }
    int min_exponent() const { return terms_.begin()->first; }    // pre: nonzero
    int max_exponent() const { return terms_.rbegin()->first; }   // pre: nonzero
    Int leading_coeff() const { return terms_.rbegin()->second; } // pre: nonzero

    // gcd of coefficient magnitudes; 0 for the zero element
    Int content() const {
        Int g = 0;
        for (const auto& [e, c] : terms_) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
        return g;
    }

    LaurentScalar& operator+=(const LaurentScalar& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentScalar& operator-=(const LaurentScalar& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
    LaurentScalar operator-() const {
        LaurentScalar r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentScalar& operator*=(const LaurentScalar& o) { return *this = *this * o; }

    // multiply by an integer scalar
    LaurentScalar scaled(const Int& k) const {
        LaurentScalar r;
        if (k == 0) return r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c * k;
        return r;
    }
    // exact division by an integer scalar; pre: divides the content
    LaurentScalar divided_by(const Int& k) const {
        LaurentScalar r;
        for (const auto& [e, c] : terms_) {
            Int q = c / k;
            if (q * k != c) throw Error("divided_by: non-exact integer division");
            r.terms_[e] = q;
        }
        return r;
    }
    // multiply by v^k
    LaurentScalar shifted(int k) const {
        LaurentScalar r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    bool operator==(const LaurentScalar& o) const { return terms_ == o.terms_; }
    bool operator<(const LaurentScalar& o) const { return terms_ < o.terms_; }

    // Exact value at v = v0 (v0 != 0 when negative exponents are present).
    Rat evaluate_at_v(const Rat& v0) const;
    // Exact value at q = q0.  All exponents must be even (pure q-powers);
    // throws NonUnitError otherwise.
    Rat evaluate_at_q(const Rat& q0) const;

    // e.g. "v^4 - 2v^2 + 1", "0"
    std::string to_string() const;

    void add_term(int exp, const Int& coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

  private:
    std::map<int, Int> terms_;
};

inline LaurentScalar q_minus_one() {
    LaurentScalar s = LaurentScalar::q_power(1);
    s.add_term(0, -1);
    return s;
}

// One fraction of Laurent scalars.  Kept reduced only up to common monomial
// factors and integer content, with the denominator's leading coefficient
// positive; equality is cross-multiplication, so unreduced polynomial gcds
// are harmless.
class ScalarFraction {
  public:
    ScalarFraction() : num_(), den_(LaurentScalar::one()) {}
    ScalarFraction(LaurentScalar n) : num_(std::move(n)), den_(LaurentScalar::one()) {}
    ScalarFraction(long n) : ScalarFraction(LaurentScalar(n)) {}
    ScalarFraction(LaurentScalar n, LaurentScalar d) : num_(std::move(n)), den_(std::move(d)) {
        normalize();
    }

    const LaurentScalar& num() const { return num_; }
    const LaurentScalar& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    ScalarFraction reciprocal() const { return ScalarFraction(den_, num_); }

    friend ScalarFraction operator+(const ScalarFraction& a, const ScalarFraction& b) {
        return ScalarFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ScalarFraction operator-(const ScalarFraction& a, const ScalarFraction& b) {
        return ScalarFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ScalarFraction operator*(const ScalarFraction& a, const ScalarFraction& b) {
        return ScalarFraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend ScalarFraction operator/(const ScalarFraction& a, const ScalarFraction& b) {
        if (b.is_zero()) throw DivisionByZeroError("fraction division by zero");
        return ScalarFraction(a.num_ * b.den_, a.den_ * b.num_);
    }
    ScalarFraction operator-() const { return ScalarFraction(-num_, den_); }
    ScalarFraction& operator+=(const ScalarFraction& o) { return *this = *this + o; }
    ScalarFraction& operator-=(const ScalarFraction& o) { return *this = *this - o; }
    ScalarFraction& operator*=(const ScalarFraction& o) { return *this = *this * o; }

    bool operator==(const ScalarFraction& o) const {
        return num_ * o.den_ == o.num_ * den_;
    }
    bool operator!=(const ScalarFraction& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    void normalize();

    LaurentScalar num_, den_;
};

}  // namespace hecke
