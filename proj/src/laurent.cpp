#include "hecke/laurent.hpp"

#include <sstream>

namespace hecke {

Rat LaurentScalar::evaluate_at_v(const Rat& v0) const {
    if (v0 == 0) {
        if (!terms_.empty() && min_exponent() < 0)
            throw DivisionByZeroError("evaluate_at_v: negative exponent at v = 0");
        auto it = terms_.find(0);
        return it == terms_.end() ? Rat(0) : Rat(it->second);
    }
    Rat acc = 0;
    Rat inv = Rat(1) / v0;
    for (const auto& [e, c] : terms_) {
        Rat p = 1;
        const Rat& base = e >= 0 ? v0 : inv;
        for (int k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
        acc += Rat(c) * p;
    }
    return acc;
}

Rat LaurentScalar::evaluate_at_q(const Rat& q0) const {
    if (q0 == 0) throw DivisionByZeroError("evaluate_at_q: q = 0");
    Rat acc = 0;
    Rat inv = Rat(1) / q0;
    for (const auto& [e, c] : terms_) {
        if (e % 2 != 0)
            throw NonUnitError("evaluate_at_q: odd power of v, value depends on a choice of q^{1/2}");
        int h = e / 2;
        Rat p = 1;
        const Rat& base = h >= 0 ? q0 : inv;
        for (int k = 0; k < (h >= 0 ? h : -h); ++k) p *= base;
        acc += Rat(c) * p;
    }
    return acc;
}

std::string LaurentScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest exponent first reads like a polynomial
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

void ScalarFraction::normalize() {
    if (den_.is_zero()) throw DivisionByZeroError("fraction with zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentScalar::one();
        return;
    }
    int shift = std::min(num_.min_exponent(), den_.min_exponent());
    if (shift != 0) {
        num_ = num_.shifted(-shift);
        den_ = den_.shifted(-shift);
    }
    Int g = boost::multiprecision::gcd(num_.content(), den_.content());
    if (g > 1) {
        num_ = num_.divided_by(g);
        den_ = den_.divided_by(g);
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

std::string ScalarFraction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace hecke
