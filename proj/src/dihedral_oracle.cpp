#include "hecke/dihedral_oracle.hpp"

namespace hecke::dihedral {

std::vector<Word> all_words_up_to(int max_len) {
    std::vector<Word> out{Word{}};
    for (int start : {0, 1}) {
        Word w;
        for (int k = 0; k < max_len; ++k) {
            w.push_back((start + k) % 2);
            out.push_back(w);
        }
    }
    return out;
}

namespace {

// f * T_letter:  append when the word grows, else q T_{drop} + (q-1) T_w
OracleElement mul_letter(const OracleElement& f, int letter) {
    OracleElement r;
    for (const auto& [w, c] : f.terms()) {
        if (w.empty() || w.back() != letter) {
            Word grown = w;
            grown.push_back(letter);
            r.add_term(grown, c);
        } else {
            Word dropped(w.begin(), w.end() - 1);
            r.add_term(dropped, c * LaurentScalar::q_power(1));
            r.add_term(w, c * q_minus_one());
        }
    }
    return r;
}

// f * T_letter^{-1}
OracleElement mul_letter_inv(const OracleElement& f, int letter) {
    LaurentScalar qinv = LaurentScalar::q_power(-1);
    LaurentScalar qinv_minus_one = qinv - LaurentScalar::one();
    OracleElement r;
    for (const auto& [w, c] : f.terms()) {
        if (!w.empty() && w.back() == letter) {
            Word dropped(w.begin(), w.end() - 1);
            r.add_term(dropped, c);
        } else {
            Word grown = w;
            grown.push_back(letter);
            r.add_term(grown, c * qinv);
            r.add_term(w, c * qinv_minus_one);
        }
    }
    return r;
}

}  // namespace

OracleElement mul(const OracleElement& f, const OracleElement& g) {
    OracleElement result;
    for (const auto& [v, c] : g.terms()) {
        OracleElement acc = f.scaled(c);
        for (int letter : v) acc = mul_letter(acc, letter);
        result += acc;
    }
    return result;
}

OracleElement inverse_basis(const Word& w) {
    OracleElement r = OracleElement::basis({});
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = mul_letter_inv(r, *it);
    return r;
}

}  // namespace hecke::dihedral
