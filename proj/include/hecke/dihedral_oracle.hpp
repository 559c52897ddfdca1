#pragma once

#include <map>
#include <vector>

#include "hecke/laurent.hpp"

// Independent rank-1 reference implementation: the Hecke algebra of the
// infinite dihedral group on generators 0 and 1, with basis indexed by
// alternating words.  Deliberately knows nothing about root data, lattices
// or the generic engine; products follow the bare T-basis rules.
namespace hecke::dihedral {

using Word = std::vector<int>;  // strictly alternating letters in {0,1}

inline bool is_reduced(const Word& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) return false;
    return true;
}

// all reduced words of length <= max_len (identity first)
std::vector<Word> all_words_up_to(int max_len);

class OracleElement {
  public:
    using Terms = std::map<Word, LaurentScalar>;

    OracleElement() = default;
    static OracleElement basis(const Word& w) {
        OracleElement f;
        f.terms_[w] = LaurentScalar::one();
        return f;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const LaurentScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    OracleElement& operator+=(const OracleElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    OracleElement& operator-=(const OracleElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend OracleElement operator+(OracleElement a, const OracleElement& b) { return a += b; }
    friend OracleElement operator-(OracleElement a, const OracleElement& b) { return a -= b; }
    OracleElement scaled(const LaurentScalar& s) const {
        OracleElement r;
        if (s.is_zero()) return r;
        for (const auto& [w, c] : terms_) r.terms_[w] = c * s;
        return r;
    }
    bool operator==(const OracleElement& o) const { return terms_ == o.terms_; }

  private:
    Terms terms_;
};

OracleElement mul(const OracleElement& f, const OracleElement& g);
OracleElement inverse_basis(const Word& w);

}  // namespace hecke::dihedral
