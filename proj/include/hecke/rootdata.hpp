#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/laurent.hpp"

namespace hecke {

using i64 = std::int64_t;
using IntVec = std::vector<i64>;

// Point of the cocharacter lattice X = Z^d.
struct LatticeElt {
    IntVec c;

    LatticeElt() = default;
    explicit LatticeElt(IntVec coords) : c(std::move(coords)) {}
    static LatticeElt zero(int d) { return LatticeElt(IntVec(d, 0)); }

    int dim() const { return static_cast<int>(c.size()); }
    bool is_zero() const {
        for (i64 v : c)
            if (v != 0) return false;
        return true;
    }

    friend LatticeElt operator+(const LatticeElt& a, const LatticeElt& b) {
        LatticeElt r = a;
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend LatticeElt operator-(const LatticeElt& a, const LatticeElt& b) {
        LatticeElt r = a;
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    LatticeElt operator-() const {
        LatticeElt r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }
    friend LatticeElt operator*(i64 k, const LatticeElt& a) {
        LatticeElt r = a;
        for (auto& v : r.c) v *= k;
        return r;
    }

    auto operator<=>(const LatticeElt&) const = default;

    std::string to_string() const;
};

// Finite Weyl group element as its integer action matrix on X (row-major).
struct WeylElt {
    int d = 0;
    IntVec m;  // d*d entries

    WeylElt() = default;
    static WeylElt identity(int d) {
        WeylElt w;
        w.d = d;
        w.m.assign(static_cast<size_t>(d) * d, 0);
        for (int i = 0; i < d; ++i) w.m[static_cast<size_t>(i) * d + i] = 1;
        return w;
    }

    i64 at(int i, int j) const { return m[static_cast<size_t>(i) * d + j]; }
    i64& at(int i, int j) { return m[static_cast<size_t>(i) * d + j]; }

    bool is_identity() const { return *this == identity(d); }

    LatticeElt apply(const LatticeElt& x) const {
        LatticeElt r = LatticeElt::zero(d);
        for (int i = 0; i < d; ++i) {
            i64 acc = 0;
            for (int j = 0; j < d; ++j) acc += at(i, j) * x.c[j];
            r.c[i] = acc;
        }
        return r;
    }

    friend WeylElt operator*(const WeylElt& a, const WeylElt& b) {
        WeylElt r;
        r.d = a.d;
        r.m.assign(a.m.size(), 0);
        for (int i = 0; i < a.d; ++i)
            for (int k = 0; k < a.d; ++k) {
                i64 aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < a.d; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

    auto operator<=>(const WeylElt&) const = default;
};

enum class LatticeKind { sc, ad, gl, custom };

std::string to_string(LatticeKind k);

struct CustomRootData {
    std::vector<IntVec> simple_roots;    // covectors on Z^d
    std::vector<IntVec> simple_coroots;  // vectors in Z^d
};

// Finite root datum: simple roots as integer covectors on X, simple coroots
// as integer vectors, the full positive system, rho, and the Weyl group with
// precomputed lex-least reduced words.
class RootDatum {
  public:
    static RootDatum build(const std::string& cartan_type, LatticeKind lattice,
                           const std::optional<CustomRootData>& custom = std::nullopt);

    const std::string& cartan_type() const { return type_; }
    LatticeKind lattice() const { return lattice_; }
    int rank() const { return rank_; }
    int dim() const { return dim_; }

    const std::vector<IntVec>& simple_roots() const { return simple_roots_; }
    const std::vector<IntVec>& simple_coroots() const { return simple_coroots_; }
    int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }
    const IntVec& positive_root(int t) const { return pos_roots_[t]; }
    const IntVec& positive_coroot(int t) const { return pos_coroots_[t]; }
    int highest_root_index() const { return highest_; }
    const IntVec& rho() const { return rho_; }
    LatticeElt coroot_elt(int t) const { return LatticeElt(pos_coroots_[t]); }
    LatticeElt simple_coroot_elt(int i) const { return LatticeElt(simple_coroots_[i]); }
    // sum of all positive coroots; strictly dominant (alpha_i of it is 2)
    const LatticeElt& regularizer() const { return d0_; }

    static i64 pairing(const IntVec& covec, const LatticeElt& x) {
        i64 acc = 0;
        for (size_t i = 0; i < covec.size(); ++i) acc += covec[i] * x.c[i];
        return acc;
    }
    i64 root_pairing(int t, const LatticeElt& x) const { return pairing(pos_roots_[t], x); }
    i64 simple_pairing(int i, const LatticeElt& x) const { return pairing(simple_roots_[i], x); }
    i64 rho_pairing(const LatticeElt& x) const { return pairing(rho_, x); }

    const WeylElt& simple_reflection(int i) const { return simple_refl_[i]; }
    // reflection in the positive root with index t
    WeylElt reflection(int t) const;

    const std::vector<WeylElt>& weyl_elements() const { return weyl_; }
    int weyl_order() const { return static_cast<int>(weyl_.size()); }

    int finite_length(const WeylElt& w) const;
    const std::vector<int>& reduced_word(const WeylElt& w) const;  // lex-least
    WeylElt weyl_inverse(const WeylElt& w) const;
    WeylElt word_to_weyl(const std::vector<int>& word) const;  // 1-based letters

    // sign of w(coroot_t): (index u, +1) if w(coroot_t) = coroot_u,
    // (u, -1) if it equals -coroot_u
    std::pair<int, int> coroot_image(const WeylElt& w, int t) const;

    bool is_dominant(const LatticeElt& x) const;
    // x = y - z with both dominant; z = m * regularizer, m >= 0 minimal
    std::pair<LatticeElt, LatticeElt> decompose_dominant(const LatticeElt& x) const;

    LatticeElt zero() const { return LatticeElt::zero(dim_); }

  private:
    void generate_roots();
    void enumerate_weyl();
    void validate_cartan() const;

    std::string type_;
    LatticeKind lattice_ = LatticeKind::sc;
    int rank_ = 0;
    int dim_ = 0;
    std::vector<IntVec> simple_roots_;
    std::vector<IntVec> simple_coroots_;
    std::vector<IntVec> pos_roots_;
    std::vector<IntVec> pos_coroots_;
    std::vector<IntVec> pos_root_coeffs_;  // in the simple-root basis
    int highest_ = -1;
    IntVec rho_;
    LatticeElt d0_;
    std::vector<WeylElt> simple_refl_;
    std::vector<WeylElt> weyl_;
    std::map<WeylElt, std::vector<int>> words_;
    std::map<IntVec, std::pair<int, int>> coroot_index_;  // vec -> (index, sign)
};

// Parses "A1".."A9", "B2", "C2", "G2" into (family, rank); throws InvalidCartanError.
std::pair<char, int> parse_cartan_label(const std::string& label);

}  // namespace hecke
