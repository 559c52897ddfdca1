#include "hecke/checks.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "hecke/dihedral_oracle.hpp"
#include "hecke/json_io.hpp"

namespace hecke::checks {

bool all_pass(const List& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

std::vector<LatticeElt> box_points(const RootDatum& rd, int radius) {
    std::vector<LatticeElt> out;
    LatticeElt x = rd.zero();
    for (auto& v : x.c) v = -radius;
    while (true) {
        out.push_back(x);
        int j = 0;
        while (j < rd.dim() && x.c[j] == radius) {
            x.c[j] = -radius;
            ++j;
        }
        if (j == rd.dim()) break;
        ++x.c[j];
    }
    return out;
}

std::vector<LatticeElt> dominant_box_points(const RootDatum& rd, int radius) {
    std::vector<LatticeElt> out;
    for (auto& x : box_points(rd, radius)) {
        bool in_range = std::all_of(x.c.begin(), x.c.end(), [](i64 v) { return v >= 0; });
        if (in_range && rd.is_dominant(x)) out.push_back(x);
    }
    return out;
}

namespace {

CheckResult ok(std::string name) { return {std::move(name), true, ""}; }
CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

std::string describe_point(const LatticeElt& x) { return "x=" + x.to_string(); }

LaurentScalar random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 2), expd(-3, 3), coefd(-5, 5);
    LaurentScalar s;
    do {
        int n = nterms(rng);
        for (int k = 0; k < n; ++k) {
            int c = coefd(rng);
            if (c != 0) s.add_term(expd(rng), c);
        }
    } while (s.is_zero());
    return s;
}

LatticeElt random_box_point(const RootDatum& rd, int radius, std::mt19937& rng) {
    std::uniform_int_distribution<i64> d(-radius, radius);
    LatticeElt x = rd.zero();
    for (auto& v : x.c) v = d(rng);
    return x;
}

const WeylElt& random_weyl(const RootDatum& rd, std::mt19937& rng) {
    std::uniform_int_distribution<size_t> d(0, rd.weyl_elements().size() - 1);
    return rd.weyl_elements()[d(rng)];
}

BernElement random_bern(const RootDatum& rd, int radius, int terms, bool force_moving_w,
                        std::mt19937& rng) {
    BernElement f;
    std::uniform_int_distribution<int> nterms(1, terms);
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        const WeylElt* w = &random_weyl(rd, rng);
        if (force_moving_w && k == 0)
            while (w->is_identity()) w = &random_weyl(rd, rng);
        f.add_term({random_box_point(rd, radius, rng), *w}, random_laurent(rng));
    }
    if (force_moving_w) {
        bool has = false;
        for (const auto& [key, c] : f.terms()) has = has || !key.w.is_identity();
        if (!has)
            f.add_term({random_box_point(rd, radius, rng), rd.simple_reflection(0)},
                       random_laurent(rng));
    }
    return f;
}

ImElement random_im(const RootDatum& rd, int radius, int terms, std::mt19937& rng) {
    ImElement f;
    std::uniform_int_distribution<int> nterms(1, terms);
    int n = nterms(rng);
    for (int k = 0; k < n; ++k)
        f.add_term(ExtAffElt(random_box_point(rd, radius, rng), random_weyl(rd, rng)),
                   random_laurent(rng));
    return f;
}

ImElement im_Ts(const RootDatum& rd, int i) {
    return ImElement::basis({rd.zero(), rd.simple_reflection(i - 1)});
}

BernElement bern_Ts(const RootDatum& rd, int i) {
    return BernElement::basis({rd.zero(), rd.simple_reflection(i - 1)});
}

}  // namespace

// ---- length layer ----------------------------------------------------

CheckResult check_dominant_length(const HeckeContext& ctx, int radius) {
    const RootDatum& rd = ctx.rd();
    for (const auto& x : dominant_box_points(rd, radius)) {
        i64 len = ext_length(rd, ExtAffElt::translation(x));
        if (len != rd.rho_pairing(x))
            return fail("length.dominant", describe_point(x) + " length " + std::to_string(len) +
                                                " != rho(x) " + std::to_string(rd.rho_pairing(x)));
    }
    return ok("length.dominant");
}

CheckResult check_word_lengths(const HeckeContext& ctx, int radius) {
    const RootDatum& rd = ctx.rd();
    for (const auto& x : box_points(rd, radius))
        for (const auto& w : rd.weyl_elements()) {
            ExtAffElt a{x, w};
            ReducedWord rw = ext_reduced_word(rd, a);
            if (static_cast<i64>(rw.letters.size()) != ext_length(rd, a))
                return fail("length.words", describe_point(x) + " word length mismatch");
            if (ext_length(rd, rw.omega) != 0)
                return fail("length.words", describe_point(x) + " omega has nonzero length");
            if (assemble_word(rd, rw) != a)
                return fail("length.words", describe_point(x) + " word does not reconstruct");
        }
    return ok("length.words");
}

CheckResult check_descents(const HeckeContext& ctx, int radius) {
    const RootDatum& rd = ctx.rd();
    for (const auto& x : box_points(rd, radius))
        for (const auto& w : rd.weyl_elements()) {
            ExtAffElt a{x, w};
            i64 len = ext_length(rd, a);
            for (int i = 0; i <= rd.rank(); ++i) {
                i64 nlen = ext_length(rd, ext_mul(affine_simple(rd, i), a));
                if (nlen != len + 1 && nlen != len - 1)
                    return fail("length.descents",
                                describe_point(x) + " i=" + std::to_string(i) + " levels " +
                                    std::to_string(len) + " -> " + std::to_string(nlen));
            }
        }
    return ok("length.descents");
}

CheckResult check_length_zero_subgroup(const HeckeContext& ctx, int radius) {
    const RootDatum& rd = ctx.rd();
    std::vector<ExtAffElt> omegas;
    for (const auto& x : box_points(rd, radius))
        for (const auto& w : rd.weyl_elements()) {
            ExtAffElt a{x, w};
            if (ext_length(rd, a) == 0) omegas.push_back(a);
        }
    for (const auto& a : omegas) {
        if (ext_length(rd, ext_inverse(rd, a)) != 0)
            return fail("length.omega", "inverse of a length-zero element has length > 0");
        for (const auto& b : omegas)
            if (ext_length(rd, ext_mul(a, b)) != 0)
                return fail("length.omega", "product of length-zero elements has length > 0");
    }
    // invariance of length under omega on both sides
    for (const auto& x : box_points(rd, std::min(radius, 2)))
        for (const auto& w : rd.weyl_elements()) {
            ExtAffElt a{x, w};
            i64 len = ext_length(rd, a);
            for (const auto& om : omegas)
                if (ext_length(rd, ext_mul(a, om)) != len ||
                    ext_length(rd, ext_mul(om, a)) != len)
                    return fail("length.omega", describe_point(x) + " omega shifts the length");
        }
    return ok("length.omega");
}

CheckResult check_dominant_additivity(const HeckeContext& ctx, int radius) {
    const RootDatum& rd = ctx.rd();
    auto dom = dominant_box_points(rd, radius);
    for (const auto& x : dom)
        for (const auto& y : dom) {
            i64 lx = ext_length(rd, ExtAffElt::translation(x));
            i64 ly = ext_length(rd, ExtAffElt::translation(y));
            i64 lxy = ext_length(rd, ExtAffElt::translation(x + y));
            if (lxy != lx + ly)
                return fail("length.additive", describe_point(x) + " + " + describe_point(y));
        }
    return ok("length.additive");
}

// ---- IM model --------------------------------------------------------

CheckResult check_quadratic_rule(const HeckeContext& ctx) {
    const RootDatum& rd = ctx.rd();
    for (int i = 1; i <= rd.rank(); ++i) {
        ImElement ts = im_Ts(rd, i);
        ImElement expected = ts.scaled(q_minus_one()) +
                             ImElement::unit(rd).scaled(LaurentScalar::q_power(1));
        ImElement got = im_mul(ctx, ts, ts);
        if (!(got == expected))
            return fail("im.quadratic", "T_s" + std::to_string(i) + "^2 = " +
                                            im_to_json(rd, got).dump() + ", expected " +
                                            im_to_json(rd, expected).dump());
    }
    return ok("im.quadratic");
}

CheckResult check_dominant_products(const HeckeContext& ctx, int radius) {
    const RootDatum& rd = ctx.rd();
    auto dom = dominant_box_points(rd, radius);
    for (const auto& x : dom)
        for (const auto& y : dom) {
            ImElement lhs = im_mul(ctx, ImElement::basis(ExtAffElt::translation(x)),
                                   ImElement::basis(ExtAffElt::translation(y)));
            if (!(lhs == ImElement::basis(ExtAffElt::translation(x + y))))
                return fail("im.translations",
                            "T_x T_y != T_{x+y} at " + describe_point(x) + ", " + describe_point(y));
        }
    return ok("im.translations");
}

CheckResult check_additive_collapse_iff(const HeckeContext& ctx, int radius) {
    const RootDatum& rd = ctx.rd();
    std::vector<ExtAffElt> elts;
    for (const auto& x : box_points(rd, radius))
        for (const auto& w : rd.weyl_elements()) elts.push_back({x, w});
    for (const auto& a : elts)
        for (const auto& b : elts) {
            ExtAffElt ab = ext_mul(a, b);
            bool additive = ext_length(rd, a) + ext_length(rd, b) == ext_length(rd, ab);
            ImElement prod = im_mul(ctx, ImElement::basis(a), ImElement::basis(b));
            bool collapsed = prod == ImElement::basis(ab);
            if (additive != collapsed)
                return fail("im.collapse_iff",
                            "additivity " + std::to_string(additive) + " but product " +
                                im_to_json(rd, prod).dump());
        }
    return ok("im.collapse_iff");
}

CheckResult check_basis_inverses(const HeckeContext& ctx, int radius) {
    const RootDatum& rd = ctx.rd();
    ImElement unit = ImElement::unit(rd);
    for (const auto& x : box_points(rd, radius))
        for (const auto& w : rd.weyl_elements()) {
            ExtAffElt a{x, w};
            ImElement inv = im_inverse_basis(ctx, a);
            if (!(im_mul(ctx, ImElement::basis(a), inv) == unit) ||
                !(im_mul(ctx, inv, ImElement::basis(a)) == unit))
                return fail("im.inverses", describe_point(x) + ": T a T_a^{-1} != T_1");
        }
    return ok("im.inverses");
}

CheckResult check_theta_welldefined(const HeckeContext& ctx, int radius, int samples,
                                    unsigned seed) {
    const RootDatum& rd = ctx.rd();
    std::mt19937 rng(seed);
    for (int k = 0; k < samples; ++k) {
        LatticeElt x = random_box_point(rd, radius, rng);
        auto [y, z] = rd.decompose_dominant(x);
        ImElement base = theta_im_via(ctx, y, z);
        for (int shift = 1; shift <= 2; ++shift) {
            LatticeElt dy = y + shift * rd.regularizer();
            LatticeElt dz = z + shift * rd.regularizer();
            if (!(theta_im_via(ctx, dy, dz) == base))
                return fail("im.theta_welldefined",
                            describe_point(x) + " differs across decompositions");
        }
    }
    return ok("im.theta_welldefined");
}

CheckResult check_theta_multiplicative(const HeckeContext& ctx, int radius) {
    auto pts = box_points(ctx.rd(), radius);
    for (const auto& x : pts)
        for (const auto& y : pts) {
            ImElement lhs = im_mul(ctx, theta_im(ctx, x), theta_im(ctx, y));
            if (!(lhs == theta_im(ctx, x + y)))
                return fail("im.theta_multiplicative",
                            describe_point(x) + " * " + describe_point(y));
        }
    return ok("im.theta_multiplicative");
}

CheckResult check_im_associativity(const HeckeContext& ctx, int triples, int max_len,
                                   unsigned seed) {
    const RootDatum& rd = ctx.rd();
    std::mt19937 rng(seed);
    std::vector<ExtAffElt> pool;
    for (const auto& x : box_points(rd, 2))
        for (const auto& w : rd.weyl_elements()) {
            ExtAffElt a{x, w};
            if (ext_length(rd, a) <= max_len) pool.push_back(a);
        }
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int k = 0; k < triples; ++k) {
        ImElement f = ImElement::basis(pool[pick(rng)]);
        ImElement g = ImElement::basis(pool[pick(rng)]);
        ImElement h = ImElement::basis(pool[pick(rng)]);
        if (!(im_mul(ctx, im_mul(ctx, f, g), h) == im_mul(ctx, f, im_mul(ctx, g, h))))
            return fail("im.associativity", "triple #" + std::to_string(k));
    }
    return ok("im.associativity");
}

CheckResult check_dihedral_oracle(const HeckeContext& ctx, int max_len) {
    const RootDatum& rd = ctx.rd();
    if (rd.cartan_type() != "A1" || rd.lattice() != LatticeKind::sc)
        return fail("im.oracle", "rank-1 oracle only applies to A1 sc");
    auto to_engine = [&](const dihedral::Word& w) {
        ExtAffElt a = ExtAffElt::identity(rd);
        for (int letter : w) a = ext_mul(a, affine_simple(rd, letter));
        return a;
    };
    auto words = dihedral::all_words_up_to(max_len);
    for (const auto& w : words)
        if (ext_length(rd, to_engine(w)) != static_cast<i64>(w.size()))
            return fail("im.oracle", "length mismatch under the dihedral embedding");
    for (const auto& u : words)
        for (const auto& v : words) {
            dihedral::OracleElement prod =
                dihedral::mul(dihedral::OracleElement::basis(u), dihedral::OracleElement::basis(v));
            ImElement expected;
            for (const auto& [w, c] : prod.terms()) expected.add_term(to_engine(w), c);
            ImElement got =
                im_mul(ctx, ImElement::basis(to_engine(u)), ImElement::basis(to_engine(v)));
            if (!(got == expected))
                return fail("im.oracle", "engine disagrees with the dihedral oracle: got " +
                                             im_to_json(rd, got).dump() + ", oracle " +
                                             im_to_json(rd, expected).dump());
        }
    return ok("im.oracle");
}

// ---- Bernstein model -------------------------------------------------

CheckResult check_geometric_quotient(const HeckeContext& ctx, int radius) {
    const RootDatum& rd = ctx.rd();
    for (const auto& x : box_points(rd, radius))
        for (int i = 1; i <= rd.rank(); ++i) {
            BernElement gq = geometric_quotient(rd, x, i);
            BernElement denom = BernElement::unit(rd) -
                                BernElement::theta(-rd.simple_coroot_elt(i - 1));
            BernElement target = BernElement::theta(x) -
                                 BernElement::theta(rd.simple_reflection(i - 1).apply(x));
            if (!(bern_mul(ctx, gq, denom) == target))
                return fail("bern.quotient", describe_point(x) + " i=" + std::to_string(i) +
                                                 ": multiply-back mismatch");
        }
    return ok("bern.quotient");
}

CheckResult check_cross_relation(const HeckeContext& ctx, int radius) {
    // Bernstein relation verified entirely inside the IM model
    const RootDatum& rd = ctx.rd();
    for (const auto& x : box_points(rd, radius))
        for (int i = 1; i <= rd.rank(); ++i) {
            ImElement ts = im_Ts(rd, i);
            LatticeElt sx = rd.simple_reflection(i - 1).apply(x);
            ImElement lhs =
                im_mul(ctx, ts, theta_im(ctx, x)) - im_mul(ctx, theta_im(ctx, sx), ts);
            ImElement rhs;
            BernElement gq = geometric_quotient(rd, x, i);
            for (const auto& [key, c] : gq.terms()) rhs += theta_im(ctx, key.x).scaled(c);
            rhs = rhs.scaled(q_minus_one());
            if (!(lhs == rhs))
                return fail("cross.relation",
                            describe_point(x) + " i=" + std::to_string(i) + ": lhs " +
                                im_to_json(rd, lhs).dump() + " rhs " + im_to_json(rd, rhs).dump());
        }
    return ok("cross.relation");
}

CheckResult check_cor2(const HeckeContext& ctx, int radius) {
    const RootDatum& rd = ctx.rd();
    for (const auto& x : box_points(rd, radius))
        for (int i = 1; i <= rd.rank(); ++i) {
            LatticeElt sx = rd.simple_reflection(i - 1).apply(x);
            // Bernstein model
            BernElement sum_b = BernElement::theta(x) + BernElement::theta(sx);
            BernElement tb = bern_Ts(rd, i);
            if (!(bern_mul(ctx, tb, sum_b) == bern_mul(ctx, sum_b, tb)))
                return fail("cross.cor2", describe_point(x) + " fails in the Bernstein model");
            // IM model
            ImElement sum_i = theta_im(ctx, x) + theta_im(ctx, sx);
            ImElement ti = im_Ts(rd, i);
            if (!(im_mul(ctx, ti, sum_i) == im_mul(ctx, sum_i, ti)))
                return fail("cross.cor2", describe_point(x) + " fails in the IM model");
        }
    return ok("cross.cor2");
}

CheckResult check_to_im_homomorphism(const HeckeContext& ctx, int pairs, unsigned seed) {
    const RootDatum& rd = ctx.rd();
    std::mt19937 rng(seed);
    for (int k = 0; k < pairs; ++k) {
        BernElement f = random_bern(rd, 2, 2, false, rng);
        BernElement g = random_bern(rd, 2, 2, false, rng);
        if (!(to_im(ctx, bern_mul(ctx, f, g)) == im_mul(ctx, to_im(ctx, f), to_im(ctx, g))))
            return fail("bern.to_im_hom", "pair #" + std::to_string(k) + ": f=" +
                                              bern_to_json(rd, f).dump() + " g=" +
                                              bern_to_json(rd, g).dump());
    }
    return ok("bern.to_im_hom");
}

CheckResult check_conversion_roundtrip(const HeckeContext& ctx, int radius, int random_ims,
                                       unsigned seed) {
    const RootDatum& rd = ctx.rd();
    for (const auto& x : box_points(rd, radius))
        for (const auto& w : rd.weyl_elements()) {
            BernElement b = BernElement::basis({x, w});
            if (!(from_im(ctx, to_im(ctx, b)) == b))
                return fail("bern.roundtrip", "from_im(to_im(.)) != id at theta_" +
                                                  x.to_string());
        }
    std::mt19937 rng(seed);
    for (int k = 0; k < random_ims; ++k) {
        ImElement g = random_im(rd, radius, 3, rng);
        if (!(to_im(ctx, from_im(ctx, g)) == g))
            return fail("bern.roundtrip", "to_im(from_im(.)) != id on " +
                                              im_to_json(rd, g).dump());
    }
    return ok("bern.roundtrip");
}

CheckResult check_basis_triangular(const HeckeContext& ctx, int radius) {
    // For dominant x the image of theta_x T_w is unitriangular over the
    // finite Bruhat direction: unit coefficient at t_x w, all other terms
    // t_x w' with l(w') < l(w) and the same translation part.
    const RootDatum& rd = ctx.rd();
    for (const auto& x : dominant_box_points(rd, radius))
        for (const auto& w : rd.weyl_elements()) {
            ExtAffElt top{x, w};
            ImElement img = to_im_basis(ctx, x, w);
            if (!img.coeff(top).is_unit())
                return fail("bern.triangular", "coefficient at t_x w is not a unit");
            for (const auto& [key, c] : img.terms()) {
                if (key == top) continue;
                if (key.x != x || rd.finite_length(key.w) >= rd.finite_length(w))
                    return fail("bern.triangular",
                                "support leaves the strict lower finite-Bruhat block at " +
                                    describe_point(x));
            }
        }
    return ok("bern.triangular");
}

namespace {

// incremental echelon rank over exact rationals, rows keyed by ExtAffElt
class RatEchelon {
  public:
    bool insert(std::map<ExtAffElt, Rat> row) {
        while (!row.empty()) {
            auto lead = row.rbegin()->first;
            auto piv = pivots_.find(lead);
            if (piv == pivots_.end()) {
                pivots_.emplace(lead, std::move(row));
                return true;
            }
            Rat factor = row.rbegin()->second / piv->second.rbegin()->second;
            for (const auto& [k, v] : piv->second) {
                auto it = row.find(k);
                Rat nv = (it == row.end() ? Rat(0) : it->second) - factor * v;
                if (nv == 0) {
                    if (it != row.end()) row.erase(it);
                } else {
                    row[k] = nv;
                }
            }
        }
        return false;
    }
    size_t rank() const { return pivots_.size(); }

  private:
    std::map<ExtAffElt, std::map<ExtAffElt, Rat>> pivots_;
};

}  // namespace

CheckResult check_basis_rank_at_q(const HeckeContext& ctx, int radius, const Rat& q0) {
    const RootDatum& rd = ctx.rd();
    std::vector<std::pair<i64, std::pair<LatticeElt, WeylElt>>> cols;
    for (const auto& x : box_points(rd, radius))
        for (const auto& w : rd.weyl_elements())
            cols.push_back({ctx.length(ExtAffElt{x, w}), {x, w}});
    // descending top-term length keeps the elimination pivot-friendly
    std::sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    RatEchelon ech;
    size_t n = 0;
    for (const auto& [len, key] : cols) {
        ImElement img = to_im_basis(ctx, key.first, key.second);
        // columns carry one global unit v^p; normalize parity before q-evaluation
        int parity = ((img.terms().begin()->second.min_exponent() % 2) + 2) % 2;
        std::map<ExtAffElt, Rat> row;
        for (const auto& [k, c] : img.terms()) row[k] = c.shifted(-parity).evaluate_at_q(q0);
        if (!ech.insert(std::move(row)))
            return fail("bern.rank_q", "dependent image at theta block, q0 = " +
                                           std::string(q0.str()));
        ++n;
    }
    if (ech.rank() != n) return fail("bern.rank_q", "rank deficit");
    return ok("bern.rank_q");
}

namespace {

class FracEchelon {
  public:
    bool insert(std::map<LatticeElt, ScalarFraction> row) {
        prune(row);
        while (!row.empty()) {
            auto lead = row.rbegin()->first;
            auto piv = pivots_.find(lead);
            if (piv == pivots_.end()) {
                pivots_.emplace(lead, std::move(row));
                return true;
            }
            ScalarFraction factor = row.rbegin()->second / piv->second.rbegin()->second;
            for (const auto& [k, v] : piv->second) {
                auto it = row.find(k);
                ScalarFraction nv =
                    (it == row.end() ? ScalarFraction() : it->second) - factor * v;
                if (nv.is_zero()) {
                    if (it != row.end()) row.erase(it);
                } else {
                    row[k] = nv;
                }
            }
            prune(row);
        }
        return false;
    }
    size_t rank() const { return pivots_.size(); }

  private:
    static void prune(std::map<LatticeElt, ScalarFraction>& row) {
        for (auto it = row.begin(); it != row.end();)
            it = it->second.is_zero() ? row.erase(it) : std::next(it);
    }
    std::map<LatticeElt, std::map<LatticeElt, ScalarFraction>> pivots_;
};

}  // namespace

// ---- Satake layer ----------------------------------------------------

CheckResult check_absorption(const HeckeContext& ctx) {
    const RootDatum& rd = ctx.rd();
    BernElement ek = e_K(rd);
    BernElement q_ek = ek.scaled(LaurentScalar::q_power(1));
    for (int i = 1; i <= rd.rank(); ++i) {
        BernElement ts = bern_Ts(rd, i);
        if (!(bern_mul(ctx, ts, ek) == q_ek) || !(bern_mul(ctx, ek, ts) == q_ek))
            return fail("satake.absorption", "T_s" + std::to_string(i) + " e_K != q e_K");
    }
    return ok("satake.absorption");
}

CheckResult check_ek_idempotent(const HeckeContext& ctx) {
    const RootDatum& rd = ctx.rd();
    BernElement ek = e_K(rd);
    if (!(bern_mul(ctx, ek, ek) == ek.scaled(poincare_polynomial(rd))))
        return fail("satake.ek", "e_K e_K != [K:I] e_K");
    return ok("satake.ek");
}

CheckResult check_theorem_a(const HeckeContext& ctx, int radius) {
    const RootDatum& rd = ctx.rd();
    BernElement ek = e_K(rd);
    ScalarFraction inv_wk(LaurentScalar::one(), poincare_polynomial(rd));
    for (const auto& x : box_points(rd, radius)) {
        BernElement prod = bern_mul(ctx, BernElement::theta(x), ek);
        GroupAlgElement img = sat_transform(rd, FracBernElement(prod, inv_wk));
        if (!img.equals(GroupAlgElement::basis(x)))
            return fail("satake.theorem_a", describe_point(x) + ": S((1/WK) theta_x e_K) != [x]");
    }
    return ok("satake.theorem_a");
}

CheckResult check_spherical_invariance(const HeckeContext& ctx,
                                       const std::vector<LatticeElt>& lambdas) {
    for (const auto& lam : lambdas) {
        GroupAlgElement s = satake_spherical(ctx, lam);
        if (s.is_zero()) return fail("satake.invariance", describe_point(lam) + ": empty image");
        if (!w_invariant(ctx.rd(), s))
            return fail("satake.invariance",
                        describe_point(lam) + ": " + ga_to_json(s).dump() + " not W-invariant");
    }
    return ok("satake.invariance");
}

CheckResult check_satake_homomorphism(const HeckeContext& ctx,
                                      const std::vector<LatticeElt>& lambdas) {
    for (const auto& lam : lambdas)
        for (const auto& mu : lambdas) {
            ImElement prod = im_mul(ctx, spherical_indicator(ctx, lam), spherical_indicator(ctx, mu));
            GroupAlgElement lhs = sat_transform(ctx.rd(), from_im(ctx, prod));
            GroupAlgElement rhs = ga_mul(satake_spherical(ctx, lam), satake_spherical(ctx, mu));
            if (!lhs.equals(rhs))
                return fail("satake.homomorphism",
                            describe_point(lam) + ", " + describe_point(mu) + ": S(c c') " +
                                ga_to_json(lhs).dump() + " != S(c) S(c') " + ga_to_json(rhs).dump());
        }
    return ok("satake.homomorphism");
}

// ---- center ----------------------------------------------------------

namespace {

// distinct W-orbits fully contained in the coordinate box
std::vector<LatticeElt> orbit_reps_in_box(const RootDatum& rd, int radius) {
    std::vector<LatticeElt> reps;
    std::set<LatticeElt> seen;
    for (const auto& x : box_points(rd, radius)) {
        if (seen.count(x)) continue;
        std::set<LatticeElt> orbit;
        for (const auto& w : rd.weyl_elements()) orbit.insert(w.apply(x));
        bool inside = std::all_of(orbit.begin(), orbit.end(), [&](const LatticeElt& y) {
            return std::all_of(y.c.begin(), y.c.end(),
                               [&](i64 v) { return v >= -radius && v <= radius; });
        });
        for (const auto& y : orbit) seen.insert(y);
        if (inside) reps.push_back(*orbit.begin());
    }
    return reps;
}

}  // namespace

CheckResult check_orbit_sums_central(const HeckeContext& ctx, int radius) {
    for (const auto& x : orbit_reps_in_box(ctx.rd(), radius)) {
        CentralityReport rep = is_central(ctx, orbit_sum(ctx.rd(), x));
        if (!rep.central)
            return fail("center.orbit_sums", describe_point(x) + ": commutator with " +
                                                 rep.generator + " is " +
                                                 bern_to_json(ctx.rd(), rep.commutator).dump());
    }
    return ok("center.orbit_sums");
}

CheckResult check_center_orbit_image(const HeckeContext& ctx, int radius) {
    const RootDatum& rd = ctx.rd();
    for (const auto& x : orbit_reps_in_box(rd, radius)) {
        GroupAlgElement img = sat_transform(rd, center_map_Z(ctx, orbit_sum(rd, x)));
        GroupAlgElement expected;
        for (const auto& w : rd.weyl_elements())
            expected.add_term(w.apply(x), ScalarFraction(LaurentScalar::one()));
        if (!img.equals(expected))
            return fail("center.sz_orbit", describe_point(x) + ": (S.Z)(orbit sum) = " +
                                               ga_to_json(img).dump());
    }
    return ok("center.sz_orbit");
}

CheckResult check_sz_injectivity(const HeckeContext& ctx, int radius) {
    const RootDatum& rd = ctx.rd();
    auto reps = orbit_reps_in_box(rd, radius);
    FracEchelon ech;
    for (const auto& x : reps) {
        GroupAlgElement img = sat_transform(rd, center_map_Z(ctx, orbit_sum(rd, x)));
        std::map<LatticeElt, ScalarFraction> row;
        for (const auto& [k, c] : img.terms()) row[k] = c;
        if (!ech.insert(std::move(row)))
            return fail("center.sz_injective", describe_point(x) + ": dependent image");
    }
    if (ech.rank() != reps.size()) return fail("center.sz_injective", "rank deficit");
    return ok("center.sz_injective");
}

CheckResult check_center_exhaustion(const HeckeContext& ctx, int radius, const Rat& q0) {
    const RootDatum& rd = ctx.rd();
    std::vector<BernKey> basis;
    for (const auto& x : box_points(rd, radius))
        for (const auto& w : rd.weyl_elements()) basis.push_back({x, w});

    std::vector<BernElement> gens;
    for (int i = 1; i <= rd.rank(); ++i) gens.push_back(bern_Ts(rd, i));
    for (int j = 0; j < rd.dim(); ++j) {
        LatticeElt e = rd.zero();
        e.c[j] = 1;
        gens.push_back(BernElement::theta(e));
    }

    // rows of the commutator map, indexed by (generator, output key)
    std::map<std::pair<size_t, BernKey>, std::map<size_t, Rat>> rows;
    for (size_t t = 0; t < basis.size(); ++t) {
        BernElement b = BernElement::basis(basis[t]);
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            BernElement comm = bern_mul(ctx, b, gens[gi]) - bern_mul(ctx, gens[gi], b);
            for (const auto& [key, c] : comm.terms())
                rows[{gi, key}][t] = c.evaluate_at_q(q0);
        }
    }

    // rank of the commutator map; its kernel is the boxed center
    std::map<size_t, std::map<size_t, Rat>> pivots;  // leading column -> row
    size_t rank = 0;
    for (auto& [rk, row0] : rows) {
        std::map<size_t, Rat> row = row0;
        while (!row.empty()) {
            size_t lead = row.begin()->first;
            auto piv = pivots.find(lead);
            if (piv == pivots.end()) {
                pivots.emplace(lead, std::move(row));
                ++rank;
                break;
            }
            Rat factor = row.begin()->second / piv->second.begin()->second;
            for (const auto& [k, v] : piv->second) {
                auto it = row.find(k);
                Rat nv = (it == row.end() ? Rat(0) : it->second) - factor * v;
                if (nv == 0) {
                    if (it != row.end()) row.erase(it);
                } else {
                    row[k] = nv;
                }
            }
        }
    }
    size_t nullity = basis.size() - rank;

    auto reps = orbit_reps_in_box(rd, radius);
    // orbit sums are exactly central and supported in the box; with matching
    // dimension they span the boxed kernel
    for (const auto& x : reps) {
        if (!is_central(ctx, orbit_sum(rd, x)).central)
            return fail("center.exhaustion", describe_point(x) + ": orbit sum not central");
    }
    if (nullity != reps.size())
        return fail("center.exhaustion",
                    "boxed central dimension " + std::to_string(nullity) + " != orbit sums " +
                        std::to_string(reps.size()) + " at q0 = " + std::string(q0.str()));
    return ok("center.exhaustion");
}

// ---- centralizer probe ------------------------------------------------

CheckResult check_probe_negative(const HeckeContext& ctx, int samples, unsigned seed) {
    const RootDatum& rd = ctx.rd();
    std::mt19937 rng(seed);
    for (int k = 0; k < samples; ++k) {
        BernElement f = random_bern(rd, 2, 3, true, rng);
        CentralizerProbe probe = centralizer_in_A_probe(ctx, f);
        if (probe.in_A)
            return fail("probe.negative", "element with moving w reported inside A: " +
                                              bern_to_json(rd, f).dump());
        // verify the witness commutator independently
        BernElement ty = BernElement::theta(*probe.witness_y);
        BernElement comm = bern_mul(ctx, ty, f) - bern_mul(ctx, f, ty);
        if (comm.is_zero() || !(comm == probe.commutator))
            return fail("probe.negative", "witness commutator fails verification");
    }
    return ok("probe.negative");
}

CheckResult check_probe_positive(const HeckeContext& ctx, int samples, unsigned seed) {
    const RootDatum& rd = ctx.rd();
    std::mt19937 rng(seed);
    WeylElt id = WeylElt::identity(rd.dim());
    for (int k = 0; k < samples; ++k) {
        BernElement f;
        std::uniform_int_distribution<int> nterms(1, 3);
        int n = nterms(rng);
        for (int t = 0; t < n; ++t)
            f.add_term({random_box_point(rd, 2, rng), id}, random_laurent(rng));
        if (!centralizer_in_A_probe(ctx, f).in_A)
            return fail("probe.positive", "element of A rejected: " + bern_to_json(rd, f).dump());
    }
    return ok("probe.positive");
}

// ---- CLI suites -------------------------------------------------------

namespace {

std::vector<LatticeElt> small_dominant_nonzero(const RootDatum& rd, int radius, size_t count) {
    std::vector<LatticeElt> out;
    for (const auto& x : dominant_box_points(rd, radius)) {
        if (x.is_zero()) continue;
        out.push_back(x);
        if (out.size() == count) break;
    }
    return out;
}

}  // namespace

List suite_lengths(const HeckeContext& ctx) {
    int radius = ctx.rd().dim() <= 2 ? 2 : 1;
    return {check_dominant_length(ctx, 3), check_word_lengths(ctx, radius),
            check_descents(ctx, radius), check_length_zero_subgroup(ctx, radius),
            check_dominant_additivity(ctx, 2)};
}

List suite_im(const HeckeContext& ctx) {
    const RootDatum& rd = ctx.rd();
    int theta_radius = rd.dim() == 1 ? 2 : 1;
    int welldef_radius = rd.dim() <= 2 ? 2 : 1;
    List out{check_quadratic_rule(ctx),
             check_dominant_products(ctx, 2),
             check_additive_collapse_iff(ctx, 1),
             check_basis_inverses(ctx, 1),
             check_theta_welldefined(ctx, welldef_radius, 20, 2024),
             check_theta_multiplicative(ctx, theta_radius),
             check_im_associativity(ctx, 200, 4, 99)};
    if (rd.cartan_type() == "A1" && rd.lattice() == LatticeKind::sc)
        out.push_back(check_dihedral_oracle(ctx, 5));
    return out;
}

List suite_bern(const HeckeContext& ctx) {
    int basis_radius = ctx.rd().dim() == 1 ? 2 : 1;
    int gq_radius = ctx.rd().dim() <= 2 ? 3 : 1;
    return {check_geometric_quotient(ctx, gq_radius),
            check_to_im_homomorphism(ctx, 100, 4242),
            check_conversion_roundtrip(ctx, basis_radius, 25, 31),
            check_basis_triangular(ctx, basis_radius),
            check_basis_rank_at_q(ctx, basis_radius, Rat(2)),
            check_basis_rank_at_q(ctx, basis_radius, Rat(3)),
            check_probe_negative(ctx, 10, 7),
            check_probe_positive(ctx, 10, 8)};
}

List suite_cross(const HeckeContext& ctx) {
    // G2 and rank >= 3 translations get long; keep the walk depth bounded
    int radius = ctx.rd().dim() > 2 ? 1 : (ctx.rd().num_positive_roots() <= 4 ? 3 : 2);
    return {check_cross_relation(ctx, radius), check_cor2(ctx, radius)};
}

List suite_satake(const HeckeContext& ctx) {
    auto lambdas = small_dominant_nonzero(ctx.rd(), 2, 2);
    int radius = ctx.rd().dim() <= 2 ? 2 : 1;
    return {check_absorption(ctx),
            check_ek_idempotent(ctx),
            check_theorem_a(ctx, radius),
            check_spherical_invariance(ctx, lambdas),
            check_satake_homomorphism(ctx, lambdas)};
}

List suite_center(const HeckeContext& ctx, const std::vector<Rat>& q_points) {
    int orbit_radius = ctx.rd().dim() <= 2 ? 2 : 1;
    List out{check_orbit_sums_central(ctx, orbit_radius),
             check_center_orbit_image(ctx, orbit_radius),
             check_sz_injectivity(ctx, orbit_radius)};
    int radius = ctx.rd().dim() <= 2 ? 2 : 1;
    for (const auto& q0 : q_points) out.push_back(check_center_exhaustion(ctx, radius, q0));
    return out;
}

List suite_all(const HeckeContext& ctx, const std::vector<Rat>& q_points) {
    List out;
    for (auto&& part :
         {suite_lengths(ctx), suite_im(ctx), suite_bern(ctx), suite_cross(ctx),
          suite_satake(ctx), suite_center(ctx, q_points)})
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

}  // namespace hecke::checks
