#include "hecke/hecke_bern.hpp"

#include <algorithm>

namespace hecke {

namespace {

void check_coord_budget(const HeckeContext& ctx, const LatticeElt& x) {
    for (i64 v : x.c)
        if (v > ctx.budget() || -v > ctx.budget())
            throw BudgetExceededError("translation coordinate exceeds budget " +
                                      std::to_string(ctx.budget()));
}

}  // namespace

BernElement geometric_quotient(const RootDatum& rd, const LatticeElt& x, int i) {
    i64 n = rd.simple_pairing(i - 1, x);
    LatticeElt coroot = rd.simple_coroot_elt(i - 1);
    BernElement r;
    WeylElt id = WeylElt::identity(rd.dim());
    if (n >= 0) {
        for (i64 k = 0; k < n; ++k) r.add_term({x - k * coroot, id}, LaurentScalar::one());
    } else {
        for (i64 k = 1; k <= -n; ++k) r.add_term({x + k * coroot, id}, -LaurentScalar::one());
    }
    return r;
}

BernElement bern_left_mul_gen(const HeckeContext& ctx, int i, const BernElement& f) {
    const RootDatum& rd = ctx.rd();
    const WeylElt& s = rd.simple_reflection(i - 1);
    LaurentScalar cross = q_minus_one();
    BernElement r;
    for (const auto& [key, c] : f.terms()) {
        LatticeElt sx = s.apply(key.x);
        check_coord_budget(ctx, sx);
        WeylElt sw = s * key.w;
        if (rd.finite_length(sw) > rd.finite_length(key.w)) {
            r.add_term({sx, sw}, c);
        } else {
            r.add_term({sx, sw}, c * ctx.quad_lower());
            r.add_term({sx, key.w}, c * ctx.quad_upper());
        }
        BernElement gq = geometric_quotient(rd, key.x, i);
        for (const auto& [gk, gc] : gq.terms()) r.add_term({gk.x, key.w}, c * gc * cross);
    }
    return r;
}

BernElement bern_right_mul_gen(const HeckeContext& ctx, const BernElement& f, int i) {
    const RootDatum& rd = ctx.rd();
    const WeylElt& s = rd.simple_reflection(i - 1);
    BernElement r;
    for (const auto& [key, c] : f.terms()) {
        WeylElt ws = key.w * s;
        if (rd.finite_length(ws) > rd.finite_length(key.w)) {
            r.add_term({key.x, ws}, c);
        } else {
            r.add_term({key.x, ws}, c * ctx.quad_lower());
            r.add_term({key.x, key.w}, c * ctx.quad_upper());
        }
    }
    return r;
}

BernElement bern_mul(const HeckeContext& ctx, const BernElement& f, const BernElement& g) {
    const RootDatum& rd = ctx.rd();
    BernElement result;
    for (const auto& [fk, fc] : f.terms()) {
        const auto& word_w = rd.reduced_word(fk.w);
        for (const auto& [gk, gc] : g.terms()) {
            BernElement h = ctx.cached_cross(fk.w, gk.x, [&] {
                // T_w * theta_y, letters of w applied right to left
                BernElement acc = BernElement::theta(gk.x);
                for (auto it = word_w.rbegin(); it != word_w.rend(); ++it)
                    acc = bern_left_mul_gen(ctx, *it, acc);
                return acc;
            });
            h = h.theta_shifted(fk.x);
            for (const auto& [hk, hc] : h.terms()) check_coord_budget(ctx, hk.x);
            for (int letter : rd.reduced_word(gk.w)) h = bern_right_mul_gen(ctx, h, letter);
            result += h.scaled(fc * gc);
        }
    }
    return result;
}

BernElement orbit_sum(const RootDatum& rd, const LatticeElt& x) {
    BernElement r;
    WeylElt id = WeylElt::identity(rd.dim());
    for (const auto& w : rd.weyl_elements()) r.add_term({w.apply(x), id}, LaurentScalar::one());
    return r;
}

CentralityReport is_central(const HeckeContext& ctx, const BernElement& f) {
    const RootDatum& rd = ctx.rd();
    std::vector<std::pair<std::string, BernElement>> gens;
    for (int i = 1; i <= rd.rank(); ++i)
        gens.emplace_back("T_s" + std::to_string(i),
                          BernElement::basis({rd.zero(), rd.simple_reflection(i - 1)}));
    for (int j = 0; j < rd.dim(); ++j) {
        LatticeElt e = rd.zero();
        e.c[j] = 1;
        gens.emplace_back("theta_e" + std::to_string(j + 1), BernElement::theta(e));
    }
    for (const auto& [name, g] : gens) {
        BernElement comm = bern_mul(ctx, f, g) - bern_mul(ctx, g, f);
        if (!comm.is_zero()) return {false, name, std::move(comm)};
    }
    return {true, "", {}};
}

CentralizerProbe centralizer_in_A_probe(const HeckeContext& ctx, const BernElement& f,
                                        int trials) {
    const RootDatum& rd = ctx.rd();
    const WeylElt* worst = nullptr;
    int worst_len = 0;
    for (const auto& [key, c] : f.terms()) {
        int len = rd.finite_length(key.w);
        if (len > worst_len) {
            worst_len = len;
            worst = &key.w;
        }
    }
    if (worst == nullptr) return {true, std::nullopt, {}};

    std::vector<LatticeElt> seeds;
    for (int j = 0; j < rd.dim(); ++j) {
        LatticeElt e = rd.zero();
        e.c[j] = 1;
        if (worst->apply(e) != e) seeds.push_back(e);
    }
    for (int t = 0; t < rd.num_positive_roots(); ++t) {
        LatticeElt e = rd.coroot_elt(t);
        if (worst->apply(e) != e) seeds.push_back(e);
    }
    // the separating y in the maximal-length argument works when scaled large
    for (int k = 1; k <= trials; ++k) {
        for (const auto& seed : seeds) {
            LatticeElt y = k * seed;
            BernElement ty = BernElement::theta(y);
            BernElement comm = bern_mul(ctx, ty, f) - bern_mul(ctx, f, ty);
            if (!comm.is_zero()) return {false, y, std::move(comm)};
        }
    }
    throw InconclusiveError("centralizer_in_A_probe: no separating y within " +
                            std::to_string(trials) + " trials");
}

ImElement to_im_basis(const HeckeContext& ctx, const LatticeElt& x, const WeylElt& w) {
    return ctx.cached_bern_image(x, w, [&] {
        ImElement th = theta_im(ctx, x);
        if (w.is_identity()) return th;
        return im_mul(ctx, th, ImElement::basis({ctx.rd().zero(), w}));
    });
}

ImElement to_im(const HeckeContext& ctx, const BernElement& f) {
    ImElement r;
    for (const auto& [key, c] : f.terms()) r += to_im_basis(ctx, key.x, key.w).scaled(c);
    return r;
}

namespace {

// minimal m with x + m*d0 dominant (alpha_i(d0) = 2 for all i)
i64 shift_depth(const RootDatum& rd, const LatticeElt& x) {
    i64 m = 0;
    for (int i = 0; i < rd.rank(); ++i) {
        i64 p = rd.simple_pairing(i, x);
        if (p < 0) m = std::max(m, (-p + 1) / 2);
    }
    return m;
}

}  // namespace

BernElement from_im(const HeckeContext& ctx, const ImElement& g) {
    // Exact elimination against the to_im images, after shifting by a deep
    // dominant theta_{x0}: the image of theta_y T_w for dominant y is
    // unitriangular, top term T_{t_y w} over terms T_{t_y w'} with w' < w.
    // The shift depth adapts upward until every discovered candidate lands
    // in the dominant cone; the result is verified by a round trip.
    if (g.is_zero()) return {};
    const RootDatum& rd = ctx.rd();

    i64 depth = 1;
    for (const auto& [key, c] : g.terms())
        for (const auto& w : rd.weyl_elements())
            depth = std::max(depth, shift_depth(rd, w.apply(key.x)) + 1);

    const int max_attempts = 8;
    for (int attempt = 0; attempt < max_attempts; ++attempt, depth *= 2) {
        LatticeElt x0 = depth * rd.regularizer();
        ImElement residual = im_mul(ctx, theta_im(ctx, x0), g);
        BernElement result;
        bool retry = false;
        while (!residual.is_zero() && !retry) {
            auto lead = residual.terms().begin();
            int lead_len = rd.finite_length(lead->first.w);
            for (auto it = std::next(residual.terms().begin()); it != residual.terms().end();
                 ++it) {
                int len = rd.finite_length(it->first.w);
                if (len > lead_len) {
                    lead = it;
                    lead_len = len;
                }
            }
            const ExtAffElt key = lead->first;
            if (!rd.is_dominant(key.x)) {
                retry = true;
                break;
            }
            ImElement img = to_im_basis(ctx, key.x, key.w);
            for (const auto& [ik, ic] : img.terms())
                if (ik.x != key.x || (ik.w != key.w && rd.finite_length(ik.w) >= lead_len)) {
                    retry = true;  // shift not deep enough for triangularity
                    break;
                }
            if (retry) break;
            LaurentScalar pivot = img.coeff(key);
            if (!pivot.is_unit()) throw SolveFailedError("from_im: non-unit pivot");
            LaurentScalar c = lead->second * pivot.unit_inverse();
            result.add_term({key.x - x0, key.w}, c);
            residual -= img.scaled(c);
        }
        if (retry) continue;
        if (!(to_im(ctx, result) == g))
            throw SolveFailedError("from_im: verification round trip failed");
        return result;
    }
    throw SolveFailedError("from_im: no dominant shift depth worked");
}

}  // namespace hecke
