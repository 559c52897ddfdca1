#pragma once

#include <string>
#include <vector>

#include "hecke/satake.hpp"

namespace hecke::checks {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // counterexample serialization on failure
};
using List = std::vector<CheckResult>;

bool all_pass(const List& results);

// all lattice points with coordinates in [-radius, radius]^d
std::vector<LatticeElt> box_points(const RootDatum& rd, int radius);
// dominant points with coordinates in [0, radius]^d
std::vector<LatticeElt> dominant_box_points(const RootDatum& rd, int radius);

// ---- length layer ----------------------------------------------------
CheckResult check_dominant_length(const HeckeContext& ctx, int radius);
CheckResult check_word_lengths(const HeckeContext& ctx, int radius);
CheckResult check_descents(const HeckeContext& ctx, int radius);
CheckResult check_length_zero_subgroup(const HeckeContext& ctx, int radius);
CheckResult check_dominant_additivity(const HeckeContext& ctx, int radius);

// ---- IM model --------------------------------------------------------
CheckResult check_quadratic_rule(const HeckeContext& ctx);
CheckResult check_dominant_products(const HeckeContext& ctx, int radius);
CheckResult check_additive_collapse_iff(const HeckeContext& ctx, int radius);
CheckResult check_basis_inverses(const HeckeContext& ctx, int radius);
CheckResult check_theta_welldefined(const HeckeContext& ctx, int radius, int samples,
                                    unsigned seed);
CheckResult check_theta_multiplicative(const HeckeContext& ctx, int radius);
CheckResult check_im_associativity(const HeckeContext& ctx, int triples, int max_len,
                                   unsigned seed);
CheckResult check_dihedral_oracle(const HeckeContext& ctx, int max_len);

// ---- Bernstein model -------------------------------------------------
CheckResult check_geometric_quotient(const HeckeContext& ctx, int radius);
CheckResult check_cross_relation(const HeckeContext& ctx, int radius);
CheckResult check_cor2(const HeckeContext& ctx, int radius);
CheckResult check_to_im_homomorphism(const HeckeContext& ctx, int pairs, unsigned seed);
CheckResult check_conversion_roundtrip(const HeckeContext& ctx, int radius, int random_ims,
                                       unsigned seed);
CheckResult check_basis_triangular(const HeckeContext& ctx, int radius);
CheckResult check_basis_rank_at_q(const HeckeContext& ctx, int radius, const Rat& q0);

// ---- Satake layer ----------------------------------------------------
CheckResult check_absorption(const HeckeContext& ctx);
CheckResult check_ek_idempotent(const HeckeContext& ctx);
CheckResult check_theorem_a(const HeckeContext& ctx, int radius);
CheckResult check_spherical_invariance(const HeckeContext& ctx,
                                       const std::vector<LatticeElt>& lambdas);
CheckResult check_satake_homomorphism(const HeckeContext& ctx,
                                      const std::vector<LatticeElt>& lambdas);

// ---- center ----------------------------------------------------------
CheckResult check_orbit_sums_central(const HeckeContext& ctx, int radius);
CheckResult check_center_orbit_image(const HeckeContext& ctx, int radius);
CheckResult check_sz_injectivity(const HeckeContext& ctx, int radius);
CheckResult check_center_exhaustion(const HeckeContext& ctx, int radius, const Rat& q0);

// ---- centralizer probe ----------------------------------------------
CheckResult check_probe_negative(const HeckeContext& ctx, int samples, unsigned seed);
CheckResult check_probe_positive(const HeckeContext& ctx, int samples, unsigned seed);

// ---- CLI suites -------------------------------------------------------
List suite_lengths(const HeckeContext& ctx);
List suite_im(const HeckeContext& ctx);
List suite_bern(const HeckeContext& ctx);
List suite_cross(const HeckeContext& ctx);
List suite_satake(const HeckeContext& ctx);
List suite_center(const HeckeContext& ctx, const std::vector<Rat>& q_points);
List suite_all(const HeckeContext& ctx, const std::vector<Rat>& q_points);

}  // namespace hecke::checks
