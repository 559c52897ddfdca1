#pragma once

#include <optional>
#include <string>

#include "hecke/bern_element.hpp"
#include "hecke/hecke_im.hpp"

namespace hecke {

// The quotient (theta_x - theta_{s_i(x)}) / (1 - theta_{-alpha_i^vee}) as a
// closed telescoping sum; multiplying back by (1 - theta_{-alpha_i^vee})
// always reproduces theta_x - theta_{s_i(x)} exactly.  i is 1-based.
BernElement geometric_quotient(const RootDatum& rd, const LatticeElt& x, int i);

// Product in the Bernstein presentation: theta's multiply by adding indices,
// the finite parts follow the T-basis recursion, and T's move right across
// theta's via  T_s theta_x = theta_{s(x)} T_s + (q-1) * geometric_quotient(x, s).
BernElement bern_mul(const HeckeContext& ctx, const BernElement& f, const BernElement& g);

// T_{s_i} * f for a finite simple index i (1-based)
BernElement bern_left_mul_gen(const HeckeContext& ctx, int i, const BernElement& f);
// f * T_{s_i}
BernElement bern_right_mul_gen(const HeckeContext& ctx, const BernElement& f, int i);

// sum over all w in W of theta_{w(x)}, with stabilizer multiplicity
BernElement orbit_sum(const RootDatum& rd, const LatticeElt& x);

struct CentralityReport {
    bool central = false;
    std::string generator;    // description of the first failing generator
    BernElement commutator;   // the nonzero witness
};

// Commutation against the algebra generators T_{s_1..r} and theta over a
// lattice basis; sufficient since those generate H_I.
CentralityReport is_central(const HeckeContext& ctx, const BernElement& f);

struct CentralizerProbe {
    bool in_A = false;
    std::optional<LatticeElt> witness_y;
    BernElement commutator;
};

// Probe for membership in the centralizer of A: elements with a w != 1 term
// are separated by [theta_y, f] != 0 for a scaled y with w(y) != y; pure
// theta elements commute with all of A.  Throws InconclusiveError if no
// separating y is found within the trial budget.
CentralizerProbe centralizer_in_A_probe(const HeckeContext& ctx, const BernElement& f,
                                        int trials = 8);

// canonical direction: theta_x T_w -> theta_im(x) * T_{(0,w)}
ImElement to_im_basis(const HeckeContext& ctx, const LatticeElt& x, const WeylElt& w);
ImElement to_im(const HeckeContext& ctx, const BernElement& f);

// Unique Bernstein expansion of an IM element, found by exact elimination
// with adaptively discovered support and verified by a to_im round trip.
BernElement from_im(const HeckeContext& ctx, const ImElement& g);

}  // namespace hecke
