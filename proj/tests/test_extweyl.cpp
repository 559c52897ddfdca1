#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/checks.hpp"
#include "hecke/extweyl.hpp"

using namespace hecke;

namespace {

ExtAffElt finite(const RootDatum& rd, int i) {
    return {rd.zero(), rd.simple_reflection(i - 1)};
}

}  // namespace

TEST_CASE("group law and inverse") {
    RootDatum rd = RootDatum::build("A1", LatticeKind::sc);
    LatticeElt a = rd.simple_coroot_elt(0);

    // translations commute
    ExtAffElt ta = ExtAffElt::translation(a);
    ExtAffElt t2 = ExtAffElt::translation(2 * a);
    CHECK(ext_mul(ta, t2) == ext_mul(t2, ta));
    CHECK(ext_mul(ta, t2) == ExtAffElt::translation(3 * a));

    // (0,s)(a,1) = (s(a), s) = (-a, s)
    ExtAffElt s = finite(rd, 1);
    CHECK(ext_mul(s, ta) == ExtAffElt(-a, rd.simple_reflection(0)));

    for (const auto& x : checks::box_points(rd, 3))
        for (const auto& w : rd.weyl_elements()) {
            ExtAffElt e{x, w};
            CHECK(ext_mul(e, ext_inverse(rd, e)) == ExtAffElt::identity(rd));
            CHECK(ext_mul(ext_inverse(rd, e), e) == ExtAffElt::identity(rd));
        }
}

TEST_CASE("length examples in A1 sc") {
    RootDatum rd = RootDatum::build("A1", LatticeKind::sc);
    LatticeElt a = rd.simple_coroot_elt(0);
    CHECK(ext_length(rd, ExtAffElt::translation(a)) == 2);  // rho(a) = 2
    CHECK(ext_length(rd, ExtAffElt::identity(rd)) == 0);
    CHECK(ext_length(rd, ExtAffElt(-a, rd.simple_reflection(0))) == 3);
}

TEST_CASE("affine simple reflections have length one") {
    for (const char* type : {"A1", "A2", "B2", "G2"}) {
        RootDatum rd = RootDatum::build(type, LatticeKind::sc);
        for (int i = 0; i <= rd.rank(); ++i)
            CHECK(ext_length(rd, affine_simple(rd, i)) == 1);
    }
    RootDatum a2 = RootDatum::build("A2", LatticeKind::sc);
    ExtAffElt s0 = affine_simple(a2, 0);
    CHECK(s0.x == a2.coroot_elt(a2.highest_root_index()));
    CHECK(s0.w == a2.reflection(a2.highest_root_index()));
    CHECK_THROWS_AS(affine_simple(a2, 3), InputError);
}

TEST_CASE("reduced words") {
    RootDatum rd = RootDatum::build("A1", LatticeKind::sc);
    ReducedWord id = ext_reduced_word(rd, ExtAffElt::identity(rd));
    CHECK(id.letters.empty());
    CHECK(id.omega == ExtAffElt::identity(rd));

    // sc A1 has trivial Omega, so t_a needs a genuine 2-letter word
    ReducedWord ta = ext_reduced_word(rd, ExtAffElt::translation(rd.simple_coroot_elt(0)));
    CHECK(ta.letters.size() == 2);
    CHECK(ta.omega == ExtAffElt::identity(rd));
    CHECK(assemble_word(rd, ta) == ExtAffElt::translation(rd.simple_coroot_elt(0)));
}

TEST_CASE("ad lattice has a nontrivial length-zero element") {
    RootDatum rd = RootDatum::build("A1", LatticeKind::ad);
    // (pi, s) with pi the fundamental coweight: alpha(pi) = 1
    LatticeElt pi({1});
    CHECK(rd.simple_pairing(0, pi) == 1);
    ExtAffElt omega{pi, rd.simple_reflection(0)};
    CHECK(ext_length(rd, omega) == 0);
    ReducedWord rw = ext_reduced_word(rd, omega);
    CHECK(rw.letters.empty());
    CHECK(rw.omega == omega);
}

TEST_CASE("length properties over boxes") {
    for (const char* type : {"A1", "A2", "B2"}) {
        for (LatticeKind kind : {LatticeKind::sc, LatticeKind::ad}) {
            RootDatum rd = RootDatum::build(type, kind);
            HeckeContext ctx(rd, 200);
            CHECK(checks::check_word_lengths(ctx, 2).pass);
            CHECK(checks::check_descents(ctx, 2).pass);
            CHECK(checks::check_length_zero_subgroup(ctx, 2).pass);
            CHECK(checks::check_dominant_length(ctx, 3).pass);
            CHECK(checks::check_dominant_additivity(ctx, 2).pass);
        }
    }
}
