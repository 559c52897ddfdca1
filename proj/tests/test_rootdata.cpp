#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hecke/checks.hpp"
#include "hecke/rootdata.hpp"

using namespace hecke;

TEST_CASE("A1 sc basics") {
    RootDatum rd = RootDatum::build("A1", LatticeKind::sc);
    CHECK(rd.dim() == 1);
    CHECK(rd.num_positive_roots() == 1);
    LatticeElt coroot = rd.simple_coroot_elt(0);
    CHECK(rd.simple_pairing(0, coroot) == 2);
    // rho = alpha, the full positive sum
    CHECK(rd.rho() == rd.simple_roots()[0]);
    CHECK(rd.rho_pairing(coroot) == 2);
}

TEST_CASE("A2 sc positive system and rho") {
    RootDatum rd = RootDatum::build("A2", LatticeKind::sc);
    CHECK(rd.num_positive_roots() == 3);
    CHECK(rd.rho_pairing(rd.simple_coroot_elt(0)) == 2);
    CHECK(rd.weyl_order() == 6);
    // highest root is alpha_1 + alpha_2; pairing with alpha_1-vee is 1
    CHECK(rd.root_pairing(rd.highest_root_index(), rd.simple_coroot_elt(0)) == 1);
}

TEST_CASE("classical root counts and Weyl orders") {
    struct Row {
        const char* type;
        int pos_roots;
        int weyl;
    };
    for (const Row& row : {Row{"A1", 1, 2}, Row{"A2", 3, 6}, Row{"B2", 4, 8}, Row{"C2", 4, 8},
                           Row{"G2", 6, 12}, Row{"A3", 6, 24}}) {
        RootDatum rd = RootDatum::build(row.type, LatticeKind::sc);
        CHECK(rd.num_positive_roots() == row.pos_roots);
        CHECK(rd.weyl_order() == row.weyl);
    }
}

TEST_CASE("weyl enumeration is closed and starts at the identity") {
    RootDatum rd = RootDatum::build("B2", LatticeKind::sc);
    const auto& w = rd.weyl_elements();
    CHECK(w.front().is_identity());
    std::set<WeylElt> all(w.begin(), w.end());
    CHECK(all.size() == w.size());
    for (const auto& a : w)
        for (const auto& b : w) CHECK(all.count(a * b) == 1);
}

TEST_CASE("invalid custom data is rejected") {
    CustomRootData bad;
    bad.simple_roots = {{3}};
    bad.simple_coroots = {{1}};
    CHECK_THROWS_AS(RootDatum::build("A1", LatticeKind::custom, bad), InvalidCartanError);

    CustomRootData affine;  // A1 affine matrix: not finite type
    affine.simple_roots = {{2, -2}, {-2, 2}};
    affine.simple_coroots = {{1, 0}, {0, 1}};
    CHECK_THROWS_AS(RootDatum::build("A1aff", LatticeKind::custom, affine), InvalidCartanError);

    CHECK_THROWS_AS(RootDatum::build("Z9", LatticeKind::sc), InvalidCartanError);
    CHECK_THROWS_AS(RootDatum::build("B2", LatticeKind::gl), IncompatibleLatticeError);
}

TEST_CASE("custom data matching A2 sc builds") {
    CustomRootData data;
    data.simple_roots = {{2, -1}, {-1, 2}};
    data.simple_coroots = {{1, 0}, {0, 1}};
    RootDatum rd = RootDatum::build("A2custom", LatticeKind::custom, data);
    CHECK(rd.num_positive_roots() == 3);
    CHECK(rd.weyl_order() == 6);
}

TEST_CASE("gl lattice for type A") {
    RootDatum rd = RootDatum::build("A2", LatticeKind::gl);
    CHECK(rd.dim() == 3);
    CHECK(rd.num_positive_roots() == 3);
    // roots e_i - e_j act by coordinate differences
    CHECK(rd.simple_pairing(0, LatticeElt({5, 1, 0})) == 4);
    CHECK(rd.is_dominant(LatticeElt({3, 2, 2})));
    CHECK(!rd.is_dominant(LatticeElt({1, 2, 0})));
}

TEST_CASE("weyl action examples") {
    RootDatum a1 = RootDatum::build("A1", LatticeKind::sc);
    LatticeElt coroot = a1.simple_coroot_elt(0);
    CHECK(a1.simple_reflection(0).apply(coroot) == -coroot);
    CHECK(a1.simple_reflection(0).apply(a1.zero()) == a1.zero());

    RootDatum a2 = RootDatum::build("A2", LatticeKind::sc);
    CHECK(a2.simple_reflection(0).apply(a2.simple_coroot_elt(1)) ==
          a2.simple_coroot_elt(0) + a2.simple_coroot_elt(1));
}

TEST_CASE("dominance decomposition examples") {
    RootDatum rd = RootDatum::build("A1", LatticeKind::sc);
    LatticeElt coroot = rd.simple_coroot_elt(0);

    auto [y0, z0] = rd.decompose_dominant(coroot);
    CHECK(y0 == coroot);
    CHECK(z0 == rd.zero());

    auto [y1, z1] = rd.decompose_dominant(-coroot);  // d0 = coroot, m = 1
    CHECK(y1 == rd.zero());
    CHECK(z1 == coroot);

    auto [y2, z2] = rd.decompose_dominant(rd.zero());
    CHECK(y2 == rd.zero());
    CHECK(z2 == rd.zero());
}

TEST_CASE("decomposition is dominant and exact over the box") {
    for (const char* type : {"A1", "A2", "B2"}) {
        RootDatum rd = RootDatum::build(type, LatticeKind::sc);
        for (const auto& x : checks::box_points(rd, 3)) {
            auto [y, z] = rd.decompose_dominant(x);
            CHECK(rd.is_dominant(y));
            CHECK(rd.is_dominant(z));
            CHECK(y - z == x);
        }
    }
}

TEST_CASE("rho pairing equals the positive pairing sum") {
    RootDatum rd = RootDatum::build("B2", LatticeKind::ad);
    for (const auto& x : checks::box_points(rd, 3)) {
        i64 total = 0;
        for (int t = 0; t < rd.num_positive_roots(); ++t) total += rd.root_pairing(t, x);
        CHECK(total == rd.rho_pairing(x));
    }
}

TEST_CASE("finite length and reduced words") {
    RootDatum rd = RootDatum::build("A2", LatticeKind::sc);
    CHECK(rd.finite_length(WeylElt::identity(2)) == 0);
    CHECK(rd.finite_length(rd.simple_reflection(0)) == 1);
    int longest = 0;
    for (const auto& w : rd.weyl_elements()) longest = std::max(longest, rd.finite_length(w));
    CHECK(longest == 3);  // all three positive roots inverted

    for (const auto& w : rd.weyl_elements()) {
        CHECK(rd.word_to_weyl(rd.reduced_word(w)) == w);
        for (int i = 1; i <= rd.rank(); ++i) {
            int before = rd.finite_length(w);
            int after = rd.finite_length(w * rd.simple_reflection(i - 1));
            CHECK(std::abs(after - before) == 1);
        }
        CHECK((rd.weyl_inverse(w) * w).is_identity());
    }
}

TEST_CASE("weyl action is a group action") {
    RootDatum rd = RootDatum::build("B2", LatticeKind::sc);
    auto pts = checks::box_points(rd, 2);
    for (const auto& a : rd.weyl_elements())
        for (const auto& b : rd.weyl_elements())
            for (const auto& x : pts) CHECK(a.apply(b.apply(x)) == (a * b).apply(x));
}

TEST_CASE("matrices permute the coroots") {
    RootDatum rd = RootDatum::build("G2", LatticeKind::sc);
    for (const auto& w : rd.weyl_elements())
        for (int t = 0; t < rd.num_positive_roots(); ++t) {
            auto [u, sign] = rd.coroot_image(w, t);
            LatticeElt img = w.apply(rd.coroot_elt(t));
            CHECK(img == (sign > 0 ? rd.coroot_elt(u) : -rd.coroot_elt(u)));
        }
}
