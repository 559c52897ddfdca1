#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecke/json_io.hpp"

using namespace hecke;

TEST_CASE("laurent scalars round trip, including big coefficients") {
    LaurentScalar s;
    s.add_term(2, 1);
    s.add_term(0, -1);
    Json j = laurent_to_json(s);
    CHECK(j.dump() == "{\"0\":-1,\"2\":1}");
    CHECK(laurent_from_json(j) == s);

    LaurentScalar big = LaurentScalar::monomial(Int("123456789012345678901234567890"), -3);
    Json jb = laurent_to_json(big);
    CHECK(jb["-3"].is_string());
    CHECK(laurent_from_json(jb) == big);

    CHECK_THROWS_AS(laurent_from_json(Json::parse("{\"x\": 1}")), ParseError);
    CHECK_THROWS_AS(laurent_from_json(Json::parse("[1]")), ParseError);
}

TEST_CASE("zero coefficients are dropped on read") {
    LaurentScalar s = laurent_from_json(Json::parse("{\"5\": 0, \"1\": 2}"));
    CHECK(s == LaurentScalar::monomial(2, 1));
}

TEST_CASE("element serialization is canonical") {
    RootDatum rd = RootDatum::build("A2", LatticeKind::sc);

    ImElement f;
    f.add_term({LatticeElt({1, 0}), rd.simple_reflection(1)}, LaurentScalar::v_power(-1));
    f.add_term({LatticeElt({-1, 2}), rd.simple_reflection(0) * rd.simple_reflection(1)},
               q_minus_one());
    Json j = im_to_json(rd, f);
    CHECK(im_from_json(rd, j) == f);
    // serialize-parse-serialize is the identity on files
    CHECK(im_to_json(rd, im_from_json(rd, j)).dump() == j.dump());
    // term order: lexicographic on (x, word)
    CHECK(j["terms"][0]["x"] == Json::parse("[-1,2]"));

    BernElement b;
    b.add_term({LatticeElt({0, 1}), rd.simple_reflection(0)}, LaurentScalar(3));
    b.add_term({LatticeElt({0, 0}), WeylElt::identity(2)}, LaurentScalar::v_power(2));
    Json jb = bern_to_json(rd, b);
    CHECK(bern_from_json(rd, jb) == b);
    CHECK(bern_to_json(rd, bern_from_json(rd, jb)).dump() == jb.dump());
}

TEST_CASE("im/bern parsing dispatch and errors") {
    RootDatum rd = RootDatum::build("A1", LatticeKind::sc);
    Json good = Json::parse(R"({"model":"im","terms":[{"x":[1],"w":[],"c":{"0":1}}]})");
    CHECK(std::holds_alternative<ImElement>(element_from_json(rd, good)));

    Json bern = Json::parse(R"({"model":"bern","terms":[{"x":[-1],"w":[1],"c":{"2":1}}]})");
    CHECK(std::holds_alternative<BernElement>(element_from_json(rd, bern)));

    CHECK_THROWS_AS(element_from_json(rd, Json::parse(R"({"terms":[]})")), ParseError);
    CHECK_THROWS_AS(element_from_json(rd, Json::parse(R"({"model":"??","terms":[]})")),
                    ParseError);
    CHECK_THROWS_AS(im_from_json(rd, Json::parse(R"({"model":"im","terms":[{"x":[1,2],"w":[],"c":{"0":1}}]})")),
                    ParseError);
    CHECK_THROWS_AS(im_from_json(rd, Json::parse(R"({"model":"im","terms":[{"x":[1],"w":[7],"c":{"0":1}}]})")),
                    ParseError);
}

TEST_CASE("weyl words canonicalize on read") {
    RootDatum rd = RootDatum::build("A2", LatticeKind::sc);
    // a non-reduced word collapses to the canonical reduced form
    WeylElt w = weyl_from_json(rd, Json::parse("[1,1,2]"));
    CHECK(w == rd.simple_reflection(1));
    CHECK(weyl_to_json(rd, w).dump() == "[2]");
}

TEST_CASE("fractions and group algebra elements") {
    LaurentScalar den;
    den.add_term(2, 1);
    den.add_term(0, 1);
    ScalarFraction f(LaurentScalar::one(), den);
    CHECK(fraction_from_json(fraction_to_json(f)) == f);

    GroupAlgElement g;
    g.add_term(LatticeElt({1}), f);
    g.add_term(LatticeElt({-1}), ScalarFraction(LaurentScalar(2)));
    Json j = ga_to_json(g);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0]["x"] == Json::parse("[-1]"));
}

TEST_CASE("random elements round trip through JSON") {
    RootDatum rd = RootDatum::build("B2", LatticeKind::sc);
    std::mt19937 rng(7);
    std::uniform_int_distribution<i64> coord(-3, 3);
    std::uniform_int_distribution<int> wpick(0, rd.weyl_order() - 1), expd(-4, 4), coefd(-9, 9);
    for (int k = 0; k < 50; ++k) {
        ImElement f;
        for (int t = 0; t < 3; ++t) {
            LaurentScalar c;
            c.add_term(expd(rng), coefd(rng));
            f.add_term({LatticeElt({coord(rng), coord(rng)}), rd.weyl_elements()[wpick(rng)]}, c);
        }
        CHECK(im_from_json(rd, im_to_json(rd, f)) == f);
    }
}

TEST_CASE("config parsing") {
    EngineConfig cfg = config_from_json(Json::parse(R"({"type":"B2","lattice":"sc"})"));
    CHECK(cfg.type == "B2");
    CHECK(cfg.lattice == LatticeKind::sc);
    RootDatum rd = build_from_config(cfg);
    CHECK(rd.num_positive_roots() == 4);

    EngineConfig custom = config_from_json(Json::parse(
        R"({"type":"X","simple_roots":[[2,-1],[-1,2]],"simple_coroots":[[1,0],[0,1]]})"));
    CHECK(custom.lattice == LatticeKind::custom);
    CHECK(build_from_config(custom).weyl_order() == 6);

    CHECK_THROWS_AS(lattice_kind_from_string("nope"), ParseError);
}
