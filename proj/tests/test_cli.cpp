#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "hecke/json_io.hpp"

using namespace hecke;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string out_path = "/tmp/hecke_cli_out_" + std::to_string(counter++) + ".txt";
    std::string cmd = std::string(HECKE_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(out_path.c_str());
    return {code, buf.str()};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

TEST_CASE("describe reports the datum and exit codes") {
    RunResult r = run_cli("describe --type A1 --lattice sc");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["rank"] == 1);
    CHECK(j["weyl_order"] == 2);
    CHECK(j["poincare"] == Json::parse(R"({"0":1,"2":1})"));

    CHECK(run_cli("describe --type A2 --lattice sc").exit_code == 0);
    CHECK(run_cli("describe --type Z9").exit_code == 2);
    CHECK(run_cli("describe --type B2 --lattice gl").exit_code == 2);
}

TEST_CASE("config file with flag override") {
    write_file("/tmp/hecke_cfg.json", R"({"type": "B2", "lattice": "sc"})");
    RunResult r = run_cli("describe --config /tmp/hecke_cfg.json");
    CHECK(r.exit_code == 0);
    CHECK(Json::parse(r.out)["type"] == "B2");

    RunResult overridden = run_cli("describe --config /tmp/hecke_cfg.json --type A2");
    CHECK(overridden.exit_code == 0);
    CHECK(Json::parse(overridden.out)["type"] == "A2");
}

TEST_CASE("mul in both models") {
    write_file("/tmp/hecke_ts.json", R"({"model":"im","terms":[{"x":[0],"w":[1],"c":{"0":1}}]})");
    RunResult r = run_cli("mul --type A1 --lattice sc --model im /tmp/hecke_ts.json /tmp/hecke_ts.json");
    CHECK(r.exit_code == 0);
    RootDatum rd = RootDatum::build("A1", LatticeKind::sc);
    ImElement prod = im_from_json(rd, Json::parse(r.out));
    ImElement expected =
        ImElement::basis({rd.zero(), rd.simple_reflection(0)}).scaled(q_minus_one()) +
        ImElement::unit(rd).scaled(LaurentScalar::q_power(1));
    CHECK(prod == expected);

    write_file("/tmp/hecke_tp.json", R"({"model":"bern","terms":[{"x":[1],"w":[],"c":{"0":1}}]})");
    write_file("/tmp/hecke_tm.json", R"({"model":"bern","terms":[{"x":[-1],"w":[],"c":{"0":1}}]})");
    RunResult rb = run_cli("mul --type A1 --lattice sc --model bern /tmp/hecke_tp.json /tmp/hecke_tm.json");
    CHECK(rb.exit_code == 0);
    CHECK(bern_from_json(rd, Json::parse(rb.out)) == BernElement::unit(rd));

    // mixed models are an input error
    CHECK(run_cli("mul --type A1 --lattice sc --model im /tmp/hecke_ts.json /tmp/hecke_tp.json")
              .exit_code == 2);
    // parse failure
    write_file("/tmp/hecke_bad.json", "{nope");
    CHECK(run_cli("mul --type A1 --lattice sc --model im /tmp/hecke_bad.json /tmp/hecke_ts.json")
              .exit_code == 2);
}

TEST_CASE("budget exhaustion exits 3") {
    write_file("/tmp/hecke_t2.json", R"({"model":"im","terms":[{"x":[2],"w":[],"c":{"0":1}}]})");
    RunResult r = run_cli(
        "mul --type A1 --lattice sc --budget 5 --model im /tmp/hecke_t2.json /tmp/hecke_t2.json");
    CHECK(r.exit_code == 3);
}

TEST_CASE("convert between the models") {
    RootDatum rd = RootDatum::build("A1", LatticeKind::sc);
    write_file("/tmp/hecke_th.json", R"({"model":"bern","terms":[{"x":[1],"w":[],"c":{"0":1}}]})");
    RunResult r = run_cli("convert --type A1 --lattice sc --to im --roundtrip /tmp/hecke_th.json");
    CHECK(r.exit_code == 0);
    ImElement img = im_from_json(rd, Json::parse(r.out));
    CHECK(img == ImElement::basis(ExtAffElt::translation(rd.simple_coroot_elt(0)))
                     .scaled(LaurentScalar::q_power(-1)));

    write_file("/tmp/hecke_tsim.json", R"({"model":"im","terms":[{"x":[0],"w":[1],"c":{"0":1}}]})");
    RunResult rb = run_cli("convert --type A1 --lattice sc --to bern /tmp/hecke_tsim.json");
    CHECK(rb.exit_code == 0);
    CHECK(bern_from_json(rd, Json::parse(rb.out)) ==
          BernElement::basis({rd.zero(), rd.simple_reflection(0)}));

    // converting an IM file with --to im is an input error
    CHECK(run_cli("convert --type A1 --lattice sc --to im /tmp/hecke_tsim.json").exit_code == 2);

    // canonical output: reconverting the printed file reproduces it byte for byte
    write_file("/tmp/hecke_roundtrip.json", r.out);
    RunResult again = run_cli("convert --type A1 --lattice sc --to bern /tmp/hecke_roundtrip.json");
    CHECK(again.exit_code == 0);
    RunResult back = run_cli("convert --type A1 --lattice sc --to im /tmp/hecke_th.json");
    CHECK(back.out == r.out);
}

TEST_CASE("satake spherical and center modes") {
    RunResult r = run_cli("satake --type A1 --lattice sc --lambda 1");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["w_invariant"] == true);
    CHECK(j["terms"].size() == 3);

    RunResult rc = run_cli("satake --type A1 --lattice sc --center-orbit 1");
    CHECK(rc.exit_code == 0);
    Json jc = Json::parse(rc.out);
    CHECK(jc["equals_orbit"] == true);
    CHECK(jc["terms"].size() == 2);

    CHECK(run_cli("satake --type A1 --lattice sc --lambda -1").exit_code == 2);
    CHECK(run_cli("satake --type A1 --lattice sc").exit_code == 2);
}

TEST_CASE("check suites pass and exit zero") {
    CHECK(run_cli("check --type A1 --lattice sc --suite lengths").exit_code == 0);
    CHECK(run_cli("check --type A1 --lattice sc --suite cross").exit_code == 0);
    CHECK(run_cli("check --type A1 --lattice sc --suite center --q 2").exit_code == 0);
    CHECK(run_cli("check --type A1 --lattice sc --suite bogus").exit_code == 2);
}

TEST_CASE("fault injection trips the suites with a witness") {
    RunResult r = run_cli("check --type A1 --lattice sc --suite im --inject-fault quadratic");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("im.quadratic") != std::string::npos);
    // the failing line carries the serialized counterexample
    CHECK(r.out.find("\"model\"") != std::string::npos);
}
