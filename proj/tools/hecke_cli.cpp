#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hecke/checks.hpp"
#include "hecke/json_io.hpp"

namespace {

using namespace hecke;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResource = 3;

struct CliOptions {
    std::string type = "A1";
    std::string lattice = "sc";
    std::string config_file;
    std::string q_mode = "formal";
    i64 budget = 40;
    std::string format = "json";
};

RootDatum load_root_datum(const CliOptions& opt, const CLI::App& app) {
    EngineConfig cfg;
    if (!opt.config_file.empty()) {
        std::ifstream in(opt.config_file);
        if (!in) throw ParseError("cannot open config file: " + opt.config_file);
        Json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw ParseError(std::string("config parse error: ") + e.what());
        }
        cfg = config_from_json(j);
    }
    // explicit flags win over the config file
    if (app.count("--type") || opt.config_file.empty()) cfg.type = opt.type;
    if (app.count("--lattice") || opt.config_file.empty())
        if (!cfg.custom) cfg.lattice = lattice_kind_from_string(opt.lattice);
    return build_from_config(cfg);
}

Rat parse_rational(const std::string& s) {
    try {
        Rat q0(s);
        if (q0 <= 1) throw ParseError("specialized q must be > 1, got " + s);
        return q0;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad rational: " + s);
    }
}

std::vector<Rat> q_points_from_mode(const std::string& q_mode) {
    if (q_mode == "formal") return {Rat(2), Rat(3)};
    return {parse_rational(q_mode)};
}

LatticeElt parse_coords(const std::string& text, int dim) {
    std::vector<i64> coords;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty()) {
                try {
                    coords.push_back(std::stoll(cur));
                } catch (const std::exception&) {
                    throw ParseError("bad coordinate: " + cur);
                }
                cur.clear();
            }
        } else {
            cur += ch;
        }
    }
    if (static_cast<int>(coords.size()) != dim)
        throw ParseError("expected " + std::to_string(dim) + " coordinates, got " +
                         std::to_string(coords.size()));
    return LatticeElt(coords);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        Json j;
        in >> j;
        return j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
}

int cmd_describe(const CliOptions& opt, const CLI::App& app) {
    RootDatum rd = load_root_datum(opt, app);
    std::optional<Rat> q0;
    if (opt.q_mode != "formal") q0 = parse_rational(opt.q_mode);
    LaurentScalar wk = poincare_polynomial(rd);
    if (opt.format == "json") {
        Json roots = Json::array();
        for (int t = 0; t < rd.num_positive_roots(); ++t) {
            Json cov = Json::array(), cor = Json::array();
            for (i64 v : rd.positive_root(t)) cov.push_back(v);
            for (i64 v : rd.positive_coroot(t)) cor.push_back(v);
            roots.push_back(Json{{"root", cov}, {"coroot", cor}});
        }
        Json rho = Json::array();
        for (i64 v : rd.rho()) rho.push_back(v);
        Json j{{"type", rd.cartan_type()},       {"lattice", to_string(rd.lattice())},
               {"rank", rd.rank()},              {"dimension", rd.dim()},
               {"positive_roots", roots},        {"weyl_order", rd.weyl_order()},
               {"rho", rho},                     {"poincare", laurent_to_json(wk)}};
        if (q0) j["poincare_at_q"] = std::string(wk.evaluate_at_q(*q0).str());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "type " << rd.cartan_type() << " lattice " << to_string(rd.lattice())
                  << "\nrank " << rd.rank() << ", dimension " << rd.dim() << "\npositive roots "
                  << rd.num_positive_roots() << "\n|W| = " << rd.weyl_order() << "\nrho = "
                  << LatticeElt(rd.rho()).to_string() << " (as covector)\n[K:I] = "
                  << wk.to_string() << "\n";
        if (q0)
            std::cout << "[K:I] at q = " << opt.q_mode << ": " << wk.evaluate_at_q(*q0).str()
                      << "\n";
    }
    return kExitOk;
}

int cmd_mul(const CliOptions& opt, const CLI::App& app, const std::string& model,
            const std::string& lhs_path, const std::string& rhs_path) {
    RootDatum rd = load_root_datum(opt, app);
    HeckeContext ctx(rd, opt.budget);
    ParsedElement lhs = element_from_json(rd, read_json_file(lhs_path));
    ParsedElement rhs = element_from_json(rd, read_json_file(rhs_path));
    if (model == "im") {
        if (!std::holds_alternative<ImElement>(lhs) || !std::holds_alternative<ImElement>(rhs))
            throw ParseError("model im requires both operands in the IM model");
        ImElement prod = im_mul(ctx, std::get<ImElement>(lhs), std::get<ImElement>(rhs));
        std::cout << (opt.format == "json" ? im_to_json(rd, prod).dump(2) : im_to_text(rd, prod))
                  << "\n";
    } else if (model == "bern") {
        if (!std::holds_alternative<BernElement>(lhs) || !std::holds_alternative<BernElement>(rhs))
            throw ParseError("model bern requires both operands in the Bernstein model");
        BernElement prod = bern_mul(ctx, std::get<BernElement>(lhs), std::get<BernElement>(rhs));
        std::cout << (opt.format == "json" ? bern_to_json(rd, prod).dump(2) : bern_to_text(rd, prod))
                  << "\n";
    } else {
        throw ParseError("unknown model: " + model);
    }
    return kExitOk;
}

int cmd_convert(const CliOptions& opt, const CLI::App& app, const std::string& to,
                const std::string& input_path, bool roundtrip) {
    RootDatum rd = load_root_datum(opt, app);
    HeckeContext ctx(rd, opt.budget);
    ParsedElement input = element_from_json(rd, read_json_file(input_path));
    if (to == "im") {
        if (!std::holds_alternative<BernElement>(input))
            throw ParseError("convert --to im expects a Bernstein element");
        const BernElement& src = std::get<BernElement>(input);
        ImElement out = to_im(ctx, src);
        if (roundtrip && !(from_im(ctx, out) == src))
            throw SolveFailedError("round-trip check failed");
        std::cout << (opt.format == "json" ? im_to_json(rd, out).dump(2) : im_to_text(rd, out))
                  << "\n";
    } else if (to == "bern") {
        if (!std::holds_alternative<ImElement>(input))
            throw ParseError("convert --to bern expects an IM element");
        const ImElement& src = std::get<ImElement>(input);
        BernElement out = from_im(ctx, src);
        if (roundtrip && !(to_im(ctx, out) == src))
            throw SolveFailedError("round-trip check failed");
        std::cout << (opt.format == "json" ? bern_to_json(rd, out).dump(2) : bern_to_text(rd, out))
                  << "\n";
    } else {
        throw ParseError("unknown conversion target: " + to);
    }
    return kExitOk;
}

int cmd_satake(const CliOptions& opt, const CLI::App& app, const std::string& lambda_text,
               const std::string& orbit_text) {
    RootDatum rd = load_root_datum(opt, app);
    HeckeContext ctx(rd, opt.budget);
    if (lambda_text.empty() == orbit_text.empty())
        throw ParseError("satake needs exactly one of --lambda or --center-orbit");
    if (!lambda_text.empty()) {
        LatticeElt lam = parse_coords(lambda_text, rd.dim());
        if (!rd.is_dominant(lam)) throw NotDominantError("lambda is not dominant");
        GroupAlgElement s = satake_spherical(ctx, lam);
        bool invariant = w_invariant(rd, s);
        if (opt.format == "json") {
            Json j = ga_to_json(s);
            j["w_invariant"] = invariant;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << ga_to_text(s) << "\nW-invariant: " << (invariant ? "yes" : "no") << "\n";
        }
        return invariant ? kExitOk : kExitPropertyFailure;
    }
    LatticeElt x = parse_coords(orbit_text, rd.dim());
    GroupAlgElement img = sat_transform(rd, center_map_Z(ctx, orbit_sum(rd, x)));
    GroupAlgElement expected;
    for (const auto& w : rd.weyl_elements())
        expected.add_term(w.apply(x), ScalarFraction(LaurentScalar::one()));
    bool match = img.equals(expected) && w_invariant(rd, img);
    if (opt.format == "json") {
        Json j = ga_to_json(img);
        j["w_invariant"] = w_invariant(rd, img);
        j["equals_orbit"] = match;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << ga_to_text(img) << "\nmatches sum over the orbit: " << (match ? "yes" : "no")
                  << "\n";
    }
    return match ? kExitOk : kExitPropertyFailure;
}

int cmd_check(const CliOptions& opt, const CLI::App& app, const std::string& suite,
              const std::string& fault) {
    RootDatum rd = load_root_datum(opt, app);
    // suites walk long translations; keep the guard well above the CLI default
    HeckeContext ctx(rd, std::max<i64>(opt.budget, 400));
    if (fault == "quadratic") {
        // harness hook: corrupt the quadratic rule and make sure the suites notice
        LaurentScalar bad = LaurentScalar::q_power(1);
        bad.add_term(0, -2);
        ctx.set_quadratic_rule(bad, LaurentScalar::q_power(1));
    } else if (!fault.empty()) {
        throw ParseError("unknown fault: " + fault);
    }
    std::vector<Rat> q_points = q_points_from_mode(opt.q_mode);
    checks::List results;
    if (suite == "lengths") results = checks::suite_lengths(ctx);
    else if (suite == "im") results = checks::suite_im(ctx);
    else if (suite == "bern") results = checks::suite_bern(ctx);
    else if (suite == "cross") results = checks::suite_cross(ctx);
    else if (suite == "satake") results = checks::suite_satake(ctx);
    else if (suite == "center") results = checks::suite_center(ctx, q_points);
    else if (suite == "all") results = checks::suite_all(ctx, q_points);
    else throw ParseError("unknown suite: " + suite);

    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.pass) std::cout << "  [" << r.detail << "]";
        std::cout << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "all checks passed" : "checks FAILED") << "\n";
    return all ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact affine Hecke algebra engine"};
    app.require_subcommand(1);
    app.fallthrough();

    CliOptions opt;
    app.add_option("--type", opt.type, "Cartan type label (A1..A9, B2, C2, G2)");
    app.add_option("--lattice", opt.lattice, "lattice: sc | ad | gl | custom");
    app.add_option("--config", opt.config_file, "JSON config file; flags win");
    app.add_option("--q", opt.q_mode, "coefficient mode: formal | <rational q0>");
    app.add_option("--budget", opt.budget, "support length guard")->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "output: json | text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* describe = app.add_subcommand("describe", "print the root datum summary");

    std::string model = "im", lhs_path, rhs_path;
    auto* mul = app.add_subcommand("mul", "multiply two element files");
    mul->add_option("--model", model, "element model: im | bern");
    mul->add_option("lhs", lhs_path, "left element file")->required();
    mul->add_option("rhs", rhs_path, "right element file")->required();

    std::string to = "bern", input_path;
    bool roundtrip = false;
    auto* convert = app.add_subcommand("convert", "convert between the presentations");
    convert->add_option("--to", to, "target model: im | bern");
    convert->add_flag("--roundtrip", roundtrip, "re-convert and assert identity");
    convert->add_option("input", input_path, "element file")->required();

    std::string lambda_text, orbit_text;
    auto* satake = app.add_subcommand("satake", "Satake transform / center map");
    satake->add_option("--lambda", lambda_text, "dominant coweight coordinates, e.g. 1,0");
    satake->add_option("--center-orbit,--orbit", orbit_text,
                       "lattice point x for (S.Z)(orbit sum)");

    std::string suite = "all", fault;
    auto* check = app.add_subcommand("check", "run property suites");
    check->add_option("--suite", suite, "lengths | im | bern | cross | satake | center | all");
    check->add_option("--inject-fault", fault, "testing hook: quadratic")->group("");

    try {
        app.parse(argc, argv);
        if (describe->parsed()) return cmd_describe(opt, app);
        if (mul->parsed()) return cmd_mul(opt, app, model, lhs_path, rhs_path);
        if (convert->parsed()) return cmd_convert(opt, app, to, input_path, roundtrip);
        if (satake->parsed()) return cmd_satake(opt, app, lambda_text, orbit_text);
        if (check->parsed()) return cmd_check(opt, app, suite, fault);
        return kExitInputError;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    } catch (const hecke::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const hecke::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const hecke::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
