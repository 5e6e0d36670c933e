// symcalc: recover geometry from a self-adjoint first-order operator, verify
// the calculus, and probe the induced Dirac operator.
//
// Exit codes: 0 all requested checks pass, 1 verification failure, 2 input
// error (unknown scenario, malformed arguments, negative mass).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "symcalc/harness.hpp"

namespace {

using namespace symcalc;

std::array<double, 4> parse_momentum(const std::string& text) {
    std::array<double, 4> p{};
    std::stringstream ss(text);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 4) throw ParseError("momentum", "expected exactly four components");
        std::size_t used = 0;
        try {
            p[static_cast<size_t>(i)] = std::stod(item, &used);
        } catch (const std::exception&) {
            throw ParseError("momentum", "component " + std::to_string(i + 1) + " is not a number");
        }
        if (used != item.size())
            throw ParseError("momentum", "component " + std::to_string(i + 1) + " is not a number");
        ++i;
    }
    if (i != 4) throw ParseError("momentum", "expected exactly four components");
    return p;
}

int cmd_extract(const std::string& scenario, int grid, const std::string& out) {
    Scenario sc = load_scenario(scenario);
    if (grid > 0) sc.grid = grid;
    Report rep = run_suite(sc, "geometry", 0);
    std::ofstream f(out);
    if (!f) throw ParseError(out, "cannot open output file for writing");
    f << rep.dump();
    std::cout << "wrote " << out << " (geometry " << (rep.all_pass() ? "pass" : "FAIL") << ")\n";
    return rep.all_pass() ? 0 : 1;
}

int cmd_verify(const std::string& scenario, const std::string& suite, std::uint64_t seed,
               double tol_scale) {
    Scenario sc = load_scenario(scenario);
    Report rep = run_suite(sc, suite, seed, tol_scale);
    std::cout << rep.dump();
    return rep.all_pass() ? 0 : 1;
}

int cmd_dirac(const std::string& scenario, double mass, const std::string& momentum) {
    Scenario sc = load_scenario(scenario);
    std::array<double, 4> p = parse_momentum(momentum);
    FirstOrderOperator op = build_operator(sc);
    DiracOperator D = build_dirac(op, mass);
    double res = mass_shell_residual(D, p);
    nlohmann::ordered_json j;
    j["scenario"] = sc.name;
    j["mass"] = mass;
    j["momentum"] = p;
    j["mass_shell_residual"] = res;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_classify(const std::string& scenario, const std::string& reference) {
    Scenario sc = load_scenario(scenario);
    Scenario refSc = load_scenario(reference);
    FirstOrderOperator op = build_operator(sc);
    ReferencePair ref = ReferencePair::make(build_operator(refSc));
    ClassificationTag tag = classify(ref, op, standard_sample_points(sc.grid));
    nlohmann::ordered_json j;
    j["scenario"] = sc.name;
    j["reference"] = refSc.name;
    j["sign_c"] = tag.sign_c;
    j["sign_t"] = tag.sign_t;
    std::cout << j.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometry and Dirac-operator calculus for self-adjoint 2x2 systems"};
    app.require_subcommand(1);

    std::string scenario, out = "report.json", suite = "all", momentum, reference = "flat-weyl";
    int grid = 0;
    std::uint64_t seed = 0;
    double tol_scale = 1.0, mass = 1.0;

    auto* ext = app.add_subcommand("extract", "extract metric, frame, and potential");
    ext->add_option("--scenario", scenario, "catalog name or scenario file")->required();
    ext->add_option("--grid", grid, "sample grid points per axis");
    ext->add_option("--out", out, "report output path")->required();

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--scenario", scenario)->required();
    ver->add_option("--suite", suite,
                    "geometry|covariance|potential|adjugate|dirac|spin|all");
    ver->add_option("--seed", seed, "seed for the randomized checks");
    ver->add_option("--tol-scale", tol_scale, "multiplier on harness tolerances");

    auto* dir = app.add_subcommand("dirac", "mass-shell residual of the full symbol");
    dir->add_option("--scenario", scenario)->required();
    dir->add_option("--mass", mass)->required();
    dir->add_option("--momentum", momentum, "p1,p2,p3,p4")->required();

    auto* cls = app.add_subcommand("classify", "spin-structure tag against a reference");
    cls->add_option("--scenario", scenario)->required();
    cls->add_option("--reference", reference, "reference scenario (default flat-weyl)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // --help exits 0; real parse errors are input errors
    }

    try {
        if (app.got_subcommand(ext)) return cmd_extract(scenario, grid, out);
        if (app.got_subcommand(ver)) return cmd_verify(scenario, suite, seed, tol_scale);
        if (app.got_subcommand(dir)) return cmd_dirac(scenario, mass, momentum);
        if (app.got_subcommand(cls)) return cmd_classify(scenario, reference);
    } catch (const symcalc::UnknownScenario& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const symcalc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const symcalc::NegativeMass& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const symcalc::Error& e) {
        std::cerr << "verification failure (" << symcalc::error_name(e) << "): " << e.what()
                  << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
