#pragma once

// Scenario catalog, deterministic generators, the finite-difference oracle,
// verification suites, and the JSON report format. This module owns all I/O;
// everything below it is a pure library.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symcalc/dirac.hpp"
#include "symcalc/errors.hpp"
#include "symcalc/spin_structure.hpp"

namespace symcalc {

struct Recipe {
    std::string id;
    std::map<std::string, double> params;

    double param(const std::string& key, double fallback) const;
};

struct Scenario {
    std::string name;
    Recipe recipe;
    std::optional<Recipe> gauge; // applied on top of the recipe operator
    std::optional<double> mass;
    int grid = 3; // sample grid points per axis
};

// Resolves "name", "name?key=val&key=val", or a path to a scenario JSON file
// ({name, recipe: {id, params}, gauge: {id, params}?, mass?, grid?}).
// Throws UnknownScenario / ParseError.
Scenario load_scenario(const std::string& name_or_path);

// Operator catalog ids: flat-weyl (s1..s4 subprincipal knobs), scaled-time
// (a), rotating-frame (omega), gauged-flat (lambda), conformal (omega, k),
// degenerate (a built-to-fail fixture), random (seed).
FirstOrderOperator build_operator(const Scenario& sc);

// Gauge catalog ids: identity, const-shear (re, im), diag-exp (lambda),
// rotation (phi), shear (a), boost (eta), random (seed).
GaugeMap build_gauge(const Recipe& recipe);

// The five positive catalog scenarios (the degenerate fixture is excluded).
const std::vector<std::string>& catalog_scenarios();
// The nontrivial catalog gauge maps.
const std::vector<std::string>& catalog_gauges();

// R = exp(A) with A(x) = lambda(x) * B for a constant random similarity B of
// diag(1,-1): exactly expressible as P diag(e^lambda, e^-lambda) P^-1, so
// det R = 1 by construction and all entries stay small.
GaugeMap random_gauge(DetRng& rng);

// A random smooth non-degenerate operator: conformal factor times a gauged
// constant linear mix of the Pauli basis. Non-degeneracy and the Lorentzian
// signature hold by construction (congruence with an invertible mix).
FirstOrderOperator random_operator(DetRng& rng);

// exp(-|x|^2 / 2), the standard decay window for quadrature tests.
ScalarField gaussian_window();

// Windowed random plane-wave 2-column for self-adjointness tests.
TwoColumnField random_windowed_field(DetRng& rng);

// Central differences at the ledger step h = 1e-5 max(1, |x_dir|).
double fd_oracle(const ScalarField& f, const Point& x, int direction);
cplx fd_oracle(const ComplexField& f, const Point& x, int direction);
Mat2 fd_oracle(const Matrix2Field& f, const Point& x, int direction);

struct SuiteResult {
    std::string name;
    bool pass = true;
    double max_residual = 0.0;
    Point worst_point{};
    std::string note; // failure message, or why a check was skipped
};

struct GeometrySample {
    Point x{};
    std::array<double, 16> g_up{};  // row-major g^{alpha beta}
    std::array<double, 16> frame{}; // row-major e_j^alpha (row j)
    std::array<double, 4> A{};
};

struct Report {
    std::string version = "1.0.0";
    std::string scenario;
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;
    int grid = 3;
    std::vector<GeometrySample> geometry;

    bool all_pass() const;
    std::string dump() const; // stable formatting; byte-identical per input
    static Report parse(const std::string& text);
};

// suite is one of geometry | covariance | potential | adjugate | dirac |
// spin | all. Deterministic in (scenario, suite, seed). Module errors are
// recorded as failed suite entries, not propagated. tol_scale multiplies
// every tolerance.
Report run_suite(const Scenario& sc, const std::string& suite, std::uint64_t seed,
                 double tol_scale = 1.0);

} // namespace symcalc
