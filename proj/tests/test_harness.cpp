// Scenario catalog and parsing, deterministic generators, the verification
// suites, and the JSON report round trip.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"

using namespace symcalc;
using namespace testutil;

namespace {

// Writes content to a fresh temp file and returns its path.
std::string write_temp(const std::string& stem, const std::string& content) {
    const std::string path = "/tmp/symcalc-test-" + stem + ".json";
    std::ofstream out(path);
    out << content;
    out.close();
    return path;
}

} // namespace

TEST_CASE("scenario names, aliases, and parameters") {
    CHECK(load_scenario("flat-weyl").recipe.id == "flat-weyl");
    CHECK(load_scenario("s1").recipe.id == "flat-weyl");
    CHECK(load_scenario("s3").recipe.id == "rotating-frame");
    CHECK(load_scenario("s5").recipe.id == "conformal");

    const auto sc = load_scenario("conformal?omega=2");
    CHECK(sc.recipe.id == "conformal");
    CHECK(sc.recipe.param("omega", 0.0) == 2.0);
    CHECK(sc.recipe.param("missing", -1.5) == -1.5);

    CHECK_THROWS_AS(load_scenario("warp-drive"), UnknownScenario);

    CHECK(catalog_scenarios().size() == 5);
    CHECK(catalog_gauges().size() == 5);
}

TEST_CASE("scenario files load and malformed input is rejected") {
    const std::string good = write_temp("good", R"({
        "name": "custom",
        "recipe": {"id": "scaled-time", "params": {"a": 0.25}},
        "gauge": {"id": "boost", "params": {"eta": 0.2}},
        "mass": 0.5,
        "grid": 2
    })");
    const auto sc = load_scenario(good);
    CHECK(sc.name == "custom");
    CHECK(sc.recipe.id == "scaled-time");
    CHECK(sc.recipe.param("a", 0.0) == 0.25);
    REQUIRE(sc.gauge.has_value());
    CHECK(sc.gauge->id == "boost");
    REQUIRE(sc.mass.has_value());
    CHECK(*sc.mass == 0.5);
    CHECK(sc.grid == 2);
    CHECK_NOTHROW(build_operator(sc));

    const std::string bad = write_temp("bad", "{ not json");
    CHECK_THROWS_AS(load_scenario(bad), ParseError);

    std::remove(good.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("deterministic generators satisfy their contracts") {
    const auto xs = standard_sample_points();
    CHECK(xs.size() == 81 + 20);

    // The momentum sample leads with the eight poles.
    const auto ps = momentum_sphere_sample();
    REQUIRE(ps.size() == 256);
    CHECK(ps[0] == Momentum{1, 0, 0, 0});
    for (const auto& p : ps) {
        const double n2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
        CHECK(std::abs(n2 - 1.0) < 1e-12);
    }

    // Random gauges are determinant-one everywhere.
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        DetRng rng(seed);
        const GaugeMap R = random_gauge(rng);
        for (const auto& x : xs) CHECK(std::abs(R.at(x).det() - 1.0) < 1e-10);
    }

    // Random operators are admissible inputs: Hermitian (enforced at
    // construction), non-degenerate, Lorentzian.
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        DetRng rng(seed);
        const auto op = random_operator(rng);
        CHECK(op.check_nondegeneracy(xs).pass);
        CHECK(check_lorentzian(extract_metric(op), xs).pass);
    }

    // Same seed, same field: the windowed generator is reproducible.
    DetRng a(9), b(9);
    const TwoColumnField va = random_windowed_field(a);
    const TwoColumnField vb = random_windowed_field(b);
    const Point probe{0.4, -0.7, 0.2, 0.5};
    CHECK(std::abs(va.eval(probe)[0] - vb.eval(probe)[0]) == 0.0);
    CHECK(std::abs(va.eval(probe)[1] - vb.eval(probe)[1]) == 0.0);
}

TEST_CASE("full suite on the flat scenario: everything passes tightly") {
    const auto rep = run_suite(load_scenario("flat-weyl"), "all", 42);
    CHECK(rep.all_pass());
    CHECK(rep.scenario == "flat-weyl");
    CHECK(rep.seed == 42);
    CHECK(rep.suites.size() >= 20);
    for (const auto& s : rep.suites) {
        CAPTURE(s.name);
        CHECK(s.pass);
        CHECK(s.max_residual < 1e-9);
    }
    // Geometry payload covers the standard sample set.
    CHECK(rep.geometry.size() == 101);
}

TEST_CASE("covariance suite on the rotating frame meets the certified bound") {
    const auto rep = run_suite(load_scenario("rotating-frame"), "covariance", 42);
    CHECK(rep.all_pass());
    bool sawCatalog = false, sawRandom = false;
    for (const auto& s : rep.suites) {
        CHECK(s.max_residual < 1e-8);
        if (s.name == "covariance-catalog") sawCatalog = true;
        if (s.name == "covariance-random") sawRandom = true;
    }
    CHECK(sawCatalog);
    CHECK(sawRandom);
}

TEST_CASE("degenerate fixture is recorded as a failure, not a crash") {
    const auto rep = run_suite(load_scenario("degenerate"), "geometry", 42);
    CHECK_FALSE(rep.all_pass());
    bool named = false;
    for (const auto& s : rep.suites)
        if (!s.pass && s.note.find("DegeneratePrincipalSymbol") != std::string::npos) named = true;
    CHECK(named);
}

TEST_CASE("reports round-trip through JSON losslessly") {
    const auto rep = run_suite(load_scenario("flat-weyl"), "geometry", 7);
    const std::string text = rep.dump();
    const Report back = Report::parse(text);
    CHECK(back.dump() == text);
    CHECK(back.version == rep.version);
    CHECK(back.scenario == rep.scenario);
    CHECK(back.suites.size() == rep.suites.size());

    CHECK_THROWS_AS(Report::parse("{{ nope"), ParseError);
}

TEST_CASE("identical inputs produce byte-identical reports") {
    const auto sc = load_scenario("scaled-time");
    const std::string a = run_suite(sc, "geometry", 123).dump();
    const std::string b = run_suite(sc, "geometry", 123).dump();
    CHECK(a == b);
}

TEST_CASE("tolerance scaling loosens a failing bound") {
    // With an absurdly tight scale every residual-bearing check must fail;
    // the harness maps tolerance scaling through every suite uniformly.
    const auto sc = load_scenario("rotating-frame");
    const auto strict = run_suite(sc, "covariance", 42, 1e-16);
    CHECK_FALSE(strict.all_pass());
    const auto normal = run_suite(sc, "covariance", 42, 1.0);
    CHECK(normal.all_pass());
}
