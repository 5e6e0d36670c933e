// Classification scalars c and t, the four-class tag and its sign table,
// the epsilon-contraction oracle, and witness-based equivalence.

#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"

using namespace symcalc;
using namespace testutil;

TEST_CASE("classification scalars against the reference itself") {
    for (const auto& name : {"flat-weyl", "rotating-frame"}) {
        const auto op = catalog_op(name);
        const auto ref = ReferencePair::make(op);
        CAPTURE(name);
        for (const auto& x : standard_sample_points()) {
            CHECK(chi_c(ref, op, x) == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(chi_t(ref, op, x) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("sign table for {L, -L, Adj L, -Adj L}") {
    const auto op = catalog_op("rotating-frame");
    const auto ref = ReferencePair::make(op);
    const auto adj = adjugate_operator(op);
    const auto xs = standard_sample_points();

    const Point x{0.3, -0.5, 0.8, 0.2};
    CHECK(chi_c(ref, adj, x) == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(chi_t(ref, adj, x) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(chi_t(ref, op.negated(), x) == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(chi_c(ref, op.negated(), x) == doctest::Approx(1.0).epsilon(1e-9));

    const ClassificationTag tL = classify(ref, op, xs);
    const ClassificationTag tNeg = classify(ref, op.negated(), xs);
    const ClassificationTag tAdj = classify(ref, adj, xs);
    const ClassificationTag tNegAdj = classify(ref, adj.negated(), xs);

    CHECK(tL == ClassificationTag{+1, +1});
    CHECK(tNeg == ClassificationTag{+1, -1});
    CHECK(tAdj == ClassificationTag{-1, +1});
    CHECK(tNegAdj == ClassificationTag{-1, -1});

    std::set<std::pair<int, int>> tags;
    for (const auto& t : {tL, tNeg, tAdj, tNegAdj}) tags.insert({t.sign_c, t.sign_t});
    CHECK(tags.size() == 4);
}

TEST_CASE("determinant route matches the epsilon-contraction oracle") {
    const auto op = catalog_op("gauged-flat");
    const auto ref = ReferencePair::make(catalog_op("flat-weyl"));
    const auto adj = adjugate_operator(op);
    DetRng rng(67);
    for (int trial = 0; trial < 25; ++trial) {
        Point x{};
        for (auto& c : x) c = rng.uniform(-1.0, 1.0);
        for (const auto* candidate : {&op, &adj}) {
            const double fast = chi_c(ref, *candidate, x);
            const double slow = chi_c_epsilon(ref, *candidate, x);
            CHECK(std::abs(fast - slow) < 1e-10);
        }
    }
}

TEST_CASE("classification is gauge-invariant") {
    const auto op = catalog_op("flat-weyl");
    const auto ref = ReferencePair::make(op);
    const auto xs = standard_sample_points();
    const ClassificationTag base = classify(ref, op, xs);
    for (const auto& gname : catalog_gauges()) {
        Recipe r;
        r.id = gname;
        const auto gauged = apply_gauge(op, build_gauge(r));
        CAPTURE(gname);
        CHECK(classify(ref, gauged, xs) == base);
    }
}

TEST_CASE("operators over different metrics refuse to be compared") {
    const auto ref = ReferencePair::make(catalog_op("flat-weyl"));
    const auto other = catalog_op("conformal?omega=2");
    CHECK_THROWS_AS(chi_c(ref, other, Point{0, 0, 0, 0}), MetricMismatch);
}

TEST_CASE("witness verification accepts the honest witness") {
    const auto opA = catalog_op("rotating-frame");
    const auto xs = standard_sample_points();

    // Trivial witness.
    const auto self = check_equivalence_witness(opA, opA, GaugeMap::identity(), xs);
    CHECK(self.pass);
    CHECK(self.max_residual < 1e-12);

    // A gauge-transformed copy with its generating map as witness.
    Recipe r;
    r.id = "rotation";
    r.params["phi"] = 0.7;
    const GaugeMap R = build_gauge(r);
    const auto opB = apply_gauge(opA, R);
    const auto rep = check_equivalence_witness(opA, opB, R, xs);
    CHECK(rep.pass);
    CHECK(rep.max_residual < 1e-8);
}

TEST_CASE("witness verification rejects a wrong witness and wrong classes") {
    const auto opA = catalog_op("rotating-frame");
    const auto xs = standard_sample_points();

    Recipe r;
    r.id = "rotation";
    r.params["phi"] = 0.7;
    const auto opB = apply_gauge(opA, build_gauge(r));

    // A generic constant determinant-one map that is NOT the generating one.
    Mat2 w = Mat2::zero();
    w.at(0, 0) = std::exp(0.5);
    w.at(1, 1) = std::exp(-0.5);
    const GaugeMap wrong(Matrix2Field::constant(w));
    try {
        check_equivalence_witness(opA, opB, wrong, xs);
        FAIL("wrong witness was accepted");
    } catch (const WitnessFails& e) {
        CHECK(e.residual > 1e-3);
    }

    // Operators outside the positive class are rejected before any residual.
    CHECK_THROWS_AS(
        check_equivalence_witness(opA, adjugate_operator(opA), GaugeMap::identity(), xs),
        NotInPositiveClass);
}
