// SL(2,C) gauge action, the three-slot Poisson bracket, and the covariant
// subprincipal symbol with its covariance certificate.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"

using namespace symcalc;
using namespace testutil;

namespace {

const cplx I(0.0, 1.0);

// R = diag(e^{x^1}, e^{-x^1}): determinant one with a nonconstant gradient.
GaugeMap diag_exp_x1() {
    Matrix2Field R;
    R.at(0, 0) = cexp(ComplexField::from_real(ScalarField::coordinate(0)));
    R.at(1, 1) = cexp(ComplexField::from_real(-ScalarField::coordinate(0)));
    return GaugeMap(R);
}

Recipe gauge_recipe(std::string id, std::map<std::string, double> params) {
    Recipe r;
    r.id = std::move(id);
    r.params = std::move(params);
    return r;
}

} // namespace

TEST_CASE("gauge map validates its determinant") {
    Matrix2Field bad = Matrix2Field::identity();
    bad.at(0, 0) = ComplexField::constant(2.0);
    CHECK_THROWS_AS(GaugeMap{bad}, Error);
    CHECK_NOTHROW(GaugeMap{Matrix2Field::identity()});
}

TEST_CASE("identity gauge leaves the operator alone") {
    const auto op = catalog_op("rotating-frame");
    const auto same = apply_gauge(op, GaugeMap::identity());
    const auto xs = standard_sample_points();
    for (int al = 0; al < 4; ++al) CHECK(field_dist(same.E(al), op.E(al), xs) < 1e-14);
    CHECK(field_dist(same.S(), op.S(), xs) < 1e-14);
}

TEST_CASE("constant gauge conjugates both symbols with no gradient term") {
    Mat2 r = Mat2::identity();
    r.at(0, 1) = cplx(0.35, -0.2); // upper-triangular with unit diagonal: det 1
    const GaugeMap R(Matrix2Field::constant(r));
    const Mat2 radj = r.adjoint();

    const auto op = catalog_op("scaled-time");
    const auto gauged = apply_gauge(op, R);
    for (const auto& x : standard_sample_points()) {
        for (int al = 0; al < 4; ++al)
            CHECK(dist(gauged.E(al).eval(x), radj * op.E(al).eval(x) * r) < 1e-13);
        CHECK(dist(gauged.S().eval(x), radj * op.S().eval(x) * r) < 1e-12);
    }
}

TEST_CASE("nonconstant gauge: principal conjugates, subprincipal gains the bracket term") {
    const auto op = flat_weyl(0.4 * pauli(4));
    const GaugeMap R = diag_exp_x1();
    const auto gauged = apply_gauge(op, R);

    DetRng rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        Point x{};
        for (auto& c : x) c = rng.uniform(-1.0, 1.0);
        const Mat2 r = R.at(x);
        const Mat2 radj = r.adjoint();

        for (int al = 0; al < 4; ++al)
            CHECK(dist(gauged.E(al).eval(x), radj * op.E(al).eval(x) * r) < 1e-12);

        // S' = R*SR + (i/2) sum_a (dR/dx^a)* E^a R - R* E^a dR/dx^a,
        // with the gradient taken by the finite-difference oracle.
        Mat2 want = radj * op.S().eval(x) * r;
        for (int al = 0; al < 4; ++al) {
            const Mat2 dr = fd_oracle(R.R(), x, al);
            const Mat2 Ea = op.E(al).eval(x);
            want += (0.5 * I) * (dr.adjoint() * Ea * r - radj * Ea * dr);
        }
        CHECK(dist(gauged.eval_sub(x), want) < 1e-8);
    }
}

TEST_CASE("bracket of constant symbols vanishes") {
    const MatrixSymbol F = MatrixSymbol::constant(Matrix2Field::pauli_field(1));
    const MatrixSymbol G = MatrixSymbol::constant(Matrix2Field::pauli_field(3));
    const auto B = poisson_bracket3(F, G, F);
    DetRng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Point x{};
        Momentum p{};
        for (auto& c : x) c = rng.uniform(-1.0, 1.0);
        for (auto& c : p) c = rng.uniform(-2.0, 2.0);
        CHECK(B.eval(x, p).norm() < 1e-15);
    }
}

TEST_CASE("bracket {F, G, F} vanishes for scalar F") {
    // F = (sin(x^1) p_1 + x^2 p_2) I commutes with everything, so the two
    // bracket halves cancel identically.
    std::array<Matrix2Field, 4> coeff;
    coeff[0] = sin(ScalarField::coordinate(0)) * Matrix2Field::identity();
    coeff[1] = ScalarField::coordinate(1) * Matrix2Field::identity();
    const MatrixSymbol F = MatrixSymbol::linear(coeff);

    Matrix2Field gm = Matrix2Field::pauli_field(2);
    gm.at(0, 0) = ComplexField(ScalarField::coordinate(2), ScalarField::constant(0.3));
    const MatrixSymbol G = MatrixSymbol::constant(gm);

    const auto B = poisson_bracket3(F, G, F);
    DetRng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        Point x{};
        Momentum p{};
        for (auto& c : x) c = rng.uniform(-1.0, 1.0);
        for (auto& c : p) c = rng.uniform(-2.0, 2.0);
        CHECK(B.eval(x, p).norm() < 1e-13);
    }
}

TEST_CASE("bracket against the finite-difference definition") {
    const auto op = catalog_op("rotating-frame");
    const MatrixSymbol F = MatrixSymbol::linear({op.E(0), op.E(1), op.E(2), op.E(3)});
    const MatrixSymbol G = MatrixSymbol::constant(op.E(1));
    const auto B = poisson_bracket3(F, G, F);

    auto evalF = [&](const Point& x, const Momentum& p) { return F.eval(x, p); };
    auto evalG = [&](const Point& x, const Momentum& p) { return G.eval(x, p); };

    DetRng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        Point x{};
        Momentum p{};
        for (auto& c : x) c = rng.uniform(-1.0, 1.0);
        for (auto& c : p) c = rng.uniform(-2.0, 2.0);

        Mat2 fd = Mat2::zero();
        for (int a = 0; a < 4; ++a) {
            const double hx = fd_step(x, a);
            Point xp = x, xm = x;
            xp[static_cast<size_t>(a)] += hx;
            xm[static_cast<size_t>(a)] -= hx;
            const Mat2 Fx = (0.5 / hx) * (evalF(xp, p) - evalF(xm, p));

            Momentum px = p, pm = p;
            const double hp = fd_step(p, a);
            px[static_cast<size_t>(a)] += hp;
            pm[static_cast<size_t>(a)] -= hp;
            const Mat2 Fp = (0.5 / hp) * (evalF(x, px) - evalF(x, pm));
            const Mat2 Hx = Fx; // H = F here
            const Mat2 Hp = Fp;

            fd += Fx * evalG(x, p) * Hp - Fp * evalG(x, p) * Hx;
        }
        CHECK(dist(B.eval(x, p), fd) < 1e-6);
    }
}

TEST_CASE("covariant subprincipal symbol reduces to L_sub for constant coefficients") {
    const auto op = flat_weyl(0.3 * pauli(1) + 1.2 * pauli(4));
    const auto g = extract_metric(op);
    const auto csub = covariant_subprincipal(op, g);
    for (const auto& x : standard_sample_points())
        CHECK(dist(csub.at(x), op.eval_sub(x)) < 1e-14);
}

TEST_CASE("covariant subprincipal symbol: closed form equals the bracket route") {
    const auto op = catalog_op("rotating-frame");
    const auto g = extract_metric(op);
    const auto closed = covariant_subprincipal(op, g);
    const auto bracket = covariant_subprincipal_via_bracket(op, g);

    bool nonzero_correction = false;
    DetRng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        Point x{};
        for (auto& c : x) c = rng.uniform(-1.0, 1.0);
        const Mat2 a = closed.at(x);
        const Mat2 b = bracket.eval(x);
        CHECK(dist(a, b) < 1e-10);
        if (dist(a, op.eval_sub(x)) > 1e-6) nonzero_correction = true;
        // Hermitian, as the construction promises.
        CHECK(dist(a, a.adjoint()) < 1e-12);
    }
    CHECK(nonzero_correction);
}

TEST_CASE("covariance certificate") {
    const auto op = catalog_op("rotating-frame");
    const auto xs = standard_sample_points();

    // Identity gauge: the residual is pure roundoff.
    const auto id = verify_csub_covariance(op, GaugeMap::identity(), xs);
    CHECK(id.pass);
    CHECK(id.max_residual < 1e-13);

    // The catalog's nonconstant gauges: the certified bound.
    const auto diag = build_gauge(gauge_recipe("diag-exp", {{"lambda", 0.3}}));
    const auto boost = build_gauge(gauge_recipe("boost", {{"eta", 0.4}}));
    for (const auto& R : {diag, boost}) {
        const auto rep = verify_csub_covariance(op, R, xs);
        CHECK(rep.pass);
        CHECK(rep.max_residual < 1e-8);
    }
}

TEST_CASE("covariance violation is reported, not silently passed") {
    // A determinant-one map applied to the principal symbols only (dropping
    // the gradient term in S) is NOT the gauge action; the certificate must
    // flag it.
    const auto op = catalog_op("rotating-frame");
    const GaugeMap R = diag_exp_x1();

    std::array<Matrix2Field, 4> E;
    const Matrix2Field radj = R.R().adjoint();
    for (int al = 0; al < 4; ++al) E[al] = radj * op.E(al) * R.R();
    const Matrix2Field Sc = (radj * op.S() * R.R()).hermitized();
    const auto impostor = FirstOrderOperator::from_symbols(E, Sc);

    // Verify the impostor against the same R: its csub is not R* csub R.
    const auto g = extract_metric(op);
    const auto expected = covariant_subprincipal(op, g);
    const auto got = covariant_subprincipal(impostor, extract_metric(impostor));
    double worst = 0.0;
    for (const auto& x : standard_sample_points()) {
        const Mat2 r = R.at(x);
        worst = std::max(worst, dist(got.at(x), r.adjoint() * expected.at(x) * r));
    }
    CHECK(worst > 1e-3);
}
