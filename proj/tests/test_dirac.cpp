// The 4x4 Dirac operator: block structure, plane-wave action, the mass
// shell, half-density rescaling, and affine coordinate pushforwards.

#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"

using namespace symcalc;
using namespace testutil;

namespace {

const cplx I(0.0, 1.0);

Mat4c block_matrix(const Mat2& tl, const Mat2& tr, const Mat2& bl, const Mat2& br) {
    Mat4c out = Mat4c::zero();
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            out.at(r, c) = tl.at(r, c);
            out.at(r, c + 2) = tr.at(r, c);
            out.at(r + 2, c) = bl.at(r, c);
            out.at(r + 2, c + 2) = br.at(r, c);
        }
    return out;
}

BispinorField plane_wave_bispinor(const Vec4c& u, const Momentum& p) {
    return plane_wave(p) * BispinorField::constant(u);
}

cplx phase_at(const Momentum& p, const Point& x) {
    return std::exp(I * (p[0] * x[0] + p[1] * x[1] + p[2] * x[2] + p[3] * x[3]));
}

} // namespace

TEST_CASE("build_dirac structure and the mass guard") {
    const auto op = flat_weyl();
    CHECK_THROWS_AS(build_dirac(op, -1.0), NegativeMass);

    const auto massless = build_dirac(op, 0.0);
    const auto massive = build_dirac(op, 1.0);
    const Point x{0.3, -0.2, 0.6, 0.1};
    const Momentum p{0.4, 0.8, -0.5, 1.3};

    // m = 0: block-diagonal pair of Weyl operators.
    const Mat4c sym0 = full_symbol(massless, x, p);
    const Mat4c want0 = block_matrix(op.eval_principal(x, p), Mat2::zero(), Mat2::zero(),
                                     adjugate_operator(op).eval_principal(x, p));
    CHECK(dist(sym0, want0) < 1e-14);

    // m = 1: the off-diagonal blocks carry the mass.
    const Mat4c sym1 = full_symbol(massive, x, p);
    const Mat4c want1 = block_matrix(op.eval_principal(x, p), Mat2::identity(), Mat2::identity(),
                                     adjugate_operator(op).eval_principal(x, p));
    CHECK(dist(sym1, want1) < 1e-14);
}

TEST_CASE("full symbol reference values for the flat operator") {
    const auto op = flat_weyl();
    const Point x{0, 0, 0, 0};

    // m = 0, p = (0,0,0,1): both blocks are s^4, i.e. the 4x4 identity.
    const auto D0 = build_dirac(op, 0.0);
    Mat4c id = Mat4c::zero();
    for (int i = 0; i < 4; ++i) id.at(i, i) = 1.0;
    CHECK(dist(full_symbol(D0, x, {0, 0, 0, 1}), id) < 1e-15);

    // m = 1, p = 0: pure mass blocks [[0, I], [I, 0]].
    const auto D1 = build_dirac(op, 1.0);
    const Mat4c want =
        block_matrix(Mat2::zero(), Mat2::identity(), Mat2::identity(), Mat2::zero());
    CHECK(dist(full_symbol(D1, x, {0, 0, 0, 0}), want) < 1e-15);
}

TEST_CASE("determinant identity of the full symbol") {
    const auto op = flat_weyl();
    const auto D = build_dirac(op, 0.7);
    const Point x{0, 0, 0, 0};
    DetRng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        Momentum p{};
        for (auto& c : p) c = rng.uniform(-2.0, 2.0);
        const cplx det = det4c(full_symbol(D, x, p));
        const cplx inner = op.eval_principal(x, p).det() - 0.7 * 0.7;
        const cplx want = inner * inner;
        CHECK(std::abs(det - want) < 1e-10 * (1.0 + std::abs(want)));
    }

    // With vanishing subprincipal symbols the determinant is a square, hence
    // real and nonnegative.
    for (int trial = 0; trial < 200; ++trial) {
        Momentum p{};
        for (auto& c : p) c = rng.uniform(-3.0, 3.0);
        const cplx det = det4c(full_symbol(D, x, p));
        CHECK(std::abs(det.imag()) < 1e-9 * (1.0 + std::abs(det)));
        CHECK(det.real() > -1e-9 * (1.0 + std::abs(det)));
    }
}

TEST_CASE("apply_dirac basics") {
    const auto op = flat_weyl();
    const auto D0 = build_dirac(op, 0.0);

    // m = 0 with w = 0: the bottom pair vanishes identically.
    DetRng rng(71);
    const TwoColumnField v = random_windowed_field(rng);
    const BispinorField psi = BispinorField::from_halves(v, TwoColumnField());
    for (const auto& x : {Point{0.2, 0.4, -0.3, 0.9}, Point{-0.8, 0.0, 0.5, -0.1}}) {
        const Vec4c out = apply_dirac(D0, psi, x);
        CHECK(std::abs(out[2]) < 1e-15);
        CHECK(std::abs(out[3]) < 1e-15);
    }

    // Constant bispinor, flat massless operator: D psi = 0.
    const BispinorField c = BispinorField::constant(Vec4c{1.0, cplx(0.0, 2.0), -0.5, 0.25});
    const Vec4c z = apply_dirac(D0, c, {0.7, 0.1, -0.4, 0.3});
    for (int i = 0; i < 4; ++i) CHECK(std::abs(z[i]) < 1e-15);

    // Plane wave against the full symbol (Fourier identity).
    const auto D = build_dirac(op, 1.3);
    const Momentum p{0.6, -0.2, 0.8, 0.5};
    const Vec4c u{cplx(0.9, 0.1), cplx(-0.3, 0.4), cplx(0.2, -0.7), cplx(0.0, 1.1)};
    const BispinorField wave = plane_wave_bispinor(u, p);
    for (const auto& x : {Point{0, 0, 0, 0}, Point{0.4, -0.6, 0.2, 0.8}}) {
        Vec4c want = full_symbol(D, x, p) * u;
        const cplx ph = phase_at(p, x);
        for (int i = 0; i < 4; ++i) want[i] *= ph;
        CHECK(dist(apply_dirac(D, wave, x), want) < 1e-13);
    }

    // The field-level application agrees with the pointwise one.
    const BispinorField applied = apply_dirac_field(D, wave);
    const Point x{0.15, 0.35, -0.55, 0.75};
    CHECK(dist(applied.eval(x), apply_dirac(D, wave, x)) < 1e-13);
}

TEST_CASE("mass shell residual reference values") {
    const auto op = flat_weyl();
    const auto D1 = build_dirac(op, 1.0);
    CHECK(mass_shell_residual(D1, {0, 0, 0, 1}) < 1e-14);
    CHECK(mass_shell_residual(D1, {0, 0, 0, 2}) == doctest::Approx(9.0).epsilon(1e-12));

    const auto D0 = build_dirac(op, 0.0);
    CHECK(mass_shell_residual(D0, {1, 0, 0, 1}) < 1e-14);
}

TEST_CASE("kernel certificate: on-shell plane waves solve D psi = 0") {
    const auto op = flat_weyl();
    const double m = 1.0;
    const auto D = build_dirac(op, m);

    DetRng rng(83);
    for (int trial = 0; trial < 5; ++trial) {
        Momentum p{};
        for (int i = 0; i < 3; ++i) p[static_cast<size_t>(i)] = rng.uniform(-2.0, 2.0);
        p[3] = rng.sign() * std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);

        // The full symbol degenerates on the shell.  Certify the null
        // direction through ||M u|| / (smax ||u||), an upper bound for
        // smin/smax that stays well conditioned near zero (extracting smin
        // from eigenvalues of M*M would bottom out around sqrt(eps)*smax).
        const Mat4c M = full_symbol(D, {0, 0, 0, 0}, p);
        const auto sv = singular_values(M);
        const Vec2c v{cplx(1.0, 0.0), cplx(0.5, 0.25)};
        const Vec4c u = flat_kernel_amplitude(p, m, v);
        CHECK(dist(M * u, Vec4c{}) < 1e-10 * sv.smax * dist(u, Vec4c{}));
        const BispinorField psi = plane_wave_bispinor(u, p);
        for (int k = 0; k < 10; ++k) {
            Point x{};
            for (auto& c : x) c = rng.uniform(-1.0, 1.0);
            const Vec4c out = apply_dirac(D, psi, x);
            CHECK(dist(out, Vec4c{}) < 1e-9);
        }
    }
}

TEST_CASE("half-density rescaling") {
    DetRng rng(97);
    const BispinorField psi =
        BispinorField::from_halves(random_windowed_field(rng), random_windowed_field(rng));
    const auto xs = standard_sample_points();

    // Flat metric: |det g| = 1 and the rescaling is the identity.
    const auto flat = extract_metric(flat_weyl());
    const BispinorField same = rescale_half_density(psi, flat, RescaleDirection::to_trad);
    for (const auto& x : xs) CHECK(dist(same.eval(x), psi.eval(x)) < 1e-14);

    // Conformal factor 2: |det g_down| = 1/256, so psi = (1/4) psi_trad.
    const auto conf = extract_metric(catalog_op("conformal?omega=2"));
    const BispinorField scaled = rescale_half_density(psi, conf, RescaleDirection::from_trad);
    for (const auto& x : xs) {
        const Vec4c a = scaled.eval(x);
        const Vec4c b = psi.eval(x);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(a[i] - 0.25 * b[i]) < 1e-13);
    }

    // Round trip on a position-dependent metric.
    const auto curved = extract_metric(catalog_op("conformal?omega=1.5&k=0.2"));
    const BispinorField there = rescale_half_density(psi, curved, RescaleDirection::to_trad);
    const BispinorField back = rescale_half_density(there, curved, RescaleDirection::from_trad);
    for (const auto& x : xs) {
        const Vec4c a = back.eval(x);
        const Vec4c b = psi.eval(x);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12 * (1.0 + std::abs(b[i])));
    }
}

TEST_CASE("rescaled solutions stay solutions when the factor is constant") {
    // Conformal scenario with constant factor: the massless operator kills
    // the null plane wave, and the (constant) rescaling commutes with D.
    const auto op = catalog_op("conformal?omega=2");
    const auto D = build_dirac(op, 0.0);
    const auto g = extract_metric(op);

    const Momentum p{1.0, 0.0, 0.0, 1.0}; // null for the conformal metric too
    const Vec2c v{cplx(1.0, 0.0), cplx(-1.0, 0.0)}; // kernel of s^1 + s^4
    const BispinorField psi =
        BispinorField::from_halves(plane_wave_column(v, p), TwoColumnField());

    const BispinorField trad = rescale_half_density(psi, g, RescaleDirection::to_trad);
    for (const auto& x : standard_sample_points()) {
        CHECK(dist(apply_dirac(D, psi, x), Vec4c{}) < 1e-13);
        CHECK(dist(apply_dirac(D, trad, x), Vec4c{}) < 1e-13);
    }
}

TEST_CASE("identity pushforward returns the operator unchanged") {
    const auto op = catalog_op("scaled-time");
    AffineMap id;
    id.A = Mat4d::identity();
    const auto same = coordinate_pushforward(op, id);
    const auto xs = standard_sample_points();
    for (int al = 0; al < 4; ++al) CHECK(field_dist(same.E(al), op.E(al), xs) < 1e-13);
    CHECK(field_dist(same.S(), op.S(), xs) < 1e-13);
}

TEST_CASE("singular affine maps are rejected") {
    const auto op = flat_weyl();
    AffineMap bad;
    bad.A = Mat4d::zero();
    CHECK_THROWS_AS(coordinate_pushforward(op, bad), SingularJacobian);
}

TEST_CASE("dilation by two: coefficients, metric, and solutions transform") {
    const auto op = flat_weyl();
    AffineMap phi;
    phi.A = 2.0 * Mat4d::identity();
    phi.b = Point{0, 0, 0, 0};
    const auto pushed = coordinate_pushforward(op, phi);
    const auto xs = standard_sample_points();

    // Principal coefficients scale by the Jacobian.
    for (int al = 0; al < 4; ++al)
        for (const auto& x : xs)
            CHECK(dist(pushed.E(al).eval(x), 2.0 * pauli(al + 1)) < 1e-13);

    // The metric transforms tensorially: g'^{ab} = 4 eta^{ab}.
    const auto gp = extract_metric(pushed);
    Mat4d want = 4.0 * Mat4d::identity();
    want.at(3, 3) = -4.0;
    for (const auto& x : xs) CHECK(dist(gp.up_at(x), want) < 1e-10);

    // An on-shell plane wave pushes forward to a solution at half momentum.
    const double m = 1.0;
    const Momentum p{0.6, -0.3, 0.2, std::sqrt(1.0 + 0.49)};
    const Vec4c u = flat_kernel_amplitude(p, m, Vec2c{1.0, cplx(0.5, 0.25)});
    const BispinorField psi = plane_wave_bispinor(u, p);

    const DiracOperator D{op, adjugate_operator(op), m};
    const DiracOperator Dp{pushed, coordinate_pushforward(adjugate_operator(op), phi), m};
    const BispinorField pushedPsi = pushforward_half_density(psi, phi);

    DetRng rng(59);
    for (int k = 0; k < 20; ++k) {
        Point xp{};
        for (auto& c : xp) c = rng.uniform(-1.0, 1.0);
        CHECK(dist(apply_dirac(D, psi, xp), Vec4c{}) < 1e-9);
        CHECK(dist(apply_dirac(Dp, pushedPsi, xp), Vec4c{}) < 1e-9);

        // The pushed field is the half-momentum wave scaled by |det A|^{-1/2}.
        const cplx wantPhase = 0.25 * phase_at({p[0] / 2, p[1] / 2, p[2] / 2, p[3] / 2}, xp);
        CHECK(std::abs(pushedPsi.at(0).eval(xp) - wantPhase * u[0]) < 1e-13);
    }
}

TEST_CASE("pushforward preserves formal self-adjointness") {
    const auto op = flat_weyl(0.5 * pauli(2));
    AffineMap phi;
    phi.A = Mat4d::identity();
    phi.A.at(0, 1) = 0.3;
    phi.A.at(2, 2) = 1.2;
    phi.b = Point{0.1, -0.2, 0.0, 0.4};
    const auto pushed = coordinate_pushforward(op, phi);

    const QuadratureSpec quad{5.6, 25};
    DetRng rng(61);
    const TwoColumnField v = random_windowed_field(rng);
    const TwoColumnField w = random_windowed_field(rng);
    const cplx lhs = inner_product(pushed.apply(v), w, quad);
    const cplx rhs = inner_product(v, pushed.apply(w), quad);
    CHECK(std::abs(lhs - rhs) < 1e-6 * field_norm(v, quad) * field_norm(w, quad));
}
