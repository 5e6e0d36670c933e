// Scalar fields: exact evaluation, exact derivatives against the
// finite-difference oracle, affine substitution, and the compiled tape.

#include <cmath>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"

using namespace symcalc;

namespace {

ScalarField x(int axis) { return ScalarField::coordinate(axis); }

} // namespace

TEST_CASE("constants and coordinates evaluate exactly") {
    const Point p{0.3, -1.2, 2.0, 0.7};
    CHECK(ScalarField::constant(2.5).eval(p) == 2.5);
    for (int a = 0; a < 4; ++a) CHECK(x(a).eval(p) == p[static_cast<size_t>(a)]);
}

TEST_CASE("arithmetic and elementary functions evaluate exactly") {
    const Point p{0.4, -0.9, 1.3, -0.2};
    const ScalarField f = (x(0) + 2.0 * x(1)) * x(2) - x(3);
    CHECK(f.eval(p) == doctest::Approx((0.4 - 1.8) * 1.3 + 0.2).epsilon(1e-15));

    CHECK(sin(x(0)).eval(p) == doctest::Approx(std::sin(0.4)).epsilon(1e-15));
    CHECK(cos(x(1)).eval(p) == doctest::Approx(std::cos(-0.9)).epsilon(1e-15));
    CHECK(exp(x(2)).eval(p) == doctest::Approx(std::exp(1.3)).epsilon(1e-15));
    CHECK(pow_int(x(2), 3).eval(p) == doctest::Approx(1.3 * 1.3 * 1.3).epsilon(1e-15));
    CHECK(pow_int(x(2), -2).eval(p) == doctest::Approx(1.0 / (1.3 * 1.3)).epsilon(1e-15));
    CHECK(pow_real(exp(x(0)), 0.5).eval(p) == doctest::Approx(std::exp(0.2)).epsilon(1e-14));
}

TEST_CASE("derivatives are exact calculus, cross-checked by finite differences") {
    // A deliberately tangled expression touching every node kind.
    const ScalarField f = sin(x(0) * x(1)) + exp(0.3 * x(2)) * cos(x(3)) +
                          pow_int(1.0 + x(1) * x(1), -1) + pow_real(2.0 + sin(x(0)), 1.7);

    DetRng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Point p{};
        for (auto& c : p) c = rng.uniform(-1.0, 1.0);
        const int dir = rng.index(4);
        const double exact = f.derivative(dir).eval(p);
        const double fd = fd_oracle(f, p, dir);
        const double scale = 1.0 + std::abs(exact);
        CAPTURE(trial);
        CAPTURE(dir);
        CHECK(std::abs(exact - fd) / scale < 1e-6);
    }
}

TEST_CASE("second derivatives commute") {
    const ScalarField f = exp(x(0) * x(1)) * sin(x(2) - 2.0 * x(3));
    const Point p{0.5, -0.3, 0.8, 0.1};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const double ab = f.derivative(a).derivative(b).eval(p);
            const double ba = f.derivative(b).derivative(a).eval(p);
            CHECK(std::abs(ab - ba) < 1e-12 * (1.0 + std::abs(ab)));
        }
}

TEST_CASE("affine substitution composes evaluation and the chain rule") {
    const ScalarField f = sin(x(0)) * x(1) + exp(0.2 * x(3)) - x(2) * x(2);

    std::array<std::array<double, 4>, 4> m{};
    m[0] = {1.2, 0.1, 0.0, 0.0};
    m[1] = {0.0, 1.0, -0.15, 0.0};
    m[2] = {0.0, 0.05, 1.1, 0.0};
    m[3] = {0.08, 0.0, 0.0, 0.9};
    const Point shift{0.3, -0.2, 0.1, 0.05};

    const ScalarField g = f.substitute_affine(m, shift);

    DetRng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Point p{};
        for (auto& c : p) c = rng.uniform(-1.0, 1.0);
        Point q = shift;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                q[static_cast<size_t>(r)] +=
                    m[static_cast<size_t>(r)][static_cast<size_t>(c)] * p[static_cast<size_t>(c)];
        CHECK(std::abs(g.eval(p) - f.eval(q)) < 1e-13 * (1.0 + std::abs(f.eval(q))));

        // Chain rule: dg/dx^a = sum_r (df/dx^r)(q) * m[r][a].
        for (int a = 0; a < 4; ++a) {
            double want = 0.0;
            for (int r = 0; r < 4; ++r)
                want += f.derivative(r).eval(q) * m[static_cast<size_t>(r)][static_cast<size_t>(a)];
            CHECK(std::abs(g.derivative(a).eval(p) - want) < 1e-12 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("constant folding flags") {
    CHECK(ScalarField::constant(0.0).is_zero());
    CHECK((x(0) - x(0)).eval({1, 2, 3, 4}) == 0.0);
    double v = 0.0;
    CHECK(ScalarField::constant(3.5).is_constant(&v));
    CHECK(v == 3.5);
    CHECK_FALSE(x(2).is_zero());
}

TEST_CASE("compiled tape reproduces tree evaluation") {
    std::vector<ScalarField> fields;
    fields.push_back(sin(x(0) * x(1)) + exp(0.3 * x(2)));
    fields.push_back(fields[0].derivative(1));
    fields.push_back(pow_real(2.0 + cos(x(3)), 1.3) - x(0));

    const Compiled tape(fields);
    REQUIRE(tape.size() == fields.size());

    std::vector<double> out;
    DetRng rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Point p{};
        for (auto& c : p) c = rng.uniform(-2.0, 2.0);
        tape.eval(p, out);
        for (size_t i = 0; i < fields.size(); ++i) {
            const double want = fields[i].eval(p);
            CHECK(std::abs(out[i] - want) < 1e-14 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("finite-difference oracle reference values") {
    // Constant field: exactly zero.
    CHECK(fd_oracle(ScalarField::constant(4.2), {0.1, 0.2, 0.3, 0.4}, 2) == 0.0);

    // f = x^1 x^2 is linear in direction 1, so central differences are exact.
    const ScalarField f = x(0) * x(1);
    CHECK(std::abs(fd_oracle(f, {2.0, 3.0, 0.0, 0.0}, 0) - 3.0) < 1e-9);

    // Truncation-limited case: error bounded by h^2/6 |f'''|.
    CHECK(std::abs(fd_oracle(sin(x(0)), {0.7, 0.0, 0.0, 0.0}, 0) - std::cos(0.7)) < 1e-6);
}

TEST_CASE("complex fields: arithmetic, conjugation, plane waves") {
    const ComplexField z(x(0), x(1)); // x^1 + i x^2
    const Point p{0.6, -0.4, 0.0, 0.0};
    CHECK(std::abs(z.eval(p) - cplx(0.6, -0.4)) < 1e-15);
    CHECK(std::abs(z.conj().eval(p) - cplx(0.6, 0.4)) < 1e-15);
    CHECK(std::abs((z * z).eval(p) - cplx(0.6, -0.4) * cplx(0.6, -0.4)) < 1e-15);

    // cexp(i t) traces the unit circle.
    const ComplexField u = cexp(ComplexField(ScalarField::constant(0.0), x(2)));
    const Point q{0, 0, 1.1, 0};
    CHECK(std::abs(u.eval(q) - std::polar(1.0, 1.1)) < 1e-15);

    // plane_wave differentiates to i p_alpha times itself.
    const Momentum k{0.3, -0.7, 0.2, 0.9};
    const ComplexField w = plane_wave(k);
    const Point r{0.25, -0.5, 0.75, -1.0};
    for (int a = 0; a < 4; ++a) {
        const cplx want = cplx(0.0, k[static_cast<size_t>(a)]) * w.eval(r);
        CHECK(std::abs(w.derivative(a).eval(r) - want) < 1e-14);
    }
}
