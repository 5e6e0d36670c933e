#include "symcalc/dirac.hpp"

#include <cmath>

#include "symcalc/errors.hpp"

namespace symcalc {

DiracOperator build_dirac(const FirstOrderOperator& op, double m) {
    if (m < 0.0) throw NegativeMass(m);
    return {op, adjugate_operator(op), m};
}

Vec4c apply_dirac(const DiracOperator& D, const BispinorField& psi, const Point& x) {
    const TwoColumnField v = psi.top();
    const TwoColumnField w = psi.bottom();
    const Vec2c lv = D.L.apply_at(v, x);
    const Vec2c aw = D.AdjL.apply_at(w, x);
    const Vec2c vv = v.eval(x);
    const Vec2c ww = w.eval(x);
    Vec4c r;
    r[0] = lv[0] + D.m * ww[0];
    r[1] = lv[1] + D.m * ww[1];
    r[2] = D.m * vv[0] + aw[0];
    r[3] = D.m * vv[1] + aw[1];
    return r;
}

BispinorField apply_dirac_field(const DiracOperator& D, const BispinorField& psi) {
    const TwoColumnField v = psi.top();
    const TwoColumnField w = psi.bottom();
    const ComplexField mass = ComplexField::constant(cplx(D.m, 0));
    const TwoColumnField top = D.L.apply(v) + mass * w;
    const TwoColumnField bottom = mass * v + D.AdjL.apply(w);
    return BispinorField::from_halves(top, bottom);
}

Mat4c full_symbol(const DiracOperator& D, const Point& x, const Momentum& p) {
    const Mat2 tl = D.L.eval_principal(x, p) + D.L.eval_sub(x);
    const Mat2 br = D.AdjL.eval_principal(x, p) + D.AdjL.eval_sub(x);
    Mat4c s;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            s.at(i, j) = tl.at(i, j);
            s.at(i + 2, j + 2) = br.at(i, j);
        }
    s.at(0, 2) = D.m;
    s.at(1, 3) = D.m;
    s.at(2, 0) = D.m;
    s.at(3, 1) = D.m;
    return s;
}

double mass_shell_residual(const DiracOperator& D, const Momentum& p) {
    const Point origin{};
    return std::abs(det4c(full_symbol(D, origin, p)));
}

BispinorField rescale_half_density(const BispinorField& psi, const Metric& g,
                                   RescaleDirection direction) {
    // |det g_..| = (-det g^..)^{-1} for Lorentzian signature, so the factor
    // |det g_..|^{+-1/4} is (-det g^..)^{-+1/4}, an exact positive-base power.
    for (const auto& x : standard_sample_points())
        if (!(-g.det_up.eval(x) > 1e-12)) throw SingularMetric(x);
    const ScalarField base = -g.det_up;
    const double exponent = direction == RescaleDirection::to_trad ? 0.25 : -0.25;
    const ScalarField factor = pow_real(base, exponent);
    BispinorField r;
    for (int i = 0; i < 4; ++i) r.at(i) = factor * psi.at(i);
    return r;
}

FirstOrderOperator coordinate_pushforward(const FirstOrderOperator& op, const AffineMap& phi) {
    const double det = det4(phi.A);
    if (std::abs(det) < 1e-12) throw SingularJacobian();
    const Mat4d inv = inverse4(phi.A);
    // phi^{-1}(x') = A^{-1} x' - A^{-1} b, fed to the coefficient fields.
    std::array<std::array<double, 4>, 4> sub{};
    Point shift{};
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j) {
            sub[static_cast<size_t>(i)][static_cast<size_t>(j)] = inv.at(i, j);
            s -= inv.at(i, j) * phi.b[static_cast<size_t>(j)];
        }
        shift[static_cast<size_t>(i)] = s;
    }
    // F'^beta(x') = A^beta_alpha F^alpha(phi^{-1}(x')); G'(x') = G(phi^{-1}(x')).
    std::array<Matrix2Field, 4> Fp;
    for (int be = 0; be < 4; ++be) {
        Matrix2Field acc;
        for (int al = 0; al < 4; ++al) {
            const double a = phi.A.at(be, al);
            if (a != 0.0)
                acc = acc + ScalarField::constant(a) * op.F(al).substitute_affine(sub, shift);
        }
        Fp[static_cast<size_t>(be)] = acc;
    }
    const Matrix2Field Gp = op.G().substitute_affine(sub, shift);
    return FirstOrderOperator::assemble(Fp, Gp);
}

namespace {

void pushforward_parts(const AffineMap& phi, std::array<std::array<double, 4>, 4>& sub,
                       Point& shift, double& scale) {
    const double det = det4(phi.A);
    if (std::abs(det) < 1e-12) throw SingularJacobian();
    const Mat4d inv = inverse4(phi.A);
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j) {
            sub[static_cast<size_t>(i)][static_cast<size_t>(j)] = inv.at(i, j);
            s -= inv.at(i, j) * phi.b[static_cast<size_t>(j)];
        }
        shift[static_cast<size_t>(i)] = s;
    }
    scale = 1.0 / std::sqrt(std::abs(det));
}

} // namespace

TwoColumnField pushforward_half_density(const TwoColumnField& v, const AffineMap& phi) {
    std::array<std::array<double, 4>, 4> sub{};
    Point shift{};
    double scale = 1.0;
    pushforward_parts(phi, sub, shift, scale);
    TwoColumnField r = v.substitute_affine(sub, shift);
    return ScalarField::constant(scale) * r;
}

BispinorField pushforward_half_density(const BispinorField& psi, const AffineMap& phi) {
    std::array<std::array<double, 4>, 4> sub{};
    Point shift{};
    double scale = 1.0;
    pushforward_parts(phi, sub, shift, scale);
    BispinorField r;
    for (int i = 0; i < 4; ++i)
        r.at(i) = ScalarField::constant(scale) * psi.at(i).substitute_affine(sub, shift);
    return r;
}

} // namespace symcalc
