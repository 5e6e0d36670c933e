#include "symcalc/gauge.hpp"

#include <cmath>
#include <stdexcept>

#include "symcalc/errors.hpp"

namespace symcalc {

GaugeMap::GaugeMap(Matrix2Field R) : R_(std::move(R)) {
    for (const auto& x : standard_sample_points()) {
        const Mat2 r = R_.eval(x);
        if (std::abs(r.det() - cplx(1, 0)) >= 1e-10)
            throw Error("gauge map determinant differs from 1 beyond 1e-10");
    }
}

GaugeMap GaugeMap::identity() { return GaugeMap(Matrix2Field::identity()); }

FirstOrderOperator apply_gauge(const FirstOrderOperator& op, const GaugeMap& R) {
    const Matrix2Field r = R.R();
    const Matrix2Field rs = r.adjoint();
    std::array<Matrix2Field, 4> Fp;
    Matrix2Field Gp = rs * op.G() * r;
    for (int al = 0; al < 4; ++al) {
        Fp[static_cast<size_t>(al)] = rs * op.F(al) * r;
        Gp = Gp + rs * op.F(al) * r.derivative(al);
    }
    return FirstOrderOperator::assemble(Fp, Gp);
}

MatrixSymbol MatrixSymbol::constant(const Matrix2Field& m) {
    MatrixSymbol s;
    s.c0 = m;
    s.degree = 0;
    return s;
}

MatrixSymbol MatrixSymbol::linear(const std::array<Matrix2Field, 4>& coeff) {
    MatrixSymbol s;
    s.c1 = coeff;
    s.degree = 1;
    return s;
}

Mat2 MatrixSymbol::eval(const Point& x, const Momentum& p) const {
    Mat2 v = c0.eval(x);
    if (degree >= 1)
        for (int a = 0; a < 4; ++a) v += p[static_cast<size_t>(a)] * c1[static_cast<size_t>(a)].eval(x);
    if (degree >= 2)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                v += (p[static_cast<size_t>(a)] * p[static_cast<size_t>(b)]) *
                     c2[static_cast<size_t>(a)][static_cast<size_t>(b)].eval(x);
    return v;
}

MatrixSymbol MatrixSymbol::dx(int axis) const {
    MatrixSymbol s;
    s.degree = degree;
    s.c0 = c0.derivative(axis);
    if (degree >= 1)
        for (int a = 0; a < 4; ++a)
            s.c1[static_cast<size_t>(a)] = c1[static_cast<size_t>(a)].derivative(axis);
    if (degree >= 2)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                s.c2[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                    c2[static_cast<size_t>(a)][static_cast<size_t>(b)].derivative(axis);
    return s;
}

MatrixSymbol MatrixSymbol::dp(int axis) const {
    // d/dp_axis: c1[axis] becomes degree 0; c2 rows/columns touching axis
    // become degree 1.
    MatrixSymbol s;
    s.degree = degree > 0 ? degree - 1 : 0;
    if (degree >= 1) s.c0 = c1[static_cast<size_t>(axis)];
    if (degree >= 2)
        for (int a = 0; a < 4; ++a)
            s.c1[static_cast<size_t>(a)] = c2[static_cast<size_t>(axis)][static_cast<size_t>(a)] +
                                           c2[static_cast<size_t>(a)][static_cast<size_t>(axis)];
    return s;
}

Matrix2Field MatrixSymbol::dpdp(int a, int b) const {
    if (degree < 2) return {};
    return c2[static_cast<size_t>(a)][static_cast<size_t>(b)] +
           c2[static_cast<size_t>(b)][static_cast<size_t>(a)];
}

MatrixSymbol operator*(const MatrixSymbol& a, const MatrixSymbol& b) {
    if (a.degree + b.degree > 2)
        throw std::logic_error("matrix symbol product exceeds degree 2");
    MatrixSymbol r;
    r.degree = a.degree + b.degree;
    r.c0 = a.c0 * b.c0;
    for (int i = 0; i < 4; ++i) {
        r.c1[static_cast<size_t>(i)] = a.c0 * b.c1[static_cast<size_t>(i)] +
                                       a.c1[static_cast<size_t>(i)] * b.c0;
        for (int j = 0; j < 4; ++j)
            r.c2[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                a.c0 * b.c2[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                a.c1[static_cast<size_t>(i)] * b.c1[static_cast<size_t>(j)] +
                a.c2[static_cast<size_t>(i)][static_cast<size_t>(j)] * b.c0;
    }
    return r;
}

MatrixSymbol operator+(const MatrixSymbol& a, const MatrixSymbol& b) {
    MatrixSymbol r;
    r.degree = std::max(a.degree, b.degree);
    r.c0 = a.c0 + b.c0;
    for (int i = 0; i < 4; ++i) {
        r.c1[static_cast<size_t>(i)] = a.c1[static_cast<size_t>(i)] + b.c1[static_cast<size_t>(i)];
        for (int j = 0; j < 4; ++j)
            r.c2[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                a.c2[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                b.c2[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return r;
}

MatrixSymbol operator-(const MatrixSymbol& a, const MatrixSymbol& b) {
    MatrixSymbol r;
    r.degree = std::max(a.degree, b.degree);
    r.c0 = a.c0 - b.c0;
    for (int i = 0; i < 4; ++i) {
        r.c1[static_cast<size_t>(i)] = a.c1[static_cast<size_t>(i)] - b.c1[static_cast<size_t>(i)];
        for (int j = 0; j < 4; ++j)
            r.c2[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                a.c2[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                b.c2[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return r;
}

MatrixSymbol poisson_bracket3(const MatrixSymbol& F, const MatrixSymbol& G,
                              const MatrixSymbol& H) {
    MatrixSymbol acc;
    acc.degree = 0;
    for (int a = 0; a < 4; ++a)
        acc = acc + (F.dx(a) * G * H.dp(a) - F.dp(a) * G * H.dx(a));
    return acc;
}

Matrix2Field csub_correction(const std::array<Matrix2Field, 4>& E, const Metric& g) {
    // Precompute derivatives and adjugates once.
    std::array<std::array<Matrix2Field, 4>, 4> dE; // dE[mu][gamma] = dE^mu/dx^gamma
    std::array<Matrix2Field, 4> adjE;
    for (int mu = 0; mu < 4; ++mu) {
        adjE[static_cast<size_t>(mu)] = E[static_cast<size_t>(mu)].adjugate();
        for (int ga = 0; ga < 4; ++ga)
            dE[static_cast<size_t>(mu)][static_cast<size_t>(ga)] =
                E[static_cast<size_t>(mu)].derivative(ga);
    }
    auto T = [&](int mu, int nu) {
        Matrix2Field t;
        for (int ga = 0; ga < 4; ++ga) {
            const auto& dEmu = dE[static_cast<size_t>(mu)][static_cast<size_t>(ga)];
            const auto& a = adjE[static_cast<size_t>(nu)];
            const auto& Eg = E[static_cast<size_t>(ga)];
            t = t + (dEmu * a * Eg - Eg * a * dEmu);
        }
        return t;
    };
    Matrix2Field corr;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const Matrix2Field sym = T(a, b) + T(b, a);
            corr = corr + g.down[static_cast<size_t>(a)][static_cast<size_t>(b)] * sym;
        }
    return cplx(0, 1.0 / 16.0) * corr;
}

CovariantSubSymbol covariant_subprincipal(const FirstOrderOperator& op, const Metric& g) {
    std::array<Matrix2Field, 4> E;
    for (int al = 0; al < 4; ++al) E[static_cast<size_t>(al)] = op.E(al);
    const Matrix2Field csub = op.S() + csub_correction(E, g);
    // Hermiticity is a correctness certificate here; no symmetrization band.
    std::vector<ScalarField> scalars;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            scalars.push_back(csub.at(i, j).re());
            scalars.push_back(csub.at(i, j).im());
        }
    const Compiled tape(scalars);
    const auto xs = standard_sample_points();
    std::vector<Mat2> values;
    values.reserve(xs.size());
    double scale = 0.0;
    std::vector<double> out;
    for (const auto& x : xs) {
        tape.eval(x, out);
        Mat2 m;
        for (int k = 0; k < 4; ++k) m.m[static_cast<size_t>(k)] = {out[2 * k], out[2 * k + 1]};
        scale = std::max(scale, m.norm());
        values.push_back(m);
    }
    for (size_t i = 0; i < xs.size(); ++i) {
        const double defect = (values[i] - values[i].adjoint()).norm();
        if (defect > 1e-10 * (1.0 + scale)) throw NonHermitianResult("L_csub", defect);
    }
    return {csub};
}

Matrix2Field covariant_subprincipal_via_bracket(const FirstOrderOperator& op, const Metric& g) {
    std::array<Matrix2Field, 4> E, adjE;
    for (int al = 0; al < 4; ++al) {
        E[static_cast<size_t>(al)] = op.E(al);
        adjE[static_cast<size_t>(al)] = op.E(al).adjugate();
    }
    const MatrixSymbol prin = MatrixSymbol::linear(E);
    const MatrixSymbol adj_prin = MatrixSymbol::linear(adjE);
    const MatrixSymbol bracket = poisson_bracket3(prin, adj_prin, prin);
    Matrix2Field corr;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            corr = corr + g.down[static_cast<size_t>(a)][static_cast<size_t>(b)] * bracket.dpdp(a, b);
    return op.S() + cplx(0, 1.0 / 16.0) * corr;
}

CheckReport verify_csub_covariance(const FirstOrderOperator& op, const GaugeMap& R,
                                   const std::vector<Point>& xs, double tol) {
    const Metric g = extract_metric(op);
    const Matrix2Field csub = covariant_subprincipal(op, g).field;

    const FirstOrderOperator gauged = apply_gauge(op, R);
    const Metric gg = extract_metric(gauged);
    const Matrix2Field csub_gauged = covariant_subprincipal(gauged, gg).field;

    // Delta = L_csub(R*LR) - R* L_csub(L) R, evaluated via one shared tape.
    const Matrix2Field rfield = R.R();
    const Matrix2Field conjugated = rfield.adjoint() * csub * rfield;
    const Matrix2Field delta = csub_gauged - conjugated;

    std::vector<ScalarField> scalars;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            scalars.push_back(delta.at(i, j).re());
            scalars.push_back(delta.at(i, j).im());
            scalars.push_back(csub.at(i, j).re());
            scalars.push_back(csub.at(i, j).im());
        }
    const Compiled tape(scalars);

    CheckReport rep;
    std::vector<double> out;
    for (const auto& x : xs) {
        tape.eval(x, out);
        double dnorm = 0.0, cnorm = 0.0;
        for (int k = 0; k < 4; ++k) {
            dnorm += out[4 * k] * out[4 * k] + out[4 * k + 1] * out[4 * k + 1];
            cnorm += out[4 * k + 2] * out[4 * k + 2] + out[4 * k + 3] * out[4 * k + 3];
        }
        dnorm = std::sqrt(dnorm);
        cnorm = std::sqrt(cnorm);
        const double rel = dnorm / (1.0 + cnorm);
        if (rel > rep.max_residual) {
            rep.max_residual = rel;
            rep.worst = x;
        }
        if (rel >= tol) throw CovarianceViolation(x, rel);
    }
    rep.pass = true;
    return rep;
}

} // namespace symcalc
