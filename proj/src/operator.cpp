#include "symcalc/operator.hpp"

#include <cmath>
#include <sstream>

#include "symcalc/errors.hpp"

namespace symcalc {

namespace {

constexpr double kHermitianAccept = 1e-12;
constexpr double kHermitianRepair = 1e-9;

double field_scale(const Matrix2Field& M, const std::vector<Point>& xs) {
    double scale = 0.0;
    for (const auto& x : xs) scale = std::max(scale, M.eval(x).norm());
    return scale;
}

// Largest Hermitian defect of a matrix field over the standard sample
// points, relative to the operator's overall symbol scale. Measuring against
// a shared scale matters: a subprincipal symbol that cancels to pure
// rounding dust is Hermitian for every practical purpose, but against its
// own (vanishing) norm the dust would read as defect 2.
double field_defect(const Matrix2Field& M, const std::vector<Point>& xs, double scale) {
    if (scale == 0.0) return 0.0; // the whole operator vanishes
    double worst = 0.0;
    for (const auto& x : xs) {
        const Mat2 m = M.eval(x);
        worst = std::max(worst, (m - m.adjoint()).norm() / scale);
    }
    return worst;
}

// Applies the accept/repair/reject band to one symbol field.
Matrix2Field vet_symbol(const Matrix2Field& M, const std::vector<Point>& xs, double scale,
                        const std::string& where, bool& repaired) {
    const double defect = field_defect(M, xs, scale);
    if (defect <= kHermitianAccept) return M;
    if (defect <= kHermitianRepair) {
        repaired = true;
        return M.hermitized();
    }
    throw NonHermitianSymbol(where, defect);
}

} // namespace

FirstOrderOperator FirstOrderOperator::build(const std::array<Matrix2Field, 4>& E,
                                             const Matrix2Field& S) {
    FirstOrderOperator op;
    bool repaired = false;
    const auto xs = standard_sample_points();
    double scale = field_scale(S, xs);
    for (int al = 0; al < 4; ++al)
        scale = std::max(scale, field_scale(E[static_cast<size_t>(al)], xs));
    for (int al = 0; al < 4; ++al) {
        std::ostringstream os;
        os << "E^" << (al + 1);
        op.E_[static_cast<size_t>(al)] =
            vet_symbol(E[static_cast<size_t>(al)], xs, scale, os.str(), repaired);
    }
    op.S_ = vet_symbol(S, xs, scale, "S", repaired);
    op.symmetrized_ = repaired;
    // F^alpha = -i E^alpha, G = S - (i/2) sum dE/dx.
    const cplx mi(0, -1);
    Matrix2Field div;
    for (int al = 0; al < 4; ++al) {
        op.F_[static_cast<size_t>(al)] = mi * op.E_[static_cast<size_t>(al)];
        div = div + op.E_[static_cast<size_t>(al)].derivative(al);
    }
    op.G_ = op.S_ - cplx(0, 0.5) * div;
    return op;
}

FirstOrderOperator FirstOrderOperator::from_symbols(const std::array<Matrix2Field, 4>& E,
                                                    const Matrix2Field& S) {
    return build(E, S);
}

FirstOrderOperator FirstOrderOperator::assemble(const std::array<Matrix2Field, 4>& F,
                                                const Matrix2Field& G) {
    // E^alpha = i F^alpha; S = G + (i/2) sum dE/dx.
    const cplx i(0, 1);
    std::array<Matrix2Field, 4> E;
    Matrix2Field div;
    for (int al = 0; al < 4; ++al) {
        E[static_cast<size_t>(al)] = i * F[static_cast<size_t>(al)];
        div = div + E[static_cast<size_t>(al)].derivative(al);
    }
    const Matrix2Field S = G + cplx(0, 0.5) * div;
    return build(E, S);
}

Mat2 FirstOrderOperator::eval_principal(const Point& x, const Momentum& p) const {
    Mat2 r;
    for (int al = 0; al < 4; ++al)
        r += p[static_cast<size_t>(al)] * E_[static_cast<size_t>(al)].eval(x);
    return r;
}

std::array<Mat2, 4> FirstOrderOperator::eval_E(const Point& x) const {
    std::array<Mat2, 4> r;
    for (int al = 0; al < 4; ++al) r[static_cast<size_t>(al)] = E_[static_cast<size_t>(al)].eval(x);
    return r;
}

Mat2 FirstOrderOperator::eval_sub(const Point& x) const { return S_.eval(x); }

NondegeneracyReport FirstOrderOperator::check_nondegeneracy(const std::vector<Point>& xs,
                                                            int nP) const {
    const auto ps = momentum_sphere_sample(nP);
    NondegeneracyReport rep;
    double worst = -1.0;
    double scale = 0.0;
    for (const auto& x : xs) {
        const auto E = eval_E(x);
        for (const auto& p : ps) {
            Mat2 m;
            for (int al = 0; al < 4; ++al) m += p[static_cast<size_t>(al)] * E[static_cast<size_t>(al)];
            const double v = m.norm();
            scale = std::max(scale, v);
            if (worst < 0.0 || v < worst) {
                worst = v;
                rep.worst_x = x;
                rep.worst_p = p;
            }
        }
    }
    rep.worst_value = worst < 0.0 ? 0.0 : worst;
    rep.scale = scale;
    rep.pass = rep.worst_value > 1e-8 * scale;
    return rep;
}

void FirstOrderOperator::require_nondegenerate() const {
    const auto rep = check_nondegeneracy(standard_sample_points());
    if (!rep.pass) throw DegeneratePrincipalSymbol(rep.worst_x, rep.worst_p);
}

TwoColumnField FirstOrderOperator::apply(const TwoColumnField& v) const {
    TwoColumnField r = G_ * v;
    for (int al = 0; al < 4; ++al) r = r + F_[static_cast<size_t>(al)] * v.derivative(al);
    return r;
}

Vec2c FirstOrderOperator::apply_at(const TwoColumnField& v, const Point& x) const {
    return apply(v).eval(x);
}

FirstOrderOperator FirstOrderOperator::negated() const {
    std::array<Matrix2Field, 4> E;
    for (int al = 0; al < 4; ++al) E[static_cast<size_t>(al)] = -E_[static_cast<size_t>(al)];
    return build(E, -S_);
}

cplx inner_product(const TwoColumnField& v, const TwoColumnField& w, const QuadratureSpec& grid) {
    // <v, w> = int w* v dx: compile the integrand once, then sweep the box.
    const ComplexField integrand = w.at(0).conj() * v.at(0) + w.at(1).conj() * v.at(1);
    const Compiled tape({integrand.re(), integrand.im()});

    const int n = grid.points_per_axis < 2 ? 2 : grid.points_per_axis;
    const double a = grid.half_width;
    const double h = 2.0 * a / (n - 1);
    std::vector<double> out;
    double acc_re = 0.0, acc_im = 0.0;
    Point x;
    for (int i0 = 0; i0 < n; ++i0) {
        x[0] = -a + h * i0;
        const double w0 = (i0 == 0 || i0 == n - 1) ? 0.5 : 1.0;
        for (int i1 = 0; i1 < n; ++i1) {
            x[1] = -a + h * i1;
            const double w1 = w0 * ((i1 == 0 || i1 == n - 1) ? 0.5 : 1.0);
            for (int i2 = 0; i2 < n; ++i2) {
                x[2] = -a + h * i2;
                const double w2 = w1 * ((i2 == 0 || i2 == n - 1) ? 0.5 : 1.0);
                for (int i3 = 0; i3 < n; ++i3) {
                    x[3] = -a + h * i3;
                    const double w3 = w2 * ((i3 == 0 || i3 == n - 1) ? 0.5 : 1.0);
                    tape.eval(x, out);
                    acc_re += w3 * out[0];
                    acc_im += w3 * out[1];
                }
            }
        }
    }
    const double cell = h * h * h * h;
    return {acc_re * cell, acc_im * cell};
}

double field_norm(const TwoColumnField& v, const QuadratureSpec& grid) {
    return std::sqrt(std::max(0.0, inner_product(v, v, grid).real()));
}

} // namespace symcalc
