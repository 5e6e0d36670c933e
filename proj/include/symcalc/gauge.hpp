#pragma once

// SL(2,C) gauge action on operators, the generalized Poisson bracket on
// matrix symbols, and the covariant subprincipal symbol with its covariance
// verifier.

#include <vector>

#include "symcalc/geometry.hpp"
#include "symcalc/operator.hpp"

namespace symcalc {

class GaugeMap {
public:
    // Validates |det R - 1| < 1e-10 at the standard sample points.
    explicit GaugeMap(Matrix2Field R);

    const Matrix2Field& R() const { return R_; }
    Mat2 at(const Point& x) const { return R_.eval(x); }

    static GaugeMap identity();

private:
    Matrix2Field R_;
};

// The action-level transformation L -> R* L R on local coefficients:
// F'^alpha = R* F^alpha R, G' = R* G R + R* F^alpha dR/dx^alpha.
FirstOrderOperator apply_gauge(const FirstOrderOperator& op, const GaugeMap& R);

// Polynomial-in-p symbol of degree <= 2 with matrix-field coefficients:
// P(x,p) = c0 + c1[a] p_a + c2[a][b] p_a p_b.
struct MatrixSymbol {
    Matrix2Field c0;
    std::array<Matrix2Field, 4> c1;
    std::array<std::array<Matrix2Field, 4>, 4> c2;
    int degree = 0; // 0, 1, or 2

    static MatrixSymbol constant(const Matrix2Field& m);
    static MatrixSymbol linear(const std::array<Matrix2Field, 4>& coeff); // sum coeff[a] p_a

    Mat2 eval(const Point& x, const Momentum& p) const;
    MatrixSymbol dx(int axis) const;
    MatrixSymbol dp(int axis) const; // degree drops by one
    // d^2/dp_a dp_b (a constant-in-p matrix field).
    Matrix2Field dpdp(int a, int b) const;
};

MatrixSymbol operator*(const MatrixSymbol& a, const MatrixSymbol& b); // throws if degree > 2
MatrixSymbol operator+(const MatrixSymbol& a, const MatrixSymbol& b);
MatrixSymbol operator-(const MatrixSymbol& a, const MatrixSymbol& b);

// {F,G,H} = F_{x^a} G H_{p_a} - F_{p_a} G H_{x^a}.
MatrixSymbol poisson_bracket3(const MatrixSymbol& F, const MatrixSymbol& G, const MatrixSymbol& H);

struct CovariantSubSymbol {
    Matrix2Field field;
    Mat2 at(const Point& x) const { return field.eval(x); }
};

// The bracket correction term (i/16) g_{ab} (T^{ab} + T^{ba}) with
// T^{mu nu} = sum_g [ E^mu_{x^g} (adj E^nu) E^g - E^g (adj E^nu) E^mu_{x^g} ],
// the closed form of the bracket's second momentum derivative. This is the
// production path; the generic bracket route exists as a test oracle.
Matrix2Field csub_correction(const std::array<Matrix2Field, 4>& E, const Metric& g);

// L_csub = L_sub + correction. Verifies Hermiticity (1e-10) at the standard
// sample points; a violation is an internal-consistency error, not input
// noise, so no symmetrization is applied. Pre: g extracted from op.
CovariantSubSymbol covariant_subprincipal(const FirstOrderOperator& op, const Metric& g);

// Oracle path: same quantity via the generic bracket on degree-1 symbols and
// symbolic p-differentiation of the degree-2 result.
Matrix2Field covariant_subprincipal_via_bracket(const FirstOrderOperator& op, const Metric& g);

// Covariance certificate: || L_csub(R*LR) - R* L_csub(L) R || <
// tol * (1 + ||L_csub||) at every x. Throws CovarianceViolation.
CheckReport verify_csub_covariance(const FirstOrderOperator& op, const GaugeMap& R,
                                   const std::vector<Point>& xs, double tol = 1e-8);

} // namespace symcalc
