#pragma once

// The 4x4 Dirac operator D = [[L, m I], [m I, Adj L]] acting on bispinor
// half-densities, plus the half-density rescaling to the traditional
// metric-based normalization and affine coordinate pushforwards.

#include "symcalc/em_adjugate.hpp"

namespace symcalc {

struct DiracOperator {
    FirstOrderOperator L;
    FirstOrderOperator AdjL;
    double m = 0.0;
};

// Throws NegativeMass for m < 0. AdjL is constructed via adjugate_operator.
DiracOperator build_dirac(const FirstOrderOperator& op, double m);

// D psi: top = L v + m w, bottom = m v + Adj L w for psi = (v, w).
Vec4c apply_dirac(const DiracOperator& D, const BispinorField& psi, const Point& x);
BispinorField apply_dirac_field(const DiracOperator& D, const BispinorField& psi);

// Pointwise full symbol [[L_prin + L_sub, m I], [m I, AdjL_prin + AdjL_sub]];
// for constant-coefficient blocks this is exactly the plane-wave action.
Mat4c full_symbol(const DiracOperator& D, const Point& x, const Momentum& p);

// |det full_symbol| at the origin. Intended for constant-coefficient D with
// vanishing subprincipal symbols, where it vanishes exactly on the mass
// shell -g^{alpha beta} p_alpha p_beta = m^2.
double mass_shell_residual(const DiracOperator& D, const Momentum& p);

enum class RescaleDirection {
    to_trad,  // psi_trad = |det g_..|^{-1/4} psi
    from_trad // psi = |det g_..|^{+1/4} psi_trad
};

// Componentwise rescaling between the half-density normalization and the
// traditional one. Throws SingularMetric if det g_.. degenerates on the
// sample patch.
BispinorField rescale_half_density(const BispinorField& psi, const Metric& g,
                                   RescaleDirection direction);

// x' = A x + b.
struct AffineMap {
    Mat4d A;
    Point b{};
};

// The operator in coordinates x' = phi(x), acting on pushed-forward
// half-densities v'(x') = |det A|^{-1/2} v(phi^{-1}(x')). Coefficients
// transform by the chain rule; the constant half-density factor cancels
// between the two sides. Throws SingularJacobian.
FirstOrderOperator coordinate_pushforward(const FirstOrderOperator& op, const AffineMap& phi);

// The half-density pushforward itself, for fields.
TwoColumnField pushforward_half_density(const TwoColumnField& v, const AffineMap& phi);
BispinorField pushforward_half_density(const BispinorField& psi, const AffineMap& phi);

} // namespace symcalc
