#pragma once

// Geometry encoded in the principal symbol: the Lorentzian metric recovered
// from det L_prin via polarization, and the orthonormal frame recovered by
// Pauli decomposition of the principal coefficients.

#include <vector>

#include "symcalc/operator.hpp"

namespace symcalc {

// Shared shape for pointwise verification results.
struct CheckReport {
    bool pass = true;
    double max_residual = 0.0;
    Point worst{};
};

struct Metric {
    // g^{alpha beta} and g_{alpha beta} as exact expression fields; the
    // downstairs components are adjugate/determinant ratios so that symbolic
    // consumers (the covariant correction term) keep exact derivatives.
    std::array<std::array<ScalarField, 4>, 4> up;
    std::array<std::array<ScalarField, 4>, 4> down;
    ScalarField det_up;   // det g^{alpha beta}
    ScalarField det_down; // det g_{alpha beta} = 1 / det_up

    Mat4d up_at(const Point& x) const;
    // Pointwise closed-form inversion of up_at; identical algebra to the
    // symbolic `down` fields.
    Mat4d down_at(const Point& x) const;
    double det_down_at(const Point& x) const;
};

struct Frame {
    // e[j][alpha]: row j enumerates frame vectors, j = 3 (the fourth row) is
    // the timelike one.
    std::array<std::array<ScalarField, 4>, 4> e;

    Mat4d at(const Point& x) const; // rows j, columns alpha
};

// Metric from the determinant of the principal symbol,
// det L_prin(x,p) = -g^{alpha beta} p_alpha p_beta, read off by polarization:
// 10 determinant evaluations at basis and basis-sum momenta.
// Requires (pre) that op passes check_nondegeneracy.
Metric extract_metric(const FirstOrderOperator& op);

struct LorentzianReport {
    bool pass = true;
    // Smallest |eigenvalue| relative to the spectral radius over all points.
    double min_margin = 0.0;
    Point worst{};
    std::array<double, 4> worst_eigenvalues{};
};

// Asserts signature (+,+,+,-) pointwise: exactly three eigenvalues above
// +1e-8 * scale and one below -1e-8 * scale. Throws WrongSignature /
// NearDegenerate.
LorentzianReport check_lorentzian(const Metric& g, const std::vector<Point>& xs);

// Frame by trace decomposition: e_j^alpha = (1/2) Re tr(s^j E^alpha).
// The imaginary part of the trace is checked to vanish at the standard
// sample points (it must, for Hermitian E^alpha).
Frame extract_frame(const FirstOrderOperator& op);

// Asserts g_{alpha beta} e_j^alpha e_k^beta = diag-Lorentz values (0 off the
// diagonal, 1 for j = k in 1..3, -1 for j = k = 4) to 1e-9. Throws
// OrthonormalityViolation.
CheckReport check_orthonormality(const Frame& f, const Metric& g, const std::vector<Point>& xs,
                                 double tol = 1e-9);

} // namespace symcalc
