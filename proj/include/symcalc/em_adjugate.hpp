#pragma once

// Electromagnetic covector potential (the unique real A with
// L_csub(x) = L_prin(x, A(x))) and the adjugate operator, whose principal
// and covariant subprincipal symbols are matrix adjugates of the original's.

#include <vector>

#include "symcalc/gauge.hpp"

namespace symcalc {

struct CovectorPotential {
    // Solved per point from the frame system e_j^alpha A_alpha = c_j; the
    // fields below are the exact closed-form solution (adjugate over
    // determinant), so evaluation IS the on-demand solve.
    std::array<ScalarField, 4> A;

    std::array<double, 4> at(const Point& x) const;
};

// Decomposes L_csub over the Pauli basis (c_j = (1/2) tr(s^j L_csub)) and
// solves the frame system for A. Checks at the standard sample points:
// frame condition number below 1e8 (else IllConditionedFrame), solved
// components real to 1e-10, and the re-substitution residual
// ||L_prin(x, A(x)) - L_csub(x)|| < 1e-9.
CovectorPotential extract_potential(const FirstOrderOperator& op);

// Variant that reuses already-extracted geometry (same semantics).
CovectorPotential extract_potential(const FirstOrderOperator& op, const Metric& g,
                                    const Frame& f, const CovariantSubSymbol& csub);

// Adj L: principal coefficients adj E^alpha; subprincipal symbol chosen so
// that the covariant subprincipal symbol of the result equals
// adj(L_csub(op)). The bracket correction of the adjugated coefficients is
// evaluated against the SAME metric (adjugation preserves it, since
// det adj M = det M for 2x2 matrices).
FirstOrderOperator adjugate_operator(const FirstOrderOperator& op);

struct AdjugationReport {
    bool pass = true;
    double involution_residual = 0.0; // symbols of Adj Adj op vs op
    double metric_residual = 0.0;     // gUp of Adj op vs op
    double potential_residual = 0.0;  // A of Adj op vs op
    Point worst{};
};

// The three adjugation laws: involution to 1e-10, metric invariance to
// 1e-10, potential invariance to 1e-9. Throws AdjugationLawViolation.
AdjugationReport verify_adjugation_laws(const FirstOrderOperator& op,
                                        const std::vector<Point>& xs);

} // namespace symcalc
