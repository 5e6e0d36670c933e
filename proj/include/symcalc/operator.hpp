#pragma once

// The first-order 2x2 operator L = F^alpha d/dx^alpha + G acting on
// half-density 2-columns, stored through its invariant symbols: principal
// coefficients E^alpha (so L_prin(x,p) = E^alpha(x) p_alpha) and the
// subprincipal symbol S = L_sub. The local coefficients are derived:
//   F^alpha = -i E^alpha,   G = S - (i/2) sum_alpha dE^alpha/dx^alpha.
// Formal self-adjointness of L is exactly the Hermiticity of E^alpha and S,
// which is what construction validates.

#include <array>
#include <optional>
#include <vector>

#include "symcalc/fields.hpp"
#include "symcalc/linalg.hpp"
#include "symcalc/sampling.hpp"

namespace symcalc {

struct NondegeneracyReport {
    bool pass = false;
    // Smallest matrix norm of L_prin over all sampled (x, p), and the largest
    // (the scale the margin is measured against).
    double worst_value = 0.0;
    double scale = 0.0;
    Point worst_x{};
    Momentum worst_p{};
};

class FirstOrderOperator {
public:
    // Construction from invariant symbols (E, S) or from local coefficients
    // (F, G); both validate Hermiticity of E and S at the standard sample
    // points. Defects below 1e-12 (relative) pass as-is; defects below 1e-9
    // are symmetrized with a warning flag; anything larger throws.
    static FirstOrderOperator from_symbols(const std::array<Matrix2Field, 4>& E,
                                           const Matrix2Field& S);
    static FirstOrderOperator assemble(const std::array<Matrix2Field, 4>& F,
                                       const Matrix2Field& G);

    const Matrix2Field& E(int alpha) const { return E_[static_cast<size_t>(alpha)]; }
    const Matrix2Field& S() const { return S_; }
    const Matrix2Field& F(int alpha) const { return F_[static_cast<size_t>(alpha)]; }
    const Matrix2Field& G() const { return G_; }

    bool was_symmetrized() const { return symmetrized_; }

    // L_prin(x,p) = sum_alpha E^alpha(x) p_alpha.
    Mat2 eval_principal(const Point& x, const Momentum& p) const;
    std::array<Mat2, 4> eval_E(const Point& x) const;
    Mat2 eval_sub(const Point& x) const;

    // Samples L_prin over xs and a deterministic S^3 momentum set and checks
    // the matrix never comes close to vanishing. Non-degeneracy demands the
    // *matrix* (equivalently its norm) stays away from zero for all p != 0 —
    // not its smallest singular value, which legitimately hits zero on the
    // light cone of every admissible operator.
    NondegeneracyReport check_nondegeneracy(const std::vector<Point>& xs, int nP = 256) const;
    // Same check at the standard sample points; throws DegeneratePrincipalSymbol.
    void require_nondegenerate() const;

    // Lv = F^alpha dv/dx^alpha + G v, as a field and at a point.
    TwoColumnField apply(const TwoColumnField& v) const;
    Vec2c apply_at(const TwoColumnField& v, const Point& x) const;

    // -L (negates both symbols).
    FirstOrderOperator negated() const;

private:
    FirstOrderOperator() = default;
    static FirstOrderOperator build(const std::array<Matrix2Field, 4>& E, const Matrix2Field& S);

    std::array<Matrix2Field, 4> E_;
    Matrix2Field S_;
    std::array<Matrix2Field, 4> F_;
    Matrix2Field G_;
    bool symmetrized_ = false;
};

struct QuadratureSpec {
    double half_width = 4.8; // box [-half, half]^4
    int points_per_axis = 17;
};

// Trapezoidal approximation of the half-density pairing <v, w> = int w* v dx
// over the quadrature box. Fields must decay inside the box (window them).
cplx inner_product(const TwoColumnField& v, const TwoColumnField& w,
                   const QuadratureSpec& grid = {});

// sqrt(Re <v, v>).
double field_norm(const TwoColumnField& v, const QuadratureSpec& grid = {});

} // namespace symcalc
