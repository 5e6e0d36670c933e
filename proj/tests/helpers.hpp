#pragma once

// Shared builders and distance helpers for the test binaries.

#include <array>
#include <cmath>
#include <vector>

#include "symcalc/harness.hpp"

namespace testutil {

using namespace symcalc;

inline double dist(const Mat2& a, const Mat2& b) {
    Mat2 d = a;
    d -= b;
    return d.norm();
}

inline double dist(const Vec2c& a, const Vec2c& b) {
    double s = 0.0;
    for (int i = 0; i < 2; ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

inline double dist(const Vec4c& a, const Vec4c& b) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

inline double dist(const Mat4c& a, const Mat4c& b) { return (a - b).norm(); }

inline double dist(const Mat4d& a, const Mat4d& b) { return max_abs(a - b); }

// Pointwise distance between two matrix fields over a point set.
inline double field_dist(const Matrix2Field& a, const Matrix2Field& b,
                         const std::vector<Point>& xs) {
    double worst = 0.0;
    for (const auto& x : xs) worst = std::max(worst, dist(a.eval(x), b.eval(x)));
    return worst;
}

// The flat Weyl operator E^alpha = s^alpha with an arbitrary constant
// subprincipal symbol.
inline FirstOrderOperator flat_weyl(const Mat2& sub = Mat2::zero()) {
    std::array<Matrix2Field, 4> E;
    for (int al = 0; al < 4; ++al) E[al] = Matrix2Field::pauli_field(al + 1);
    return FirstOrderOperator::from_symbols(E, Matrix2Field::constant(sub));
}

inline FirstOrderOperator catalog_op(const std::string& name) {
    return build_operator(load_scenario(name));
}

// u e^{i p.x} as a 2-column field.
inline TwoColumnField plane_wave_column(const Vec2c& u, const Momentum& p) {
    return plane_wave(p) * TwoColumnField::constant(u);
}

// The flat principal symbol sum_alpha s^alpha p_alpha evaluated directly.
inline Mat2 flat_principal(const Momentum& p) {
    Mat2 out = Mat2::zero();
    for (int al = 0; al < 4; ++al) out += p[static_cast<size_t>(al)] * pauli(al + 1);
    return out;
}

// On-shell bispinor amplitude (v, -P v / m) for the flat Dirac operator.
inline Vec4c flat_kernel_amplitude(const Momentum& p, double m, const Vec2c& v) {
    const Mat2 P = flat_principal(p);
    const Vec2c Pv = P * v;
    return Vec4c{v[0], v[1], -Pv[0] / m, -Pv[1] / m};
}

} // namespace testutil
