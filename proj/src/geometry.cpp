#include "symcalc/geometry.hpp"

#include <cmath>

#include "symcalc/errors.hpp"

namespace symcalc {

namespace {

// det of the 2x2 matrix field sum_alpha E^alpha p_alpha at constant p, as a
// real scalar field. The determinant of a Hermitian matrix is real, so the
// imaginary component of the symbolic determinant evaluates to roundoff; the
// real part is the value.
ScalarField principal_det(const FirstOrderOperator& op, const Momentum& p) {
    Matrix2Field m;
    for (int al = 0; al < 4; ++al) {
        const double pa = p[static_cast<size_t>(al)];
        if (pa != 0.0) m = m + ScalarField::constant(pa) * op.E(al);
    }
    const ComplexField det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    return det.re();
}

// Symbolic 3x3 determinant of the entries of `up` with row r and column c
// removed.
ScalarField minor3_field(const std::array<std::array<ScalarField, 4>, 4>& a, int r, int c) {
    ScalarField v[9];
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        if (i == r) continue;
        for (int j = 0; j < 4; ++j) {
            if (j == c) continue;
            v[k++] = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    }
    return v[0] * (v[4] * v[8] - v[5] * v[7]) - v[1] * (v[3] * v[8] - v[5] * v[6]) +
           v[2] * (v[3] * v[7] - v[4] * v[6]);
}

} // namespace

Mat4d Metric::up_at(const Point& x) const {
    Mat4d g;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            g.at(a, b) = up[static_cast<size_t>(a)][static_cast<size_t>(b)].eval(x);
    return g;
}

Mat4d Metric::down_at(const Point& x) const { return inverse4(up_at(x)); }

double Metric::det_down_at(const Point& x) const { return 1.0 / det_up.eval(x); }

Metric extract_metric(const FirstOrderOperator& op) {
    Metric g;
    // Diagonal: g^{aa} = -q(delta^a). Off-diagonal by polarization:
    // g^{ab} = -(1/2) [q(delta^a + delta^b) - q(delta^a) - q(delta^b)].
    std::array<ScalarField, 4> qd;
    for (int a = 0; a < 4; ++a) {
        Momentum p{};
        p[static_cast<size_t>(a)] = 1.0;
        qd[static_cast<size_t>(a)] = principal_det(op, p);
        g.up[static_cast<size_t>(a)][static_cast<size_t>(a)] = -qd[static_cast<size_t>(a)];
    }
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            Momentum p{};
            p[static_cast<size_t>(a)] = 1.0;
            p[static_cast<size_t>(b)] = 1.0;
            const ScalarField gab =
                -0.5 * (principal_det(op, p) - qd[static_cast<size_t>(a)] - qd[static_cast<size_t>(b)]);
            g.up[static_cast<size_t>(a)][static_cast<size_t>(b)] = gab;
            g.up[static_cast<size_t>(b)][static_cast<size_t>(a)] = gab;
        }

    // det g^.. by cofactor expansion along the first row, then the downstairs
    // metric as adjugate / determinant.
    g.det_up = ScalarField::constant(0);
    for (int j = 0; j < 4; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        g.det_up = g.det_up + sign * (g.up[0][static_cast<size_t>(j)] * minor3_field(g.up, 0, j));
    }
    g.det_down = pow_int(g.det_up, -1);
    const ScalarField inv_det = g.det_down;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const double sign = ((a + b) % 2 == 0) ? 1.0 : -1.0;
            // adj(up)_{ab} = cofactor_{ba}; up is symmetric so the transpose
            // is immaterial, kept for clarity.
            g.down[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                (sign * minor3_field(g.up, b, a)) * inv_det;
        }

    for (const auto& x : standard_sample_points())
        if (std::abs(g.det_up.eval(x)) < 1e-12) throw SingularMetric(x);
    return g;
}

LorentzianReport check_lorentzian(const Metric& g, const std::vector<Point>& xs) {
    LorentzianReport rep;
    rep.min_margin = -1.0;
    for (const auto& x : xs) {
        const auto ev = symmetric_eigenvalues(g.up_at(x)); // ascending
        double radius = 0.0;
        for (double l : ev) radius = std::max(radius, std::abs(l));
        const double floor = 1e-8 * radius;
        for (double l : ev)
            if (std::abs(l) < floor) throw NearDegenerate(x);
        int positive = 0, negative = 0;
        for (double l : ev) (l > 0 ? positive : negative)++;
        if (positive != 3 || negative != 1) throw WrongSignature(x, ev);
        double margin = std::abs(ev[0]) / radius;
        for (double l : ev) margin = std::min(margin, std::abs(l) / radius);
        if (rep.min_margin < 0.0 || margin < rep.min_margin) {
            rep.min_margin = margin;
            rep.worst = x;
            rep.worst_eigenvalues = ev;
        }
    }
    if (rep.min_margin < 0.0) rep.min_margin = 0.0;
    rep.pass = true;
    return rep;
}

Frame extract_frame(const FirstOrderOperator& op) {
    Frame f;
    std::array<std::array<ScalarField, 4>, 4> im_part;
    for (int j = 0; j < 4; ++j) {
        const Matrix2Field sj = Matrix2Field::pauli_field(j + 1);
        for (int al = 0; al < 4; ++al) {
            const ComplexField tr = (sj * op.E(al)).trace();
            f.e[static_cast<size_t>(j)][static_cast<size_t>(al)] = 0.5 * tr.re();
            im_part[static_cast<size_t>(j)][static_cast<size_t>(al)] = tr.im();
        }
    }
    // tr(s^j E^alpha) is real whenever E^alpha is Hermitian; a residue here
    // means the operator's symbols were not what construction vetted.
    for (const auto& x : standard_sample_points())
        for (int j = 0; j < 4; ++j)
            for (int al = 0; al < 4; ++al) {
                const double im =
                    im_part[static_cast<size_t>(j)][static_cast<size_t>(al)].eval(x);
                if (std::abs(im) > 1e-12 * (1.0 + std::abs(f.e[static_cast<size_t>(j)][static_cast<size_t>(al)].eval(x))))
                    throw NonHermitianSymbol("frame trace", std::abs(im));
            }
    return f;
}

Mat4d Frame::at(const Point& x) const {
    Mat4d m;
    for (int j = 0; j < 4; ++j)
        for (int al = 0; al < 4; ++al)
            m.at(j, al) = e[static_cast<size_t>(j)][static_cast<size_t>(al)].eval(x);
    return m;
}

CheckReport check_orthonormality(const Frame& f, const Metric& g, const std::vector<Point>& xs,
                                 double tol) {
    CheckReport rep;
    for (const auto& x : xs) {
        const Mat4d e = f.at(x);
        const Mat4d gd = g.down_at(x);
        // gram_{jk} = g_{alpha beta} e_j^alpha e_k^beta = (e gd e^T)_{jk}
        const Mat4d gram = e * gd * e.transposed();
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                const double target = (j != k) ? 0.0 : (j == 3 ? -1.0 : 1.0);
                const double r = std::abs(gram.at(j, k) - target);
                if (r > rep.max_residual) {
                    rep.max_residual = r;
                    rep.worst = x;
                }
                if (r > tol) throw OrthonormalityViolation(x, j + 1, k + 1, gram.at(j, k));
            }
    }
    rep.pass = true;
    return rep;
}

} // namespace symcalc
