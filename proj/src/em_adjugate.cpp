#include "symcalc/em_adjugate.hpp"

#include <cmath>

#include "symcalc/errors.hpp"

namespace symcalc {

std::array<double, 4> CovectorPotential::at(const Point& x) const {
    return {A[0].eval(x), A[1].eval(x), A[2].eval(x), A[3].eval(x)};
}

CovectorPotential extract_potential(const FirstOrderOperator& op) {
    const Metric g = extract_metric(op);
    const Frame f = extract_frame(op);
    const CovariantSubSymbol csub = covariant_subprincipal(op, g);
    return extract_potential(op, g, f, csub);
}

CovectorPotential extract_potential(const FirstOrderOperator& op, const Metric&, const Frame& f,
                                    const CovariantSubSymbol& csub) {
    // Pauli coordinates of L_csub: c_j = (1/2) tr(s^j L_csub). Hermitian
    // L_csub makes them real; the imaginary residue is vetted below.
    std::array<ScalarField, 4> c, c_im;
    for (int j = 0; j < 4; ++j) {
        const ComplexField tr = (Matrix2Field::pauli_field(j + 1) * csub.field).trace();
        c[static_cast<size_t>(j)] = 0.5 * tr.re();
        c_im[static_cast<size_t>(j)] = 0.5 * tr.im();
    }

    // Solve e_j^alpha A_alpha = c_j in closed form: A = e^{-1} c with the
    // inverse as adjugate / determinant, all exact fields.
    ScalarField det_e = ScalarField::constant(0);
    {
        // Cofactor expansion along the first row of e[j][alpha].
        for (int al = 0; al < 4; ++al) {
            ScalarField v[9];
            int k = 0;
            for (int j = 1; j < 4; ++j)
                for (int b = 0; b < 4; ++b) {
                    if (b == al) continue;
                    v[k++] = f.e[static_cast<size_t>(j)][static_cast<size_t>(b)];
                }
            const ScalarField m3 = v[0] * (v[4] * v[8] - v[5] * v[7]) -
                                   v[1] * (v[3] * v[8] - v[5] * v[6]) +
                                   v[2] * (v[3] * v[7] - v[4] * v[6]);
            const double sign = (al % 2 == 0) ? 1.0 : -1.0;
            det_e = det_e + sign * (f.e[0][static_cast<size_t>(al)] * m3);
        }
    }
    const ScalarField inv_det = pow_int(det_e, -1);

    CovectorPotential pot;
    for (int al = 0; al < 4; ++al) {
        ScalarField acc = ScalarField::constant(0);
        for (int j = 0; j < 4; ++j) {
            // (e^{-1})_{alpha j} = cofactor_{j alpha} / det.
            ScalarField v[9];
            int k = 0;
            for (int jj = 0; jj < 4; ++jj) {
                if (jj == j) continue;
                for (int b = 0; b < 4; ++b) {
                    if (b == al) continue;
                    v[k++] = f.e[static_cast<size_t>(jj)][static_cast<size_t>(b)];
                }
            }
            const ScalarField m3 = v[0] * (v[4] * v[8] - v[5] * v[7]) -
                                   v[1] * (v[3] * v[8] - v[5] * v[6]) +
                                   v[2] * (v[3] * v[7] - v[4] * v[6]);
            const double sign = ((j + al) % 2 == 0) ? 1.0 : -1.0;
            acc = acc + sign * (m3 * c[static_cast<size_t>(j)]);
        }
        pot.A[static_cast<size_t>(al)] = acc * inv_det;
    }

    // Pointwise vetting at the standard sample points: conditioning of the
    // frame system, realness of the Pauli coordinates, and re-substitution.
    const auto xs = standard_sample_points();
    std::vector<ScalarField> scalars(pot.A.begin(), pot.A.end());
    for (int j = 0; j < 4; ++j) scalars.push_back(c_im[static_cast<size_t>(j)]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            scalars.push_back(csub.field.at(i, j).re());
            scalars.push_back(csub.field.at(i, j).im());
        }
    const Compiled tape(scalars);
    std::vector<double> out;
    for (const auto& x : xs) {
        const Mat4d e = f.at(x);
        const double cond = condition_number(e);
        if (!(cond < 1e8)) throw IllConditionedFrame(x, cond);
        tape.eval(x, out);
        for (int j = 0; j < 4; ++j)
            if (std::abs(out[static_cast<size_t>(4 + j)]) > 1e-10)
                throw Error("potential component has nonvanishing imaginary part");
        Mat2 csub_val;
        for (int k = 0; k < 4; ++k)
            csub_val.m[static_cast<size_t>(k)] = {out[static_cast<size_t>(8 + 2 * k)],
                                                  out[static_cast<size_t>(8 + 2 * k + 1)]};
        Momentum a{out[0], out[1], out[2], out[3]};
        const Mat2 resub = op.eval_principal(x, a) - csub_val;
        if (resub.norm() >= 1e-9)
            throw Error("potential re-substitution residual exceeds 1e-9");
    }
    return pot;
}

FirstOrderOperator adjugate_operator(const FirstOrderOperator& op) {
    const Metric g = extract_metric(op);
    std::array<Matrix2Field, 4> E, adjE;
    for (int al = 0; al < 4; ++al) {
        E[static_cast<size_t>(al)] = op.E(al);
        adjE[static_cast<size_t>(al)] = op.E(al).adjugate();
    }
    const Matrix2Field csub = op.S() + csub_correction(E, g);
    // Target: csub(Adj L) = adj(csub(L)). Subtract the correction the
    // adjugated coefficients will regenerate, against the same metric.
    const Matrix2Field s_adj = csub.adjugate() - csub_correction(adjE, g);
    return FirstOrderOperator::from_symbols(adjE, s_adj);
}

AdjugationReport verify_adjugation_laws(const FirstOrderOperator& op,
                                        const std::vector<Point>& xs) {
    AdjugationReport rep;
    const FirstOrderOperator adj = adjugate_operator(op);
    const FirstOrderOperator back = adjugate_operator(adj);

    // (i) involution on symbols.
    {
        std::vector<ScalarField> scalars;
        auto push = [&scalars](const Matrix2Field& m) {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    scalars.push_back(m.at(i, j).re());
                    scalars.push_back(m.at(i, j).im());
                }
        };
        for (int al = 0; al < 4; ++al) push(back.E(al) - op.E(al));
        push(back.S() - op.S());
        for (int al = 0; al < 4; ++al) push(op.E(al));
        push(op.S());
        const Compiled tape(scalars);
        std::vector<double> out;
        for (const auto& x : xs) {
            tape.eval(x, out);
            double diff = 0.0, scale = 0.0;
            for (size_t k = 0; k < 40; ++k) diff += out[k] * out[k];
            for (size_t k = 40; k < 80; ++k) scale += out[k] * out[k];
            const double r = std::sqrt(diff) / (1.0 + std::sqrt(scale));
            if (r > rep.involution_residual) {
                rep.involution_residual = r;
                rep.worst = x;
            }
            if (r >= 1e-10) throw AdjugationLawViolation("involution", x, r);
        }
    }

    // (ii) metric invariance.
    {
        const Metric g0 = extract_metric(op);
        const Metric g1 = extract_metric(adj);
        for (const auto& x : xs) {
            const Mat4d d = g1.up_at(x) - g0.up_at(x);
            const double r = max_abs(d) / (1.0 + max_abs(g0.up_at(x)));
            if (r > rep.metric_residual) rep.metric_residual = r;
            if (r >= 1e-10) throw AdjugationLawViolation("metric", x, r);
        }
    }

    // (iii) potential invariance.
    {
        const CovectorPotential a0 = extract_potential(op);
        const CovectorPotential a1 = extract_potential(adj);
        for (const auto& x : xs) {
            const auto v0 = a0.at(x);
            const auto v1 = a1.at(x);
            double r = 0.0;
            for (int al = 0; al < 4; ++al)
                r = std::max(r, std::abs(v1[static_cast<size_t>(al)] - v0[static_cast<size_t>(al)]));
            if (r > rep.potential_residual) rep.potential_residual = r;
            if (r >= 1e-9) throw AdjugationLawViolation("potential", x, r);
        }
    }

    rep.pass = true;
    return rep;
}

} // namespace symcalc
