#include "symcalc/spin_structure.hpp"

#include <algorithm>
#include <cmath>

#include "symcalc/errors.hpp"

namespace symcalc {

namespace {

void require_metric_match(const ReferencePair& ref, const Metric& gop, const Point& x) {
    const Mat4d a = ref.metric.up_at(x);
    const Mat4d b = gop.up_at(x);
    const double r = max_abs(a - b);
    if (r >= 1e-8 * (1.0 + max_abs(a))) throw MetricMismatch(x, r);
}

double chi_c_value(const ReferencePair& ref, const Frame& opFrame, const Metric& gop,
                   const Point& x) {
    require_metric_match(ref, gop, x);
    // Lower the reference frame with the shared metric, then the full wedge
    // contraction collapses to a product of determinants.
    const Mat4d e_ref = ref.frame.at(x);
    const Mat4d gd = ref.metric.down_at(x);
    const Mat4d lowered = e_ref * gd; // lowered_{j alpha} = e_j^beta g_{beta alpha}
    const double c = -det4(lowered) * det4(opFrame.at(x));
    if (std::abs(std::abs(c) - 1.0) >= 1e-9) throw NotUnitValue(x, c);
    return c;
}

double chi_t_value(const ReferencePair& ref, const Frame& opFrame, const Metric& gop,
                   const Point& x) {
    require_metric_match(ref, gop, x);
    const Mat4d gd = ref.metric.down_at(x);
    const Mat4d e_ref = ref.frame.at(x);
    const Mat4d e_op = opFrame.at(x);
    double t = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t -= gd.at(a, b) * e_ref.at(3, b) * e_op.at(3, a);
    if (std::abs(t) < 1e-9) throw VanishingT(x);
    return t;
}

// All 24 permutations of {0,1,2,3} with parities.
struct Perm {
    int p[4];
    double sign;
};

const std::vector<Perm>& permutations4() {
    static const std::vector<Perm> perms = [] {
        std::vector<Perm> ps;
        std::vector<int> v{0, 1, 2, 3};
        do {
            Perm q{};
            int inversions = 0;
            for (int i = 0; i < 4; ++i) {
                q.p[i] = v[static_cast<size_t>(i)];
                for (int j = i + 1; j < 4; ++j)
                    if (v[static_cast<size_t>(i)] > v[static_cast<size_t>(j)]) ++inversions;
            }
            q.sign = (inversions % 2 == 0) ? 1.0 : -1.0;
            ps.push_back(q);
        } while (std::next_permutation(v.begin(), v.end()));
        return ps;
    }();
    return perms;
}

} // namespace

ReferencePair ReferencePair::make(const FirstOrderOperator& refOp) {
    refOp.check_nondegeneracy(standard_sample_points());
    ReferencePair ref{refOp, extract_frame(refOp), extract_metric(refOp)};
    return ref;
}

double chi_c(const ReferencePair& ref, const FirstOrderOperator& op, const Point& x) {
    return chi_c_value(ref, extract_frame(op), extract_metric(op), x);
}

double chi_c_epsilon(const ReferencePair& ref, const FirstOrderOperator& op, const Point& x) {
    const Metric gop = extract_metric(op);
    require_metric_match(ref, gop, x);
    const Mat4d e_ref = ref.frame.at(x);
    const Mat4d gd = ref.metric.down_at(x);
    const Mat4d lowered = e_ref * gd;
    const Mat4d e_op = extract_frame(op).at(x);

    // (f_1 ^ f_2 ^ f_3 ^ f_4)_{k l m n} = sum over permutations s of
    // sgn(s) f_{s(1) k} f_{s(2) l} f_{s(3) m} f_{s(4) n}, and the value is
    // -(1/4!) of the full 4-index contraction of the two wedges.
    const auto& perms = permutations4();
    double acc = 0.0;
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
            for (int m = 0; m < 4; ++m)
                for (int n = 0; n < 4; ++n) {
                    double w_low = 0.0, w_up = 0.0;
                    for (const auto& s : perms) {
                        w_low += s.sign * lowered.at(s.p[0], k) * lowered.at(s.p[1], l) *
                                 lowered.at(s.p[2], m) * lowered.at(s.p[3], n);
                        w_up += s.sign * e_op.at(s.p[0], k) * e_op.at(s.p[1], l) *
                                e_op.at(s.p[2], m) * e_op.at(s.p[3], n);
                    }
                    acc += w_low * w_up;
                }
    return -acc / 24.0;
}

double chi_t(const ReferencePair& ref, const FirstOrderOperator& op, const Point& x) {
    return chi_t_value(ref, extract_frame(op), extract_metric(op), x);
}

ClassificationTag classify(const ReferencePair& ref, const FirstOrderOperator& op,
                           const std::vector<Point>& xs) {
    const Frame f = extract_frame(op);
    const Metric g = extract_metric(op);
    ClassificationTag tag;
    bool first = true;
    Point first_x{};
    for (const auto& x : xs) {
        const int sc = chi_c_value(ref, f, g, x) > 0 ? +1 : -1;
        const int st = chi_t_value(ref, f, g, x) > 0 ? +1 : -1;
        if (first) {
            tag.sign_c = sc;
            tag.sign_t = st;
            first_x = x;
            first = false;
        } else if (sc != tag.sign_c || st != tag.sign_t) {
            throw InconsistentSigns(first_x, x);
        }
    }
    return tag;
}

WitnessReport check_equivalence_witness(const FirstOrderOperator& opA,
                                        const FirstOrderOperator& opB, const GaugeMap& R,
                                        const std::vector<Point>& xs) {
    const ReferencePair ref = ReferencePair::make(opA);
    const ClassificationTag plus{+1, +1};
    if (!(classify(ref, opA, xs) == plus)) throw NotInPositiveClass("first operator");
    if (!(classify(ref, opB, xs) == plus)) throw NotInPositiveClass("second operator");

    WitnessReport rep;
    for (const auto& x : xs) {
        const Mat2 r = R.at(x);
        const Mat2 rs = r.adjoint();
        for (int al = 0; al < 4; ++al) {
            Momentum p{};
            p[static_cast<size_t>(al)] = 1.0;
            const Mat2 lhs = opB.eval_principal(x, p);
            const Mat2 rhs = rs * opA.eval_principal(x, p) * r;
            const double res = (lhs - rhs).norm();
            if (res > rep.max_residual) {
                rep.max_residual = res;
                rep.worst_x = x;
                rep.worst_p = p;
            }
            if (res >= 1e-8) throw WitnessFails(x, p, res);
        }
    }
    rep.pass = true;
    return rep;
}

} // namespace symcalc
