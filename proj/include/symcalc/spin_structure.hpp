#pragma once

// Classification of operators sharing a metric: the orientation scalar c and
// the time-orientation scalar t against a reference operator, the four-class
// tag they induce, and witness-based spin-structure equivalence.

#include <vector>

#include "symcalc/gauge.hpp"

namespace symcalc {

struct ClassificationTag {
    int sign_c = +1;
    int sign_t = +1;

    bool operator==(const ClassificationTag&) const = default;
};

struct ReferencePair {
    FirstOrderOperator op;
    Frame frame;
    Metric metric;

    // Extracts the frame and metric; requires the reference to pass
    // non-degeneracy at the standard sample points.
    static ReferencePair make(const FirstOrderOperator& refOp);
};

// c = -(1/4!) (ref-frame wedge)_low (op-frame wedge)_up, evaluated as
// -det(ref frame lowered) * det(op frame); |c| must be 1 to 1e-9 (throws
// NotUnitValue). Requires the metrics to agree at x to 1e-8 (MetricMismatch).
double chi_c(const ReferencePair& ref, const FirstOrderOperator& op, const Point& x);

// Oracle route: the same contraction spelled out as the alternating 4!-term
// wedge sums over all 256 index tuples. Validates the determinant shortcut
// and the index conventions.
double chi_c_epsilon(const ReferencePair& ref, const FirstOrderOperator& op, const Point& x);

// t = -g_{alpha beta} refe_4^beta e_4^alpha; must not vanish (VanishingT).
double chi_t(const ReferencePair& ref, const FirstOrderOperator& op, const Point& x);

// Signs of (c, t) at every x; must be constant over xs (else
// InconsistentSigns).
ClassificationTag classify(const ReferencePair& ref, const FirstOrderOperator& op,
                           const std::vector<Point>& xs);

struct WitnessReport {
    bool pass = false;
    double max_residual = 0.0;
    Point worst_x{};
    Momentum worst_p{};
};

// Verifies R as an equivalence witness between opA and opB: both must
// classify (+1,+1) against the reference built from opA (NotInPositiveClass
// otherwise), and the principal symbols must satisfy
// ||opB_prin - R* opA_prin R|| < 1e-8 at every x in xs and each basis
// momentum (WitnessFails otherwise).
WitnessReport check_equivalence_witness(const FirstOrderOperator& opA,
                                        const FirstOrderOperator& opB, const GaugeMap& R,
                                        const std::vector<Point>& xs);

} // namespace symcalc
