#include "symcalc/errors.hpp"

#include <sstream>

namespace symcalc {
namespace {

std::string fmt_vec(const std::array<double, 4>& v) {
    std::ostringstream os;
    os << "(" << v[0] << ", " << v[1] << ", " << v[2] << ", " << v[3] << ")";
    return os.str();
}

std::string msg_at(const std::string& head, const std::array<double, 4>& x) {
    return head + " at x = " + fmt_vec(x);
}

} // namespace

NonHermitianSymbol::NonHermitianSymbol(std::string where, double r)
    : Error("non-Hermitian symbol in " + where + ", relative residual " + std::to_string(r)),
      residual(r) {}

DegeneratePrincipalSymbol::DegeneratePrincipalSymbol(const std::array<double, 4>& x_,
                                                     const std::array<double, 4>& p_)
    : Error("principal symbol vanishes at x = " + fmt_vec(x_) + ", p = " + fmt_vec(p_)),
      x(x_), p(p_) {}

SingularMetric::SingularMetric(const std::array<double, 4>& x_)
    : Error(msg_at("singular metric", x_)), x(x_) {}

WrongSignature::WrongSignature(const std::array<double, 4>& x_,
                               const std::array<double, 4>& ev)
    : Error(msg_at("metric signature is not (+,+,+,-)", x_) + ", eigenvalues " + fmt_vec(ev)),
      x(x_), eigenvalues(ev) {}

NearDegenerate::NearDegenerate(const std::array<double, 4>& x_)
    : Error(msg_at("metric eigenvalue within degeneracy margin", x_)), x(x_) {}

OrthonormalityViolation::OrthonormalityViolation(const std::array<double, 4>& x_, int j_, int k_,
                                                 double v)
    : Error(msg_at("frame orthonormality violated", x_) + " for (j,k) = (" + std::to_string(j_) +
            "," + std::to_string(k_) + "), value " + std::to_string(v)),
      x(x_), j(j_), k(k_), value(v) {}

NonHermitianResult::NonHermitianResult(std::string where, double r)
    : Error("internal consistency failure: non-Hermitian " + where + ", residual " +
            std::to_string(r)),
      residual(r) {}

CovarianceViolation::CovarianceViolation(const std::array<double, 4>& x_, double r)
    : Error(msg_at("covariance residual exceeds tolerance", x_) + ", residual " +
            std::to_string(r)),
      x(x_), residual(r) {}

IllConditionedFrame::IllConditionedFrame(const std::array<double, 4>& x_, double c)
    : Error(msg_at("frame matrix ill-conditioned", x_) + ", cond " + std::to_string(c)),
      x(x_), condition(c) {}

AdjugationLawViolation::AdjugationLawViolation(std::string which_,
                                               const std::array<double, 4>& x_, double r)
    : Error(msg_at("adjugation law '" + which_ + "' violated", x_) + ", residual " +
            std::to_string(r)),
      which(std::move(which_)), x(x_), residual(r) {}

NegativeMass::NegativeMass(double m_)
    : Error("mass must be nonnegative, got " + std::to_string(m_)), m(m_) {}

SingularJacobian::SingularJacobian() : Error("coordinate change has singular Jacobian") {}

MetricMismatch::MetricMismatch(const std::array<double, 4>& x_, double r)
    : Error(msg_at("operators encode different metrics", x_) + ", residual " + std::to_string(r)),
      x(x_), residual(r) {}

NotUnitValue::NotUnitValue(const std::array<double, 4>& x_, double v)
    : Error(msg_at("orientation scalar is not of unit modulus", x_) + ", value " +
            std::to_string(v)),
      x(x_), value(v) {}

VanishingT::VanishingT(const std::array<double, 4>& x_)
    : Error(msg_at("time-orientation scalar vanishes", x_)), x(x_) {}

InconsistentSigns::InconsistentSigns(const std::array<double, 4>& a,
                                     const std::array<double, 4>& b)
    : Error("classification signs differ between x = " + fmt_vec(a) + " and x = " + fmt_vec(b)),
      x1(a), x2(b) {}

NotInPositiveClass::NotInPositiveClass(std::string which)
    : Error("operator '" + which + "' does not classify as (+1,+1) against the reference") {}

WitnessFails::WitnessFails(const std::array<double, 4>& x_, const std::array<double, 4>& p_,
                           double r)
    : Error("witness fails at x = " + fmt_vec(x_) + ", p = " + fmt_vec(p_) + ", residual " +
            std::to_string(r)),
      x(x_), p(p_), residual(r) {}

UnknownScenario::UnknownScenario(std::string name)
    : Error("unknown scenario '" + name + "'") {}

ParseError::ParseError(std::string where, std::string message)
    : Error("parse error (" + where + "): " + message) {}

std::string error_name(const Error& e) {
#define SYMCALC_NAME_IF(T) \
    if (dynamic_cast<const T*>(&e) != nullptr) return #T
    SYMCALC_NAME_IF(NonHermitianSymbol);
    SYMCALC_NAME_IF(DegeneratePrincipalSymbol);
    SYMCALC_NAME_IF(SingularMetric);
    SYMCALC_NAME_IF(WrongSignature);
    SYMCALC_NAME_IF(NearDegenerate);
    SYMCALC_NAME_IF(OrthonormalityViolation);
    SYMCALC_NAME_IF(NonHermitianResult);
    SYMCALC_NAME_IF(CovarianceViolation);
    SYMCALC_NAME_IF(IllConditionedFrame);
    SYMCALC_NAME_IF(AdjugationLawViolation);
    SYMCALC_NAME_IF(NegativeMass);
    SYMCALC_NAME_IF(SingularJacobian);
    SYMCALC_NAME_IF(MetricMismatch);
    SYMCALC_NAME_IF(NotUnitValue);
    SYMCALC_NAME_IF(VanishingT);
    SYMCALC_NAME_IF(InconsistentSigns);
    SYMCALC_NAME_IF(NotInPositiveClass);
    SYMCALC_NAME_IF(WitnessFails);
    SYMCALC_NAME_IF(UnknownScenario);
    SYMCALC_NAME_IF(ParseError);
#undef SYMCALC_NAME_IF
    return "Error";
}

} // namespace symcalc
