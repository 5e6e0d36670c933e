#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace symcalc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input is not formally self-adjoint: a principal or subprincipal symbol
// failed the Hermiticity predicate beyond the symmetrization band.
class NonHermitianSymbol : public Error {
public:
    NonHermitianSymbol(std::string where, double residual);
    double residual;
};

class DegeneratePrincipalSymbol : public Error {
public:
    DegeneratePrincipalSymbol(const std::array<double, 4>& x, const std::array<double, 4>& p);
    std::array<double, 4> x;
    std::array<double, 4> p;
};

class SingularMetric : public Error {
public:
    explicit SingularMetric(const std::array<double, 4>& x);
    std::array<double, 4> x;
};

class WrongSignature : public Error {
public:
    WrongSignature(const std::array<double, 4>& x, const std::array<double, 4>& eigenvalues);
    std::array<double, 4> x;
    std::array<double, 4> eigenvalues;
};

class NearDegenerate : public Error {
public:
    explicit NearDegenerate(const std::array<double, 4>& x);
    std::array<double, 4> x;
};

class OrthonormalityViolation : public Error {
public:
    OrthonormalityViolation(const std::array<double, 4>& x, int j, int k, double value);
    std::array<double, 4> x;
    int j, k;
    double value;
};

class NonHermitianResult : public Error {
public:
    NonHermitianResult(std::string where, double residual);
    double residual;
};

class CovarianceViolation : public Error {
public:
    CovarianceViolation(const std::array<double, 4>& x, double residual);
    std::array<double, 4> x;
    double residual;
};

class IllConditionedFrame : public Error {
public:
    IllConditionedFrame(const std::array<double, 4>& x, double condition);
    std::array<double, 4> x;
    double condition;
};

class AdjugationLawViolation : public Error {
public:
    AdjugationLawViolation(std::string which, const std::array<double, 4>& x, double residual);
    std::string which;
    std::array<double, 4> x;
    double residual;
};

class NegativeMass : public Error {
public:
    explicit NegativeMass(double m);
    double m;
};

class SingularJacobian : public Error {
public:
    SingularJacobian();
};

class MetricMismatch : public Error {
public:
    MetricMismatch(const std::array<double, 4>& x, double residual);
    std::array<double, 4> x;
    double residual;
};

class NotUnitValue : public Error {
public:
    NotUnitValue(const std::array<double, 4>& x, double value);
    std::array<double, 4> x;
    double value;
};

class VanishingT : public Error {
public:
    explicit VanishingT(const std::array<double, 4>& x);
    std::array<double, 4> x;
};

class InconsistentSigns : public Error {
public:
    InconsistentSigns(const std::array<double, 4>& x1, const std::array<double, 4>& x2);
    std::array<double, 4> x1, x2;
};

class NotInPositiveClass : public Error {
public:
    explicit NotInPositiveClass(std::string which);
};

class WitnessFails : public Error {
public:
    WitnessFails(const std::array<double, 4>& x, const std::array<double, 4>& p, double residual);
    std::array<double, 4> x;
    std::array<double, 4> p;
    double residual;
};

class UnknownScenario : public Error {
public:
    explicit UnknownScenario(std::string name);
};

class ParseError : public Error {
public:
    ParseError(std::string where, std::string message);
};

// The concrete class name of a thrown error, so reports and CLI output can
// name the failure kind without relying on message wording.
std::string error_name(const Error& e);

} // namespace symcalc
