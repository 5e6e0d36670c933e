#pragma once

// Symbolic scalar fields on R^4 with exact differentiation.
//
// Coefficients of a first-order operator have to be differentiated several
// times (divergence terms, covariant corrections, adjugation), and finite
// differences would stack truncation error on top of every identity we want
// to verify to near machine precision.  Instead, a field is a small
// expression DAG over the coordinate functions; derivatives are produced by
// the usual calculus rules and are again fields.  Subtrees are shared, and a
// flattened tape ("Compiled") makes repeated evaluation cheap enough for the
// verification sweeps.

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace symcalc {

using Point = std::array<double, 4>;

enum class ExOp {
    Const,   // value
    Coord,   // x^axis, axis in 0..3
    Add,     // a + b
    Sub,     // a - b
    Mul,     // a * b
    Neg,     // -a
    Sin,     // sin a
    Cos,     // cos a
    Exp,     // exp a
    PowInt,  // a^k, k integer (possibly negative; a must not vanish if k < 0)
    PowReal, // a^r, real r (a must stay positive)
};

struct ExNode {
    ExOp op;
    double value = 0.0; // Const payload, or the exponent for PowInt/PowReal
    int axis = 0;       // Coord payload
    std::shared_ptr<const ExNode> a, b;
};

class ScalarField {
public:
    ScalarField() = default; // empty; only assignment is valid afterwards

    static ScalarField constant(double v);
    static ScalarField coordinate(int axis); // axis in 0..3

    double eval(const Point& x) const;
    ScalarField derivative(int axis) const;

    // Replaces x^alpha by sum_beta m[alpha][beta] * x^beta + shift[alpha];
    // used for pulling coefficients back through an affine coordinate change.
    ScalarField substitute_affine(const std::array<std::array<double, 4>, 4>& m,
                                  const Point& shift) const;

    bool is_zero() const;
    bool is_constant(double* out = nullptr) const;

    std::string to_string() const; // debugging aid

    const std::shared_ptr<const ExNode>& node() const { return node_; }
    explicit ScalarField(std::shared_ptr<const ExNode> n) : node_(std::move(n)) {}

private:
    std::shared_ptr<const ExNode> node_;
};

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a);
ScalarField operator*(double s, const ScalarField& a);
ScalarField operator+(double s, const ScalarField& a);
ScalarField sin(const ScalarField& a);
ScalarField cos(const ScalarField& a);
ScalarField exp(const ScalarField& a);
ScalarField pow_int(const ScalarField& a, int k);
ScalarField pow_real(const ScalarField& a, double r);

// A topologically ordered tape over a batch of fields with shared subtrees
// evaluated once per point.  Intended for inner verification loops; building
// one costs a single DAG walk.
class Compiled {
public:
    explicit Compiled(const std::vector<ScalarField>& fields);

    size_t size() const { return roots_.size(); }
    // Evaluates every field at x into out (resized as needed).
    void eval(const Point& x, std::vector<double>& out) const;

private:
    struct Step {
        ExOp op;
        double value;
        int axis;
        int a, b; // slot indices
    };
    std::vector<Step> steps_;
    std::vector<int> roots_;
};

} // namespace symcalc
