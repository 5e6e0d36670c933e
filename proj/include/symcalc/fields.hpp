#pragma once

// Complex-valued and matrix-valued fields built from ScalarField pairs.
// These carry the operator coefficients, gauge maps, and half-density
// columns; all derivatives are exact (inherited from ScalarField).

#include <array>

#include "symcalc/expr.hpp"
#include "symcalc/linalg.hpp"

namespace symcalc {

class ComplexField {
public:
    ComplexField(); // zero
    ComplexField(ScalarField re, ScalarField im);

    static ComplexField constant(cplx v);
    static ComplexField from_real(ScalarField f);

    const ScalarField& re() const { return re_; }
    const ScalarField& im() const { return im_; }

    cplx eval(const Point& x) const;
    ComplexField derivative(int axis) const;
    ComplexField conj() const;
    ComplexField substitute_affine(const std::array<std::array<double, 4>, 4>& m,
                                   const Point& shift) const;
    bool is_zero() const;

private:
    ScalarField re_, im_;
};

ComplexField operator+(const ComplexField& a, const ComplexField& b);
ComplexField operator-(const ComplexField& a, const ComplexField& b);
ComplexField operator*(const ComplexField& a, const ComplexField& b);
ComplexField operator-(const ComplexField& a);
ComplexField operator*(cplx s, const ComplexField& a);
ComplexField operator*(const ScalarField& s, const ComplexField& a);

// exp(a + ib) = e^a (cos b + i sin b)
ComplexField cexp(const ComplexField& a);
// e^{i p.x} as a field of x
ComplexField plane_wave(const std::array<double, 4>& p);

// 2x2 matrix of complex fields, row-major like Mat2.
class Matrix2Field {
public:
    Matrix2Field(); // zero

    static Matrix2Field constant(const Mat2& m);
    static Matrix2Field identity();
    static Matrix2Field pauli_field(int j);

    ComplexField& at(int r, int c) { return e_[static_cast<size_t>(2 * r + c)]; }
    const ComplexField& at(int r, int c) const { return e_[static_cast<size_t>(2 * r + c)]; }

    Mat2 eval(const Point& x) const;
    Matrix2Field derivative(int axis) const;
    Matrix2Field adjoint() const;
    Matrix2Field adjugate() const; // tr(M) I - M
    Matrix2Field hermitized() const; // (M + M*)/2
    ComplexField trace() const;
    Matrix2Field substitute_affine(const std::array<std::array<double, 4>, 4>& m,
                                   const Point& shift) const;

private:
    std::array<ComplexField, 4> e_;
};

Matrix2Field operator+(const Matrix2Field& a, const Matrix2Field& b);
Matrix2Field operator-(const Matrix2Field& a, const Matrix2Field& b);
Matrix2Field operator*(const Matrix2Field& a, const Matrix2Field& b);
Matrix2Field operator-(const Matrix2Field& a);
Matrix2Field operator*(cplx s, const Matrix2Field& a);
Matrix2Field operator*(const ScalarField& s, const Matrix2Field& a);
Matrix2Field operator*(const ComplexField& s, const Matrix2Field& a);

// Half-density-valued 2-column v = (v1, v2).
class TwoColumnField {
public:
    TwoColumnField(); // zero

    static TwoColumnField constant(const Vec2c& u);

    ComplexField& at(int i) { return c_[static_cast<size_t>(i)]; }
    const ComplexField& at(int i) const { return c_[static_cast<size_t>(i)]; }

    Vec2c eval(const Point& x) const;
    TwoColumnField derivative(int axis) const;
    TwoColumnField substitute_affine(const std::array<std::array<double, 4>, 4>& m,
                                     const Point& shift) const;

private:
    std::array<ComplexField, 2> c_;
};

TwoColumnField operator+(const TwoColumnField& a, const TwoColumnField& b);
TwoColumnField operator*(const Matrix2Field& m, const TwoColumnField& v);
TwoColumnField operator*(const ComplexField& s, const TwoColumnField& v);
TwoColumnField operator*(const ScalarField& s, const TwoColumnField& v);
TwoColumnField operator*(cplx s, const TwoColumnField& v);

// 4-column psi = (v1, v2, w1, w2): a pair of 2-columns.
class BispinorField {
public:
    BispinorField(); // zero

    static BispinorField from_halves(const TwoColumnField& top, const TwoColumnField& bottom);
    static BispinorField constant(const Vec4c& u);

    ComplexField& at(int i) { return c_[static_cast<size_t>(i)]; }
    const ComplexField& at(int i) const { return c_[static_cast<size_t>(i)]; }

    TwoColumnField top() const;
    TwoColumnField bottom() const;
    Vec4c eval(const Point& x) const;

private:
    std::array<ComplexField, 4> c_;
};

BispinorField operator*(const ComplexField& s, const BispinorField& v);
BispinorField operator*(const ScalarField& s, const BispinorField& v);

} // namespace symcalc
