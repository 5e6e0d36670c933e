#include "symcalc/fields.hpp"

namespace symcalc {

ComplexField::ComplexField() : re_(ScalarField::constant(0)), im_(ScalarField::constant(0)) {}

ComplexField::ComplexField(ScalarField re, ScalarField im)
    : re_(std::move(re)), im_(std::move(im)) {}

ComplexField ComplexField::constant(cplx v) {
    return {ScalarField::constant(v.real()), ScalarField::constant(v.imag())};
}

ComplexField ComplexField::from_real(ScalarField f) {
    return {std::move(f), ScalarField::constant(0)};
}

cplx ComplexField::eval(const Point& x) const { return {re_.eval(x), im_.eval(x)}; }

ComplexField ComplexField::derivative(int axis) const {
    return {re_.derivative(axis), im_.derivative(axis)};
}

ComplexField ComplexField::conj() const { return {re_, -im_}; }

ComplexField ComplexField::substitute_affine(const std::array<std::array<double, 4>, 4>& m,
                                             const Point& shift) const {
    return {re_.substitute_affine(m, shift), im_.substitute_affine(m, shift)};
}

bool ComplexField::is_zero() const { return re_.is_zero() && im_.is_zero(); }

ComplexField operator+(const ComplexField& a, const ComplexField& b) {
    return {a.re() + b.re(), a.im() + b.im()};
}

ComplexField operator-(const ComplexField& a, const ComplexField& b) {
    return {a.re() - b.re(), a.im() - b.im()};
}

ComplexField operator*(const ComplexField& a, const ComplexField& b) {
    return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}

ComplexField operator-(const ComplexField& a) { return {-a.re(), -a.im()}; }

ComplexField operator*(cplx s, const ComplexField& a) {
    return ComplexField::constant(s) * a;
}

ComplexField operator*(const ScalarField& s, const ComplexField& a) {
    return {s * a.re(), s * a.im()};
}

ComplexField cexp(const ComplexField& a) {
    const ScalarField mag = exp(a.re());
    return {mag * cos(a.im()), mag * sin(a.im())};
}

ComplexField plane_wave(const std::array<double, 4>& p) {
    ScalarField phase = ScalarField::constant(0);
    for (int al = 0; al < 4; ++al)
        phase = phase + p[static_cast<size_t>(al)] * ScalarField::coordinate(al);
    return {cos(phase), sin(phase)};
}

Matrix2Field::Matrix2Field() = default;

Matrix2Field Matrix2Field::constant(const Mat2& m) {
    Matrix2Field r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = ComplexField::constant(m.at(i, j));
    return r;
}

Matrix2Field Matrix2Field::identity() { return constant(Mat2::identity()); }

Matrix2Field Matrix2Field::pauli_field(int j) { return constant(pauli(j)); }

Mat2 Matrix2Field::eval(const Point& x) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = at(i, j).eval(x);
    return r;
}

Matrix2Field Matrix2Field::derivative(int axis) const {
    Matrix2Field r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = at(i, j).derivative(axis);
    return r;
}

Matrix2Field Matrix2Field::adjoint() const {
    Matrix2Field r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = at(j, i).conj();
    return r;
}

Matrix2Field Matrix2Field::adjugate() const {
    Matrix2Field r;
    r.at(0, 0) = at(1, 1);
    r.at(0, 1) = -at(0, 1);
    r.at(1, 0) = -at(1, 0);
    r.at(1, 1) = at(0, 0);
    return r;
}

Matrix2Field Matrix2Field::hermitized() const {
    Matrix2Field r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.at(i, j) = cplx(0.5, 0) * (at(i, j) + at(j, i).conj());
    return r;
}

ComplexField Matrix2Field::trace() const { return at(0, 0) + at(1, 1); }

Matrix2Field Matrix2Field::substitute_affine(const std::array<std::array<double, 4>, 4>& m,
                                             const Point& shift) const {
    Matrix2Field r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = at(i, j).substitute_affine(m, shift);
    return r;
}

Matrix2Field operator+(const Matrix2Field& a, const Matrix2Field& b) {
    Matrix2Field r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

Matrix2Field operator-(const Matrix2Field& a, const Matrix2Field& b) {
    Matrix2Field r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

Matrix2Field operator*(const Matrix2Field& a, const Matrix2Field& b) {
    Matrix2Field r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
    return r;
}

Matrix2Field operator-(const Matrix2Field& a) {
    Matrix2Field r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = -a.at(i, j);
    return r;
}

Matrix2Field operator*(cplx s, const Matrix2Field& a) {
    Matrix2Field r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = s * a.at(i, j);
    return r;
}

Matrix2Field operator*(const ScalarField& s, const Matrix2Field& a) {
    Matrix2Field r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = s * a.at(i, j);
    return r;
}

Matrix2Field operator*(const ComplexField& s, const Matrix2Field& a) {
    Matrix2Field r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = s * a.at(i, j);
    return r;
}

TwoColumnField::TwoColumnField() = default;

TwoColumnField TwoColumnField::constant(const Vec2c& u) {
    TwoColumnField r;
    r.at(0) = ComplexField::constant(u[0]);
    r.at(1) = ComplexField::constant(u[1]);
    return r;
}

Vec2c TwoColumnField::eval(const Point& x) const {
    Vec2c r;
    r[0] = at(0).eval(x);
    r[1] = at(1).eval(x);
    return r;
}

TwoColumnField TwoColumnField::derivative(int axis) const {
    TwoColumnField r;
    r.at(0) = at(0).derivative(axis);
    r.at(1) = at(1).derivative(axis);
    return r;
}

TwoColumnField TwoColumnField::substitute_affine(const std::array<std::array<double, 4>, 4>& m,
                                                 const Point& shift) const {
    TwoColumnField r;
    r.at(0) = at(0).substitute_affine(m, shift);
    r.at(1) = at(1).substitute_affine(m, shift);
    return r;
}

TwoColumnField operator+(const TwoColumnField& a, const TwoColumnField& b) {
    TwoColumnField r;
    r.at(0) = a.at(0) + b.at(0);
    r.at(1) = a.at(1) + b.at(1);
    return r;
}

TwoColumnField operator*(const Matrix2Field& m, const TwoColumnField& v) {
    TwoColumnField r;
    r.at(0) = m.at(0, 0) * v.at(0) + m.at(0, 1) * v.at(1);
    r.at(1) = m.at(1, 0) * v.at(0) + m.at(1, 1) * v.at(1);
    return r;
}

TwoColumnField operator*(const ComplexField& s, const TwoColumnField& v) {
    TwoColumnField r;
    r.at(0) = s * v.at(0);
    r.at(1) = s * v.at(1);
    return r;
}

TwoColumnField operator*(const ScalarField& s, const TwoColumnField& v) {
    TwoColumnField r;
    r.at(0) = s * v.at(0);
    r.at(1) = s * v.at(1);
    return r;
}

TwoColumnField operator*(cplx s, const TwoColumnField& v) {
    return ComplexField::constant(s) * v;
}

BispinorField::BispinorField() = default;

BispinorField BispinorField::from_halves(const TwoColumnField& top, const TwoColumnField& bottom) {
    BispinorField r;
    r.at(0) = top.at(0);
    r.at(1) = top.at(1);
    r.at(2) = bottom.at(0);
    r.at(3) = bottom.at(1);
    return r;
}

BispinorField BispinorField::constant(const Vec4c& u) {
    BispinorField r;
    for (int i = 0; i < 4; ++i) r.at(i) = ComplexField::constant(u[i]);
    return r;
}

TwoColumnField BispinorField::top() const {
    TwoColumnField r;
    r.at(0) = at(0);
    r.at(1) = at(1);
    return r;
}

TwoColumnField BispinorField::bottom() const {
    TwoColumnField r;
    r.at(0) = at(2);
    r.at(1) = at(3);
    return r;
}

Vec4c BispinorField::eval(const Point& x) const {
    Vec4c r;
    for (int i = 0; i < 4; ++i) r[i] = at(i).eval(x);
    return r;
}

BispinorField operator*(const ComplexField& s, const BispinorField& v) {
    BispinorField r;
    for (int i = 0; i < 4; ++i) r.at(i) = s * v.at(i);
    return r;
}

BispinorField operator*(const ScalarField& s, const BispinorField& v) {
    BispinorField r;
    for (int i = 0; i < 4; ++i) r.at(i) = s * v.at(i);
    return r;
}

} // namespace symcalc
