#pragma once

// Small fixed-size matrix kernels: complex 2x2, real/complex 4x4, a cyclic
// Jacobi eigensolver for small symmetric matrices. Everything is closed-form
// or fixed-sweep so results are deterministic run to run.

#include <array>
#include <complex>
#include <cstddef>

namespace symcalc {

using cplx = std::complex<double>;

struct Vec2c {
    std::array<cplx, 2> v{};
    cplx& operator[](int i) { return v[static_cast<size_t>(i)]; }
    const cplx& operator[](int i) const { return v[static_cast<size_t>(i)]; }
};

struct Vec4c {
    std::array<cplx, 4> v{};
    cplx& operator[](int i) { return v[static_cast<size_t>(i)]; }
    const cplx& operator[](int i) const { return v[static_cast<size_t>(i)]; }
};

// Complex 2x2, row-major.
struct Mat2 {
    std::array<cplx, 4> m{};

    cplx& at(int r, int c) { return m[static_cast<size_t>(2 * r + c)]; }
    const cplx& at(int r, int c) const { return m[static_cast<size_t>(2 * r + c)]; }

    static Mat2 zero() { return {}; }
    static Mat2 identity();

    Mat2 adjoint() const;      // conjugate transpose
    Mat2 adjugate() const;     // [[a,b],[c,d]] -> [[d,-b],[-c,a]]
    cplx trace() const { return m[0] + m[3]; }
    cplx det() const { return m[0] * m[3] - m[1] * m[2]; }
    double norm() const;       // Frobenius

    Mat2& operator+=(const Mat2& o);
    Mat2& operator-=(const Mat2& o);
};

Mat2 operator+(Mat2 a, const Mat2& b);
Mat2 operator-(Mat2 a, const Mat2& b);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(cplx s, const Mat2& a);
Mat2 operator*(double s, const Mat2& a);
Vec2c operator*(const Mat2& a, const Vec2c& u);

// ||M - M*|| / scale; zero matrices count as Hermitian.
double hermitian_defect(const Mat2& m, double scale);

// Singular values {min, max} of a complex 2x2, closed form via tr/det of M*M.
struct Sv2 {
    double smin;
    double smax;
};
Sv2 singular_values(const Mat2& m);

// s^1..s^4: the three standard Hermitian traceless matrices plus identity,
// trace-orthonormal under (1/2) tr(s^j s^k).
Mat2 pauli(int j);

// Real 4x4, row-major.
struct Mat4d {
    std::array<double, 16> m{};

    double& at(int r, int c) { return m[static_cast<size_t>(4 * r + c)]; }
    const double& at(int r, int c) const { return m[static_cast<size_t>(4 * r + c)]; }

    static Mat4d zero() { return {}; }
    static Mat4d identity();
    Mat4d transposed() const;
};

Mat4d operator+(const Mat4d& a, const Mat4d& b);
Mat4d operator-(const Mat4d& a, const Mat4d& b);
Mat4d operator*(const Mat4d& a, const Mat4d& b);
Mat4d operator*(double s, const Mat4d& a);
std::array<double, 4> operator*(const Mat4d& a, const std::array<double, 4>& u);

double det3(double a, double b, double c, double d, double e, double f, double g, double h,
            double i);
double det4(const Mat4d& a);
Mat4d adjugate4(const Mat4d& a);   // det(A) * inverse(A)
Mat4d inverse4(const Mat4d& a);    // throws SingularMetric-free std::domain_error on det ~ 0

double max_abs(const Mat4d& a);

// Complex 4x4, row-major.
struct Mat4c {
    std::array<cplx, 16> m{};

    cplx& at(int r, int c) { return m[static_cast<size_t>(4 * r + c)]; }
    const cplx& at(int r, int c) const { return m[static_cast<size_t>(4 * r + c)]; }

    static Mat4c zero() { return {}; }
    double norm() const;
};

Mat4c operator-(const Mat4c& a, const Mat4c& b);
Vec4c operator*(const Mat4c& a, const Vec4c& u);
cplx det4c(const Mat4c& a);

// Eigenvalues of a real symmetric NxN (N <= 8), ascending. Cyclic Jacobi.
template <int N>
std::array<double, N> jacobi_eigenvalues(std::array<std::array<double, N>, N> a);

std::array<double, 4> symmetric_eigenvalues(const Mat4d& a);

// Singular value bounds {min,max} of a complex 4x4 via the 8x8 real embedding
// of M*M.
Sv2 singular_values(const Mat4c& m);

// Condition number (2-norm) of a real 4x4.
double condition_number(const Mat4d& a);

} // namespace symcalc
