#include "symcalc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace symcalc {

Mat2 Mat2::identity() {
    Mat2 r;
    r.m = {cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0)};
    return r;
}

Mat2 Mat2::adjoint() const {
    Mat2 r;
    r.m = {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
    return r;
}

Mat2 Mat2::adjugate() const {
    Mat2 r;
    r.m = {m[3], -m[1], -m[2], m[0]};
    return r;
}

double Mat2::norm() const {
    double s = 0;
    for (const auto& e : m) s += std::norm(e);
    return std::sqrt(s);
}

Mat2& Mat2::operator+=(const Mat2& o) {
    for (size_t i = 0; i < 4; ++i) m[i] += o.m[i];
    return *this;
}

Mat2& Mat2::operator-=(const Mat2& o) {
    for (size_t i = 0; i < 4; ++i) m[i] -= o.m[i];
    return *this;
}

Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }

Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    r.m[0] = a.m[0] * b.m[0] + a.m[1] * b.m[2];
    r.m[1] = a.m[0] * b.m[1] + a.m[1] * b.m[3];
    r.m[2] = a.m[2] * b.m[0] + a.m[3] * b.m[2];
    r.m[3] = a.m[2] * b.m[1] + a.m[3] * b.m[3];
    return r;
}

Mat2 operator*(cplx s, const Mat2& a) {
    Mat2 r;
    for (size_t i = 0; i < 4; ++i) r.m[i] = s * a.m[i];
    return r;
}

Mat2 operator*(double s, const Mat2& a) { return cplx(s, 0) * a; }

Vec2c operator*(const Mat2& a, const Vec2c& u) {
    Vec2c r;
    r[0] = a.m[0] * u[0] + a.m[1] * u[1];
    r[1] = a.m[2] * u[0] + a.m[3] * u[1];
    return r;
}

double hermitian_defect(const Mat2& m, double scale) {
    const double d = (m - m.adjoint()).norm();
    if (d == 0.0) return 0.0;
    if (scale <= 0.0) return d > 0.0 ? 1.0 : 0.0;
    return d / scale;
}

Sv2 singular_values(const Mat2& m) {
    // Eigenvalues of M*M: ((t +- sqrt(t^2 - 4 d)) / 2 with t = ||M||_F^2,
    // d = |det M|^2.
    const double t = m.norm() * m.norm();
    const double d = std::norm(m.det());
    const double disc = std::max(0.0, t * t - 4.0 * d);
    const double s = std::sqrt(disc);
    const double lmax = 0.5 * (t + s);
    const double smax = std::sqrt(std::max(0.0, lmax));
    const double smin = smax > 0.0 ? std::sqrt(d) / smax : 0.0;
    return {smin, smax};
}

Mat2 pauli(int j) {
    Mat2 r;
    switch (j) {
        case 1: r.m = {cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0)}; break;
        case 2: r.m = {cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0)}; break;
        case 3: r.m = {cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(-1, 0)}; break;
        case 4: r.m = {cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0)}; break;
        default: throw std::out_of_range("pauli index must be 1..4");
    }
    return r;
}

Mat4d Mat4d::identity() {
    Mat4d r;
    for (int i = 0; i < 4; ++i) r.at(i, i) = 1.0;
    return r;
}

Mat4d Mat4d::transposed() const {
    Mat4d r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.at(i, j) = at(j, i);
    return r;
}

Mat4d operator+(const Mat4d& a, const Mat4d& b) {
    Mat4d r;
    for (size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}

Mat4d operator-(const Mat4d& a, const Mat4d& b) {
    Mat4d r;
    for (size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}

Mat4d operator*(const Mat4d& a, const Mat4d& b) {
    Mat4d r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0;
            for (int k = 0; k < 4; ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

Mat4d operator*(double s, const Mat4d& a) {
    Mat4d r;
    for (size_t i = 0; i < 16; ++i) r.m[i] = s * a.m[i];
    return r;
}

std::array<double, 4> operator*(const Mat4d& a, const std::array<double, 4>& u) {
    std::array<double, 4> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[static_cast<size_t>(i)] += a.at(i, j) * u[static_cast<size_t>(j)];
    return r;
}

double det3(double a, double b, double c, double d, double e, double f, double g, double h,
            double i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

namespace {

double minor3(const Mat4d& a, int r, int c) {
    double v[9];
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        if (i == r) continue;
        for (int j = 0; j < 4; ++j) {
            if (j == c) continue;
            v[k++] = a.at(i, j);
        }
    }
    return det3(v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]);
}

} // namespace

double det4(const Mat4d& a) {
    double s = 0;
    for (int j = 0; j < 4; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        s += sign * a.at(0, j) * minor3(a, 0, j);
    }
    return s;
}

Mat4d adjugate4(const Mat4d& a) {
    Mat4d r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            r.at(j, i) = sign * minor3(a, i, j);
        }
    return r;
}

Mat4d inverse4(const Mat4d& a) {
    const double d = det4(a);
    if (std::abs(d) < 1e-300) throw std::domain_error("inverse4: determinant is zero");
    return (1.0 / d) * adjugate4(a);
}

double max_abs(const Mat4d& a) {
    double s = 0;
    for (double v : a.m) s = std::max(s, std::abs(v));
    return s;
}

double Mat4c::norm() const {
    double s = 0;
    for (const auto& e : m) s += std::norm(e);
    return std::sqrt(s);
}

Mat4c operator-(const Mat4c& a, const Mat4c& b) {
    Mat4c r;
    for (size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}

Vec4c operator*(const Mat4c& a, const Vec4c& u) {
    Vec4c r;
    for (int i = 0; i < 4; ++i) {
        cplx s = 0;
        for (int j = 0; j < 4; ++j) s += a.at(i, j) * u[j];
        r[i] = s;
    }
    return r;
}

cplx det4c(const Mat4c& a) {
    cplx s = 0;
    for (int j = 0; j < 4; ++j) {
        cplx v[9];
        int k = 0;
        for (int i = 1; i < 4; ++i)
            for (int jj = 0; jj < 4; ++jj) {
                if (jj == j) continue;
                v[k++] = a.at(i, jj);
            }
        const cplx m3 = v[0] * (v[4] * v[8] - v[5] * v[7]) - v[1] * (v[3] * v[8] - v[5] * v[6]) +
                        v[2] * (v[3] * v[7] - v[4] * v[6]);
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        s += sign * a.at(0, j) * m3;
    }
    return s;
}

template <int N>
std::array<double, N> jacobi_eigenvalues(std::array<std::array<double, N>, N> a) {
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0, diag = 0;
        for (int i = 0; i < N; ++i) {
            diag += std::abs(a[i][i]);
            for (int j = i + 1; j < N; ++j) off += std::abs(a[i][j]);
        }
        if (off <= 1e-15 * std::max(diag, 1e-300)) break;
        for (int p = 0; p < N - 1; ++p)
            for (int q = p + 1; q < N; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < N; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < N; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::array<double, N> ev;
    for (int i = 0; i < N; ++i) ev[static_cast<size_t>(i)] = a[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

template std::array<double, 4> jacobi_eigenvalues<4>(std::array<std::array<double, 4>, 4>);
template std::array<double, 8> jacobi_eigenvalues<8>(std::array<std::array<double, 8>, 8>);

std::array<double, 4> symmetric_eigenvalues(const Mat4d& a) {
    std::array<std::array<double, 4>, 4> s{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s[i][j] = 0.5 * (a.at(i, j) + a.at(j, i));
    return jacobi_eigenvalues<4>(s);
}

Sv2 singular_values(const Mat4c& m) {
    // H = M*M is Hermitian PSD; embed as [[Re H, -Im H],[Im H, Re H]], whose
    // spectrum is that of H with doubled multiplicity.
    Mat4c h;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0;
            for (int k = 0; k < 4; ++k) s += std::conj(m.at(k, i)) * m.at(k, j);
            h.at(i, j) = s;
        }
    std::array<std::array<double, 8>, 8> e{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            e[i][j] = h.at(i, j).real();
            e[i + 4][j + 4] = h.at(i, j).real();
            e[i][j + 4] = -h.at(i, j).imag();
            e[i + 4][j] = h.at(i, j).imag();
        }
    const auto ev = jacobi_eigenvalues<8>(e);
    return {std::sqrt(std::max(0.0, ev[0])), std::sqrt(std::max(0.0, ev[7]))};
}

double condition_number(const Mat4d& a) {
    std::array<std::array<double, 4>, 4> ata{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0;
            for (int k = 0; k < 4; ++k) s += a.at(k, i) * a.at(k, j);
            ata[i][j] = s;
        }
    const auto ev = jacobi_eigenvalues<4>(ata);
    const double lmin = std::max(ev[0], 0.0);
    if (lmin == 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(ev[3] / lmin);
}

} // namespace symcalc
