#include "symcalc/sampling.hpp"

#include <cmath>

namespace symcalc {

double DetRng::uniform(double lo, double hi) {
    // 53 explicitly-placed mantissa bits; identical on every platform with
    // IEEE doubles, unlike uniform_real_distribution.
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

int DetRng::index(int n) {
    return static_cast<int>(uniform(0.0, static_cast<double>(n)));
}

cplx DetRng::complex_box(double r) {
    const double re = uniform(-r, r);
    const double im = uniform(-r, r);
    return {re, im};
}

double DetRng::sign() { return (eng_() >> 63) ? 1.0 : -1.0; }

std::vector<Point> standard_sample_points(int grid_per_axis) {
    std::vector<Point> pts;
    const int n = grid_per_axis < 1 ? 1 : grid_per_axis;
    pts.reserve(static_cast<size_t>(n) * n * n * n + 20);
    for (int i0 = 0; i0 < n; ++i0)
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3) {
                    auto coord = [n](int i) {
                        return n == 1 ? 0.0 : -1.0 + 2.0 * i / (n - 1.0);
                    };
                    pts.push_back({coord(i0), coord(i1), coord(i2), coord(i3)});
                }
    DetRng rng(0x5eedf00d);
    for (int k = 0; k < 20; ++k) {
        Point x;
        for (auto& c : x) c = rng.uniform(-1.0, 1.0);
        pts.push_back(x);
    }
    return pts;
}

std::vector<Momentum> momentum_sphere_sample(int n) {
    std::vector<Momentum> ps;
    if (n < 8) n = 8;
    ps.reserve(static_cast<size_t>(n));
    for (int al = 0; al < 4; ++al)
        for (double s : {1.0, -1.0}) {
            Momentum p{};
            p[static_cast<size_t>(al)] = s;
            ps.push_back(p);
        }
    // Super-Fibonacci spiral (Alexa 2022): near-uniform deterministic points
    // on S^3.
    const int m = n - 8;
    const double phi = std::sqrt(2.0);
    const double psi = 1.533751168755204288118041;
    const double two_pi = 6.283185307179586476925287;
    for (int i = 0; i < m; ++i) {
        const double s = i + 0.5;
        const double t = s / m;
        const double d = two_pi * s;
        const double r = std::sqrt(t);
        const double rr = std::sqrt(1.0 - t);
        const double a = d / phi;
        const double b = d / psi;
        ps.push_back({r * std::sin(a), r * std::cos(a), rr * std::sin(b), rr * std::cos(b)});
    }
    return ps;
}

double fd_step(const Point& x, int direction) {
    return 1e-5 * std::max(1.0, std::abs(x[static_cast<size_t>(direction)]));
}

} // namespace symcalc
