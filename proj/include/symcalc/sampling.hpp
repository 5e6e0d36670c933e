#pragma once

// Deterministic sample-point generators. Everything here is seeded and
// platform-stable: uniform draws use explicit bit manipulation of the
// mt19937_64 stream rather than std::uniform_real_distribution, whose output
// is implementation-defined.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "symcalc/expr.hpp"
#include "symcalc/linalg.hpp"

namespace symcalc {

using Momentum = std::array<double, 4>;

class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [lo, hi).
    double uniform(double lo = 0.0, double hi = 1.0);
    // Uniform integer in [0, n).
    int index(int n);
    // Uniform in the square [-r, r]^2 of the complex plane.
    cplx complex_box(double r);
    // Random sign, +1 or -1.
    double sign();

private:
    std::mt19937_64 eng_;
};

// The 3^4 tensor grid on [-1,1]^4 followed by 20 seeded pseudo-random points
// in the same box: the standard locations for every pointwise check (101
// points at the default grid).
std::vector<Point> standard_sample_points(int grid_per_axis = 3);

// Deterministic low-discrepancy sample of the unit sphere S^3 in momentum
// space: the 8 coordinate poles (+-delta^alpha) followed by n-8
// super-Fibonacci spiral points. The poles are included on purpose: they are
// the exact momenta at which an axis-aligned degenerate operator vanishes,
// and a spiral alone can straddle them.
std::vector<Momentum> momentum_sphere_sample(int n = 256);

// Step for central differences, from the design ledger:
// h = 1e-5 * max(1, |x_dir|).
double fd_step(const Point& x, int direction);

} // namespace symcalc
