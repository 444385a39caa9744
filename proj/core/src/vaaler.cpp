#include "pslab/vaaler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pslab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// jhat(u) = pi u (1-u) cot(pi u) + u on (0, 1); decays from 1 to 0.
double jhat(double u) {
    double s = std::sin(kPi * u);
    double c = std::cos(kPi * u);
    return kPi * u * (1.0 - u) * (c / s) + u;
}

}  // namespace

double sawtooth(double t) {
    double f = t - std::floor(t);
    if (f >= 1.0) {
        f = 0.0;  // rounding at a left neighborhood of an integer
    }
    return f - 0.5;
}

VaalerApprox vaaler_coefficients(int H) {
    if (H < 1) {
        throw std::invalid_argument("vaaler_coefficients: H must be >= 1");
    }
    VaalerApprox v;
    v.H = H;
    v.a.resize(static_cast<std::size_t>(H));
    v.b.resize(static_cast<std::size_t>(H) + 1);
    const double K = H + 1.0;
    for (int h = 1; h <= H; ++h) {
        double j = jhat(h / K);
        // The approximant is -sum_h jhat(h/K) sin(2 pi h t) / (pi h), i.e.
        // a_h = i * jhat(h/K) / (2 pi h) on the e(th) basis.
        v.a[static_cast<std::size_t>(h) - 1] = {0.0, j / (kTwoPi * h)};
    }
    for (int h = 0; h <= H; ++h) {
        v.b[static_cast<std::size_t>(h)] = (1.0 - h / K) / (2.0 * K);
    }
    return v;
}

double VaalerApprox::approximant(double t) const {
    double s = 0.0;
    for (int h = H; h >= 1; --h) {
        // 2 Re(a_h e(th)) with a_h purely imaginary.
        s -= 2.0 * a[static_cast<std::size_t>(h) - 1].imag() * std::sin(kTwoPi * h * t);
    }
    return s;
}

double VaalerApprox::majorant(double t) const {
    double s = b[0];
    for (int h = H; h >= 1; --h) {
        s += 2.0 * b[static_cast<std::size_t>(h)] * std::cos(kTwoPi * h * t);
    }
    return s;
}

VaalerCheck verify_vaaler(int H, int grid_size) {
    if (grid_size < 100) {
        throw std::invalid_argument("verify_vaaler: grid_size must be >= 100");
    }
    const VaalerApprox v = vaaler_coefficients(H);
    VaalerCheck check;
    check.max_violation = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < grid_size; ++k) {
        double t = (k + 0.5) / grid_size;
        double lhs = std::fabs(sawtooth(t) - v.approximant(t));
        double rhs = v.majorant(t);
        check.max_violation = std::max(check.max_violation, lhs - rhs);
    }
    check.pass = check.max_violation <= 1e-12;
    return check;
}

}  // namespace pslab
