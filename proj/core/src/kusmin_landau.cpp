#include "pslab/kusmin_landau.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace pslab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double dist_to_nearest_int(double u) {
    return std::fabs(u - std::round(u));
}

// min ||t|| over t in [lo, hi]: zero if the interval contains an integer,
// otherwise attained at an endpoint.
double min_dist_over_interval(double lo, double hi) {
    if (std::floor(hi) >= std::ceil(lo)) {
        return 0.0;
    }
    return std::min(dist_to_nearest_int(lo), dist_to_nearest_int(hi));
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

KLResult kusmin_landau_check(const MonomialPhase& phase, std::int64_t n0, std::int64_t n1) {
    if (phase.amplitude == 0.0) {
        throw std::invalid_argument("kusmin_landau_check: zero amplitude");
    }
    if (n0 < 1 || n1 < n0) {
        throw std::invalid_argument("kusmin_landau_check: need 1 <= n0 <= n1");
    }
    KLResult r;
    auto deriv = [&](double x) {
        return phase.amplitude * phase.theta * std::pow(x, phase.theta - 1.0);
    };
    double d0 = deriv(static_cast<double>(n0));
    double d1 = deriv(static_cast<double>(n1));
    r.lambda = min_dist_over_interval(std::min(d0, d1), std::max(d0, d1));
    if (r.lambda == 0.0) {
        r.skipped = true;
        r.note = "f' meets an integer on the interval; bound not applicable";
        return r;
    }
    r.bound = 1.0 / r.lambda;

    double re = 0.0, im = 0.0;
    for (std::int64_t n = n0; n <= n1; ++n) {
        double f = phase.amplitude * std::pow(static_cast<double>(n), phase.theta);
        double w = f - std::floor(f);
        re += std::cos(kTwoPi * w);
        im += std::sin(kTwoPi * w);
    }
    r.sum_abs = std::hypot(re, im);
    r.pass = r.sum_abs <= r.bound;
    return r;
}

std::vector<KLCase> default_kl_suite() {
    // Fixed seed; cases failing the lambda >= 1e-3 filter are discarded, so
    // the suite is the same 50 cases on every run.
    std::mt19937_64 rng(0x4b4c2024u);
    std::vector<KLCase> suite;
    while (suite.size() < 50) {
        KLCase c;
        c.phase.amplitude = 0.05 + 2.45 * uniform_unit(rng);
        c.phase.theta = 0.4 + 1.2 * uniform_unit(rng);
        c.n0 = 1 + static_cast<std::int64_t>(uniform_unit(rng) * 500.0);
        c.n1 = c.n0 + 50 + static_cast<std::int64_t>(uniform_unit(rng) * 4950.0);
        KLResult probe = kusmin_landau_check(c.phase, c.n0, c.n1);
        if (!probe.skipped && probe.lambda >= 1e-3) {
            suite.push_back(c);
        }
    }
    return suite;
}

}  // namespace pslab
