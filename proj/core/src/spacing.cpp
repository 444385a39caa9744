#include "pslab/spacing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace pslab {

namespace {

void validate(const SpacingParams& p) {
    if (p.alpha == 0.0 || p.beta == 0.0) {
        throw std::invalid_argument("spacing_count: alpha and beta must be nonzero");
    }
    if (!(p.delta > 0.0)) {
        throw std::invalid_argument("spacing_count: delta must be positive");
    }
    if (p.M < 1 || p.N < 1) {
        throw std::invalid_argument("spacing_count: M and N must be >= 1");
    }
}

// All (v~/v)^e for v, v~ in (B, 2B].
std::vector<double> ratio_powers(std::int64_t B, double e) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(B) * static_cast<std::size_t>(B));
    for (std::int64_t v = B + 1; v <= 2 * B; ++v) {
        for (std::int64_t vt = B + 1; vt <= 2 * B; ++vt) {
            out.push_back(std::pow(static_cast<double>(vt) / static_cast<double>(v), e));
        }
    }
    return out;
}

}  // namespace

std::uint64_t spacing_count_naive(const SpacingParams& p) {
    validate(p);
    const std::vector<double> ms = ratio_powers(p.M, p.alpha);
    const std::vector<double> ns = ratio_powers(p.N, p.beta);
    std::uint64_t count = 0;
    for (double u : ms) {
        for (double v : ns) {
            if (std::fabs(u - v) < p.delta) {
                ++count;
            }
        }
    }
    return count;
}

std::uint64_t spacing_count(const SpacingParams& p) {
    validate(p);
    const std::vector<double> ms = ratio_powers(p.M, p.alpha);
    std::vector<double> ns = ratio_powers(p.N, p.beta);
    std::sort(ns.begin(), ns.end());
    std::uint64_t count = 0;
    for (double u : ms) {
        // First v with |u - v| < delta and first v past the window, using the
        // same rounded differences the naive scan compares.
        auto lo = std::partition_point(ns.begin(), ns.end(),
                                       [&](double v) { return !(u - v < p.delta); });
        auto hi = std::partition_point(lo, ns.end(),
                                       [&](double v) { return v - u < p.delta; });
        count += static_cast<std::uint64_t>(hi - lo);
    }
    return count;
}

double spacing_bound_ratio(const SpacingParams& p) {
    const double count = static_cast<double>(spacing_count(p));
    const double M = static_cast<double>(p.M);
    const double N = static_cast<double>(p.N);
    return count / (M * N * std::log(2.0 * M * N) + p.delta * M * M * N * N);
}

}  // namespace pslab
