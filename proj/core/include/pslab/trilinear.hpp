#pragma once

// Direct evaluation of the trilinear exponential sum
//
//     T = sum_{h ~ H} sum_{m ~ M} sum_{n ~ N} a_h b_m
//            e( X (h/H)^alpha (m/M)^beta (n/N)^gamma )
//
// with |a_h|, |b_m| <= 1, and its comparison against the twelve-term bound
// envelope (and optionally Wu's envelope).  Phases are reduced mod 1 before
// the multiplication by 2*pi; accumulation is compensated (Neumaier) with a
// fixed reduction order over h, so results are bit-identical for any worker
// count.

#include "pslab/bound_terms.hpp"
#include "pslab/exponent_pair.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pslab {

inline constexpr std::uint64_t kDefaultTrilinearBudget = 1'000'000'000;

struct TrilinearSpec {
    double X = 0.0;
    std::int64_t H = 1;
    std::int64_t M = 1;
    std::int64_t N = 1;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    std::vector<std::complex<double>> a;  // a[i] is the coefficient of h = H+1+i
    std::vector<std::complex<double>> b;  // b[i] is the coefficient of m = M+1+i
};

// Coefficients r e(phi) with r, phi drawn uniformly from [0, 1); the draw
// order (all a, then all b) and the bit-to-double mapping are fixed, so a
// seed determines the spec exactly.
TrilinearSpec make_random_spec(double X, std::int64_t H, std::int64_t M, std::int64_t N,
                               double alpha, double beta, double gamma, std::uint64_t seed);

// Throws std::invalid_argument on malformed coefficients, BudgetError when
// H*M*N exceeds the budget.
std::complex<double> trilinear_sum(const TrilinearSpec& spec, int threads = 1,
                                   std::uint64_t budget = kDefaultTrilinearBudget);

struct EnvelopeReport {
    double t_abs = 0.0;      // |T|
    double envelope = 0.0;   // L * (twelve-term bound value), implied constant 1
    double ratio = 0.0;      // t_abs / envelope
    // Wu's envelope, present when requested and X <= min(H^2, H^2 N / M).
    std::optional<double> wu_envelope;
    std::optional<double> wu_ratio;
    std::string diagnostics;  // near-violation notes
};

// Validates the hypotheses alpha*beta*gamma*(1-alpha) != 0 and
// (gamma-1)/(1-alpha) not a nonnegative integer (tolerance 1e-9), then
// evaluates |T| against the envelope.  Throws std::invalid_argument naming
// the failed condition.
EnvelopeReport envelope_ratio(const TrilinearSpec& spec, const ExponentPair& pair,
                              bool wu_compare = false, int wu_k = 2, int threads = 1,
                              std::uint64_t budget = kDefaultTrilinearBudget);

}  // namespace pslab
