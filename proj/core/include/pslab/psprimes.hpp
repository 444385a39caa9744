#pragma once

// Exact enumeration of the sequence floor(n^c) for rational c = p/q > 1,
// prime counting along it, the membership test, and the von
// Mangoldt-weighted sawtooth difference sum.  All floor and membership
// decisions are exact integer computations; floating point enters only in
// final per-report statistics and in the sawtooth fractional parts.

#include "pslab/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pslab {

// Largest r with r^q <= v; exact.  Throws std::invalid_argument for q == 0
// or v < 0.
BigInt iroot_floor(const BigInt& v, unsigned q);

// floor(n^{p/q}) computed exactly: the unique r with r^q <= n^p < (r+1)^q.
BigInt floor_pow(std::uint64_t n, unsigned p, unsigned q);

struct FloorPowParts {
    BigInt ipart;
    bool is_exact;  // n^{p/q} is an integer
};
FloorPowParts floor_pow_parts(std::uint64_t n, unsigned p, unsigned q);

// Deterministic primality for all n < 2^64 (Miller-Rabin over the twelve
// smallest prime bases).
bool is_prime(std::uint64_t n);

// c = p/q in lowest terms with p > q >= 1, so gamma = q/p < 1.
struct RationalExponent {
    std::uint64_t p = 2;
    std::uint64_t q = 1;

    RationalExponent() = default;
    RationalExponent(std::uint64_t p_, std::uint64_t q_);  // normalizes; validates p > q >= 1
    static RationalExponent parse(std::string_view text);  // "p/q"

    double value() const { return static_cast<double>(p) / static_cast<double>(q); }
    double gamma() const { return static_cast<double>(q) / static_cast<double>(p); }
    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }

    friend bool operator==(const RationalExponent&, const RationalExponent&) = default;
};

struct PrimeCountReport {
    std::uint64_t x = 0;
    RationalExponent c;
    std::uint64_t count = 0;    // primes <= x appearing in the sequence
    std::uint64_t n_max = 0;    // last index with floor(n^c) <= x
    double main_term = 0.0;     // x^{1/c} / log x
    double ratio = 0.0;         // count / main_term
};

struct CountOptions {
    int threads = 1;
    std::uint64_t budget = 200'000'000;  // max sequence indices to visit
};

// Counts primes <= x in the sequence floor(n^c), n = 1, 2, ...  The sequence
// is strictly increasing for c > 1; this is asserted at runtime rather than
// assumed.  Segmented counting (fixed segment width, ordered aggregation)
// makes the parallel count identical to the serial one.  Requires x >= 2.
PrimeCountReport pi_c(std::uint64_t x, const RationalExponent& c, const CountOptions& opts = {});

// True iff value appears in the sequence, i.e. some integer n lies in
// [value^gamma, (value+1)^gamma).  Decided by exact integer comparisons.
bool membership(std::uint64_t value, const RationalExponent& c);

// Von Mangoldt values for n in [lo, hi] from a smallest-prime-factor sieve.
std::vector<double> von_mangoldt_range(std::uint64_t lo, std::uint64_t hi);

// psi(-n^gamma) with the integer part of n^gamma computed exactly and only
// the fractional remainder in floating point.
double psi_minus_pow(std::uint64_t n, const RationalExponent& c);

struct PsiSumReport {
    double value = 0.0;        // sum_{x/2 < n <= x} Lambda(n) (psi(-n^g) - psi(-(n+1)^g))
    double normalized = 0.0;   // value / x^gamma
};

// Weighted kernel: weights[i] multiplies the difference at n = lo + i.
PsiSumReport psi_difference_sum_weighted(std::uint64_t lo, std::uint64_t hi,
                                         const std::vector<double>& weights,
                                         const RationalExponent& c, double norm_x);

// The sum over n in (x/2, x] with Lambda weights; the normalized value is
// expected to be o(1) in the admissible range.  Throws BudgetError when the
// sieve interval exceeds the budget.
PsiSumReport psi_difference_sum(std::uint64_t x, const RationalExponent& c,
                                std::uint64_t budget = 200'000'000);

}  // namespace pslab
