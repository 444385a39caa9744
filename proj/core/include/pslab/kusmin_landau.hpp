#pragma once

// Kusmin-Landau bound checker for monomial phases f(n) = A n^theta.
//
// When f' is monotonic on [n0, n1] and stays at distance >= lambda > 0 from
// every integer, |sum_{n0 <= n <= n1} e(f(n))| <= 1/lambda.  The constant 1
// is valid because the sharp constant cot(pi lambda / 2) <= 2/(pi lambda).

#include <cstdint>
#include <string>
#include <vector>

namespace pslab {

struct MonomialPhase {
    double amplitude = 0.0;  // A
    double theta = 0.0;      // exponent; f' is monotonic for theta != 1,
                             // constant for theta == 1
};

struct KLResult {
    double sum_abs = 0.0;
    double lambda = 0.0;  // computed min distance of f' to the integers
    double bound = 0.0;   // 1/lambda
    bool pass = false;    // sum_abs <= bound
    bool skipped = false; // lambda == 0 somewhere on the interval
    std::string note;
};

// Direct summation of e(f(n)) over [n0, n1] against the 1/lambda bound.
// lambda is computed from f' at the interval endpoints (f' is monotonic, so
// its range is the closed interval between the endpoint values); if that
// range contains an integer the case is skipped, not failed.
KLResult kusmin_landau_check(const MonomialPhase& phase, std::int64_t n0, std::int64_t n1);

struct KLCase {
    MonomialPhase phase;
    std::int64_t n0 = 0;
    std::int64_t n1 = 0;
};

// Deterministic 50-case suite of monomial phases whose computed lambda is
// >= 1e-3 (seeded draw, filtered).
std::vector<KLCase> default_kl_suite();

}  // namespace pslab
