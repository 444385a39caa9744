#pragma once

// Exact counting of near-coincidences among binomial ratio powers: the
// number of quadruples (m, m~, n, n~) with m, m~ in (M, 2M], n, n~ in
// (N, 2N] and |(m~/m)^alpha - (n~/n)^beta| < delta.  The count is bounded
// by O(MN log 2MN + delta M^2 N^2).

#include <cstdint>

namespace pslab {

struct SpacingParams {
    std::int64_t M = 1;
    std::int64_t N = 1;
    double alpha = 1.0;
    double beta = 1.0;
    double delta = 0.0;
};

// Reference implementation, O(M^2 N^2) pair comparisons.
std::uint64_t spacing_count_naive(const SpacingParams& p);

// Sort-merge implementation: both multisets of ratio powers are sorted and
// near-pairs counted with monotone boundary searches.  Uses the same values
// and the same strict predicate as the naive count, so the two agree
// exactly.
std::uint64_t spacing_count(const SpacingParams& p);

// spacing_count / (M N log(2MN) + delta M^2 N^2).
double spacing_bound_ratio(const SpacingParams& p);

}  // namespace pslab
