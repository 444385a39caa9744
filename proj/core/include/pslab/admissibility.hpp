#pragma once

// Linear gamma-constraints and the admissible (gamma, c) range.
//
// Each substituted bound term x^{a + b*gamma} M^{m} must stay <= x across the
// whole type I' window x^{2/3} << M << x^{5-5*gamma}; the worst M turns the
// requirement into a single linear inequality in gamma, solved exactly.  The
// type I / type II block-size constraints contribute gamma > 6/7 each, and
// the admissible range is the intersection.

#include "pslab/bound_terms.hpp"
#include "pslab/exponent_pair.hpp"
#include "pslab/rational.hpp"

#include <string>
#include <vector>

namespace pslab {

enum class ConstraintKind {
    Bound,            // gamma > threshold or gamma < threshold
    AlwaysSatisfied,  // degenerate: holds for every gamma
    NeverSatisfiable, // degenerate: holds for no gamma
};

enum class Direction { Greater, Less };

struct GammaConstraint {
    ConstraintKind kind = ConstraintKind::Bound;
    Direction direction = Direction::Greater;
    Rational threshold;  // meaningful only for kind == Bound
    std::string source_label;
};

// M-window [x^{mu_low}, x^{mu_high(gamma)}]; the upper edge is affine in
// gamma (mu_coeff unused).
struct MWindow {
    Rational mu_low;
    AffineExponent mu_high;
};

// The window x^{2/3} << M << x^{5-5*gamma} of the type I' range.
MWindow type1prime_window();

// Requires exponent(gamma, mu) <= 1 for all mu in the window: terms with
// mu_coeff > 0 are pinned at the upper edge, mu_coeff < 0 at the lower edge.
// Degenerate inequalities yield AlwaysSatisfied / NeverSatisfiable, never a
// fabricated threshold.
GammaConstraint gamma_threshold(const AffineExponent& exponent, const MWindow& window,
                                std::string source_label);

// Type II block range fits inside the bilinear window: 2(1-gamma) < 5*gamma-4,
// i.e. gamma > 6/7.
GammaConstraint type2_constraint();

// Type I tail range: 1 - gamma/2 < 3*gamma - 2, i.e. gamma > 6/7.
GammaConstraint type1_constraint();

struct RangeReport {
    bool ok = true;
    std::string failure;          // set when !ok
    Rational gamma_min;           // max of all "greater" thresholds
    Rational c_max;               // 1/gamma_min, exact
    std::string binding_source;   // a constraint achieving gamma_min
    std::vector<GammaConstraint> constraints;
};

// Full pipeline: substituted terms -> per-term thresholds -> type I/II
// constraints -> exact gamma_min, c_max and the binding constraint.
RangeReport admissible_range(const ExponentPair& pair);

struct SearchResult {
    std::string word;
    ExponentPair pair;
    RangeReport report;
};

// Enumerates all A/B words of length <= max_word_length (from the trivial
// pair, left to right) and returns the one minimizing gamma_min.  Ties break
// to the shorter word, then lexicographically smaller; enumeration order is
// fixed, so the result is deterministic.
SearchResult search_pairs(int max_word_length);

struct HistoricalBound {
    std::string authors;
    Rational c;
    bool asymptotic;  // true: full asymptotic formula; false: lower bound only
};

// Published admissible c ranges, as reference data.
std::vector<HistoricalBound> historical_c_bounds();

struct HistoryRow {
    std::string source;
    Rational c;
    bool computed;    // true for the row carrying this report's c_max
    bool asymptotic;
};

// The historical table with the report's c_max merged in, sorted by c.
std::vector<HistoryRow> historical_compare(const RangeReport& report);

}  // namespace pslab
