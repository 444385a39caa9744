#include "pslab/admissibility.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace pslab {

namespace {

// Solves A + B*gamma <= 1 exactly.
GammaConstraint solve_linear(const Rational& A, const Rational& B, std::string label) {
    GammaConstraint c;
    c.source_label = std::move(label);
    if (B.is_zero()) {
        c.kind = A <= Rational(1) ? ConstraintKind::AlwaysSatisfied
                                  : ConstraintKind::NeverSatisfiable;
        return c;
    }
    c.kind = ConstraintKind::Bound;
    if (B.is_negative()) {
        c.direction = Direction::Greater;
        c.threshold = (A - Rational(1)) / (-B);
    } else {
        c.direction = Direction::Less;
        c.threshold = (Rational(1) - A) / B;
    }
    return c;
}

// Solves lhs(gamma) < rhs(gamma) for affine lhs, rhs (mu slots unused).
GammaConstraint solve_strict_less(const AffineExponent& lhs, const AffineExponent& rhs,
                                  std::string label) {
    // lhs - rhs < 0  <=>  (diff_const + 1) + diff_gamma * gamma <= 1
    Rational A = lhs.const_part - rhs.const_part + Rational(1);
    Rational B = lhs.gamma_coeff - rhs.gamma_coeff;
    return solve_linear(A, B, std::move(label));
}

}  // namespace

MWindow type1prime_window() {
    return {Rational(2, 3), {Rational(5), Rational(-5), Rational(0)}};
}

GammaConstraint gamma_threshold(const AffineExponent& exponent, const MWindow& window,
                                std::string source_label) {
    Rational A = exponent.const_part;
    Rational B = exponent.gamma_coeff;
    if (exponent.mu_coeff.is_positive()) {
        A += exponent.mu_coeff * window.mu_high.const_part;
        B += exponent.mu_coeff * window.mu_high.gamma_coeff;
    } else if (exponent.mu_coeff.is_negative()) {
        A += exponent.mu_coeff * window.mu_low;
    }
    return solve_linear(A, B, std::move(source_label));
}

GammaConstraint type2_constraint() {
    // 2(1 - gamma) < 5*gamma - 4
    AffineExponent lhs{Rational(2), Rational(-2), Rational(0)};
    AffineExponent rhs{Rational(-4), Rational(5), Rational(0)};
    return solve_strict_less(lhs, rhs, "typeII");
}

GammaConstraint type1_constraint() {
    // 1 - gamma/2 < 3*gamma - 2
    AffineExponent lhs{Rational(1), Rational(-1, 2), Rational(0)};
    AffineExponent rhs{Rational(-2), Rational(3), Rational(0)};
    return solve_strict_less(lhs, rhs, "typeI");
}

RangeReport admissible_range(const ExponentPair& pair) {
    const MWindow window = type1prime_window();

    RangeReport report;
    for (const SubstitutedTerm& term : substituted_bound_terms(pair)) {
        report.constraints.push_back(gamma_threshold(term.exponent, window, term.label));
    }
    report.constraints.push_back(type2_constraint());
    report.constraints.push_back(type1_constraint());

    bool have_lower = false;
    for (const GammaConstraint& c : report.constraints) {
        switch (c.kind) {
            case ConstraintKind::NeverSatisfiable:
                report.ok = false;
                report.failure = "constraint " + c.source_label + " is never satisfiable";
                return report;
            case ConstraintKind::AlwaysSatisfied:
                break;
            case ConstraintKind::Bound:
                if (c.direction == Direction::Greater) {
                    if (!have_lower || c.threshold > report.gamma_min) {
                        report.gamma_min = c.threshold;
                        report.binding_source = c.source_label;
                        have_lower = true;
                    }
                }
                break;
        }
    }
    if (!have_lower) {
        report.ok = false;
        report.failure = "no lower constraint on gamma was produced";
        return report;
    }
    // Upper constraints (gamma < t) do not occur for the tabulated bounds,
    // but a substitution could produce one; reject an empty intersection.
    for (const GammaConstraint& c : report.constraints) {
        if (c.kind == ConstraintKind::Bound && c.direction == Direction::Less &&
            c.threshold <= report.gamma_min) {
            report.ok = false;
            report.failure = "constraints " + report.binding_source + " and " +
                             c.source_label + " leave no admissible gamma";
            return report;
        }
    }
    if (report.gamma_min >= Rational(1) || !report.gamma_min.is_positive()) {
        report.ok = false;
        report.failure = "gamma_min " + report.gamma_min.str() + " leaves no c > 1";
        return report;
    }
    report.c_max = report.gamma_min.inverse();
    return report;
}

SearchResult search_pairs(int max_word_length) {
    if (max_word_length < 0) {
        throw std::invalid_argument("search_pairs: negative max_word_length");
    }
    SearchResult best;
    bool have = false;
    std::string word;
    // Words enumerated by length, lexicographically within a length (A < B);
    // keeping the first strict improvement realizes the tie-break.
    auto consider = [&](const std::string& w) {
        RangeReport r = admissible_range(apply_word(w));
        if (!r.ok) {
            return;
        }
        if (!have || r.gamma_min < best.report.gamma_min) {
            best = {w, apply_word(w), std::move(r)};
            have = true;
        }
    };
    for (int len = 0; len <= max_word_length; ++len) {
        word.assign(static_cast<std::size_t>(len), 'A');
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
            for (int i = 0; i < len; ++i) {
                word[static_cast<std::size_t>(i)] =
                    (bits >> (len - 1 - i)) & 1 ? 'B' : 'A';
            }
            consider(word);
        }
    }
    return best;
}

std::vector<HistoricalBound> historical_c_bounds() {
    return {
        {"Piatetski-Shapiro", Rational(12, 11), true},
        {"Kolesnik", Rational(10, 9), true},
        {"Graham; Leitmann", Rational(69, 62), true},
        {"Heath-Brown", Rational(755, 662), true},
        {"Kolesnik", Rational(39, 34), true},
        {"Liu-Rivat", Rational(15, 13), true},
        {"Rivat", Rational(6121, 5302), true},
        {"Rivat-Sargos", Rational(2817, 2426), true},
        {"Rivat", Rational(7, 6), false},
        {"Baker-Harman-Rivat; Jia", Rational(20, 17), false},
        {"Jia", Rational(13, 11), false},
        {"Kumchev", Rational(45, 38), false},
        {"Rivat-Wu", Rational(243, 205), false},
    };
}

std::vector<HistoryRow> historical_compare(const RangeReport& report) {
    std::vector<HistoryRow> rows;
    for (const HistoricalBound& h : historical_c_bounds()) {
        rows.push_back({h.authors, h.c, false, h.asymptotic});
    }
    if (report.ok) {
        rows.push_back({"this computation", report.c_max, true, true});
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const HistoryRow& a, const HistoryRow& b) { return a.c < b.c; });
    return rows;
}

}  // namespace pslab
