#include "pslab/admissibility.hpp"

#include <doctest.h>

#include <cmath>

using namespace pslab;

namespace {

const ExponentPair kRef = tty_pair();

Rational threshold_of(const RangeReport& r, const std::string& label) {
    for (const GammaConstraint& c : r.constraints) {
        if (c.source_label == label) {
            REQUIRE(c.kind == ConstraintKind::Bound);
            REQUIRE(c.direction == Direction::Greater);
            return c.threshold;
        }
    }
    FAIL("missing constraint ", label);
    return {};
}

}  // namespace

TEST_CASE("per-term thresholds at the reference pair") {
    const MWindow w = type1prime_window();
    auto es = substituted_bound_terms(kRef);

    GammaConstraint e1 = gamma_threshold(es[0].exponent, w, "E1");
    CHECK(e1.direction == Direction::Greater);
    CHECK(e1.threshold == Rational(8886224, 10318869));

    // Exact thresholds of the pair-free terms.
    CHECK(gamma_threshold(es[4].exponent, w, "E5").threshold == Rational(15, 19));
    CHECK(gamma_threshold(es[5].exponent, w, "E6").threshold == Rational(6, 7));
    CHECK(gamma_threshold(es[6].exponent, w, "E7").threshold == Rational(19, 39));
    CHECK(gamma_threshold(es[7].exponent, w, "E8").threshold == Rational(3, 4));
}

TEST_CASE("threshold direction depends on the M-exponent sign") {
    const MWindow w = type1prime_window();
    // E5 = (17/12, -13/12, 5/12): positive M-exponent pins the upper window
    // edge, so 13g/5 - 1 >= 5 - 5g, i.e. g > 15/19.
    AffineExponent e5{Rational(17, 12), Rational(-13, 12), Rational(5, 12)};
    CHECK(gamma_threshold(e5, w, "E5").threshold == Rational(15, 19));
    // M-free: plain linear solve.
    AffineExponent t12{Rational(3, 2), Rational(-1), Rational(0)};
    CHECK(gamma_threshold(t12, w, "T12").threshold == Rational(1, 2));
}

TEST_CASE("degenerate thresholds are reported, never fabricated") {
    const MWindow w = type1prime_window();
    AffineExponent always{Rational(1, 2), Rational(0), Rational(0)};
    CHECK(gamma_threshold(always, w, "a").kind == ConstraintKind::AlwaysSatisfied);
    AffineExponent never{Rational(2), Rational(0), Rational(0)};
    CHECK(gamma_threshold(never, w, "n").kind == ConstraintKind::NeverSatisfiable);
    AffineExponent upper{Rational(1, 2), Rational(1, 4), Rational(0)};
    GammaConstraint c = gamma_threshold(upper, w, "u");
    CHECK(c.direction == Direction::Less);
    CHECK(c.threshold == Rational(2));
}

TEST_CASE("type I and type II constraints") {
    GammaConstraint t2 = type2_constraint();
    CHECK(t2.kind == ConstraintKind::Bound);
    CHECK(t2.direction == Direction::Greater);
    CHECK(t2.threshold == Rational(6, 7));
    CHECK(t2.source_label == "typeII");

    GammaConstraint t1 = type1_constraint();
    CHECK(t1.threshold == Rational(6, 7));
    CHECK(t1.source_label == "typeI");

    // Boundary and point checks of the defining inequality 2(1-g) < 5g-4.
    Rational g = Rational(6, 7);
    CHECK(Rational(2) * (Rational(1) - g) == Rational(5) * g - Rational(4));
    g = Rational(9, 10);
    CHECK(Rational(2) * (Rational(1) - g) < Rational(5) * g - Rational(4));
}

TEST_CASE("headline range at the reference pair") {
    RangeReport r = admissible_range(kRef);
    REQUIRE(r.ok);
    CHECK(r.gamma_min == Rational(8886224, 10318869));
    CHECK(r.c_max == Rational(10318869, 8886224));
    CHECK(r.binding_source == "E1");
    CHECK(r.gamma_min * r.c_max == Rational(1));
    CHECK(r.constraints.size() == 14);  // 12 terms + type II + type I
}

TEST_CASE("range at A/B-generated pairs") {
    // Trivial pair: hand-derivation of the binding term gives
    // (11/6 - 1 - (1/6)(2/3)) / (5/6) = 13/15.
    RangeReport r0 = admissible_range(trivial_pair());
    REQUIRE(r0.ok);
    CHECK(r0.gamma_min == Rational(13, 15));
    CHECK(r0.c_max == Rational(15, 13));
    CHECK(r0.binding_source == "E1");

    // (1/6, 2/3): binding term evaluates to (38/51)(34/29) = 76/87.
    RangeReport r1 = admissible_range({Rational(1, 6), Rational(2, 3)});
    REQUIRE(r1.ok);
    CHECK(r1.gamma_min == Rational(76, 87));
    CHECK(r1.gamma_min >= Rational(6, 7));
    CHECK(r1.gamma_min <= Rational(1));
}

TEST_CASE("window monotonicity") {
    // Raising the lower window edge shrinks the M-range a term must cover,
    // so no gamma threshold can get stronger; shrinking mu_low can only
    // strengthen them.  (Terms pinned at the upper edge are unaffected.)
    auto es = substituted_bound_terms(kRef);
    const MWindow base = type1prime_window();
    for (const auto& e : es) {
        GammaConstraint c0 = gamma_threshold(e.exponent, base, e.label);
        for (int step = 1; step <= 3; ++step) {
            MWindow narrower = base;
            narrower.mu_low = Rational(2, 3) + Rational(step, 100);
            MWindow wider = base;
            wider.mu_low = Rational(2, 3) - Rational(step, 100);
            GammaConstraint cn = gamma_threshold(e.exponent, narrower, e.label);
            GammaConstraint cw = gamma_threshold(e.exponent, wider, e.label);
            if (c0.kind == ConstraintKind::Bound && c0.direction == Direction::Greater) {
                REQUIRE(cn.kind == ConstraintKind::Bound);
                REQUIRE(cw.kind == ConstraintKind::Bound);
                CHECK(cn.threshold <= c0.threshold);
                CHECK(cw.threshold >= c0.threshold);
                if (e.exponent.mu_coeff >= Rational(0)) {
                    CHECK(cn.threshold == c0.threshold);
                }
            }
        }
    }
}

TEST_CASE("domination soundness") {
    // Dropping any non-binding constraint leaves gamma_min unchanged.
    RangeReport r = admissible_range(kRef);
    for (const GammaConstraint& c : r.constraints) {
        if (c.source_label == r.binding_source) {
            continue;
        }
        Rational best(0);
        for (const GammaConstraint& k : r.constraints) {
            if (k.source_label == c.source_label || k.kind != ConstraintKind::Bound ||
                k.direction != Direction::Greater) {
                continue;
            }
            if (k.threshold > best) {
                best = k.threshold;
            }
        }
        CHECK(best == r.gamma_min);
    }
}

TEST_CASE("all generated thresholds lie in (0,1)") {
    for (const ExponentPair& p : {trivial_pair(), kRef, apply_word("BAABABAA")}) {
        for (const GammaConstraint& c : admissible_range(p).constraints) {
            if (c.kind == ConstraintKind::Bound) {
                CHECK(c.threshold.is_positive());
                CHECK(c.threshold < Rational(1));
            }
        }
    }
}

TEST_CASE("word search") {
    SearchResult r0 = search_pairs(0);
    CHECK(r0.word == "");
    CHECK(r0.pair == trivial_pair());

    SearchResult r1 = search_pairs(1);
    // Candidates {"", "A", "B"}; "A" fixes (0,1), and (1/2,1/2) is worse, so
    // the empty word stands.
    CHECK(r1.word == "");
    CHECK(r1.report.gamma_min == Rational(13, 15));

    CHECK_THROWS_AS(search_pairs(-1), std::invalid_argument);

    // Regression: at length 8 the best word is BAABABAA with pair
    // (1/24, 27/32) (verified by hand-applying the two process formulas) and
    // gamma_min 404/469; it must not spuriously beat the reference pair.
    SearchResult r8 = search_pairs(8);
    CHECK(r8.word == "BAABABAA");
    CHECK(r8.pair == ExponentPair{Rational(1, 24), Rational(27, 32)});
    CHECK(r8.report.gamma_min == Rational(404, 469));
    CHECK(r8.report.gamma_min >= Rational(8886224, 10318869));
}

TEST_CASE("historical comparison") {
    RangeReport r = admissible_range(kRef);
    auto rows = historical_compare(r);
    REQUIRE(rows.size() == 14);  // 13 published entries + this computation
    // Sorted ascending, and the computed bound exceeds the strongest
    // published asymptotic-range entry.
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i - 1].c <= rows[i].c);
    }
    CHECK(r.c_max > Rational(2817, 2426));
    // Spot decimal renderings.
    CHECK(Rational(12, 11).decimal(4) == "1.0909");
    CHECK(Rational(243, 205).decimal(4) == "1.1854");
    bool found_computed = false;
    for (const auto& row : rows) {
        if (row.computed) {
            found_computed = true;
            CHECK(row.c == Rational(10318869, 8886224));
        }
    }
    CHECK(found_computed);
}
