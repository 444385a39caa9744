// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Exit code is the number of
// failed criteria.

#include "pslab/admissibility.hpp"
#include "pslab/bound_terms.hpp"
#include "pslab/exponent_pair.hpp"
#include "pslab/kusmin_landau.hpp"
#include "pslab/psprimes.hpp"
#include "pslab/rational.hpp"
#include "pslab/spacing.hpp"
#include "pslab/trilinear.hpp"
#include "pslab/vaaler.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace pslab;

// Regression ceiling for criterion 10, frozen at the first green run of the
// envelope grid (observed maximum 4.823e-4; ceiling set at roughly twice
// that).  The bound's implied constant is unspecified, so this pins observed
// behavior, not a published number.
constexpr double kEnvelopeRatioCeiling = 1e-3;

struct Detail {
    std::vector<std::string> lines;
    bool ok = true;

    void check(bool cond, const std::string& msg) {
        if (!cond) {
            ok = false;
            lines.push_back("FAIL: " + msg);
        }
    }
    void info(const std::string& msg) { lines.push_back(msg); }
};

bool within(double value, double target, double tol) {
    return std::fabs(value - target) <= tol;
}

// ---- criterion bodies ------------------------------------------------------

void criterion1_headline(Detail& d) {
    RangeReport r = admissible_range(tty_pair());
    d.check(r.ok, "range derivation failed: " + r.failure);
    d.check(r.gamma_min == Rational(8886224, 10318869),
            "gamma_min = " + r.gamma_min.str() + ", expected 8886224/10318869");
    d.check(r.c_max == Rational(10318869, 8886224),
            "c_max = " + r.c_max.str() + ", expected 10318869/8886224");
    d.check(r.binding_source == "E1", "binding = " + r.binding_source + ", expected E1");
}

void criterion2_eterms(Detail& d) {
    auto es = substituted_bound_terms(tty_pair());
    d.check(es.size() == 12, "expected 12 substituted terms");
    d.check(es[0].exponent.const_part == Rational(3697844, 2035239),
            "E1 const = " + es[0].exponent.const_part.str());
    d.check(es[0].exponent.gamma_coeff == Rational(-3439623, 4070478),
            "E1 gamma coefficient = " + es[0].exponent.gamma_coeff.str());
    d.check(es[0].exponent.mu_coeff == Rational(-544703, 4070478),
            "E1 mu coefficient = " + es[0].exponent.mu_coeff.str());

    const MWindow w = type1prime_window();
    auto thr = [&](int i) { return gamma_threshold(es[i].exponent, w, es[i].label); };

    d.check(thr(4).threshold == Rational(15, 19), "E5 threshold != 15/19");
    d.check(thr(5).threshold == Rational(6, 7), "E6 threshold != 6/7");
    d.check(thr(6).threshold == Rational(19, 39), "E7 threshold != 19/39");
    d.check(thr(7).threshold == Rational(3, 4), "E8 threshold != 3/4");

    // Decimal entries of the published threshold list, tolerance 5e-4.
    const struct { int idx; double printed; } decimals[] = {
        {1, 0.762}, {2, 0.675}, {3, 0.838}, {8, 0.782},
    };
    for (const auto& dec : decimals) {
        GammaConstraint c = thr(dec.idx);
        double exact = c.threshold.to_double();
        d.check(within(exact, dec.printed, 5e-4),
                es[dec.idx].label + " threshold " + c.threshold.str() + " = " +
                    c.threshold.decimal(6) + " vs printed " + std::to_string(dec.printed) +
                    " (|diff| > 5e-4)");
    }
}

void criterion3_type_constraints(Detail& d) {
    GammaConstraint t2 = type2_constraint();
    GammaConstraint t1 = type1_constraint();
    d.check(t2.kind == ConstraintKind::Bound && t2.direction == Direction::Greater &&
                t2.threshold == Rational(6, 7),
            "type II constraint is not gamma > 6/7");
    d.check(t1.kind == ConstraintKind::Bound && t1.direction == Direction::Greater &&
                t1.threshold == Rational(6, 7),
            "type I constraint is not gamma > 6/7");
}

void criterion4_calculus(Detail& d) {
    d.check(apply_A({Rational(1, 2), Rational(1, 2)}) ==
                ExponentPair{Rational(1, 6), Rational(2, 3)},
            "A(1/2,1/2) != (1/6,2/3)");
    d.check(apply_B(trivial_pair()) == ExponentPair{Rational(1, 2), Rational(1, 2)},
            "B(0,1) != (1/2,1/2)");
    d.check(apply_A(trivial_pair()) == trivial_pair(), "A(0,1) != (0,1)");
    d.check(apply_B({Rational(1, 6), Rational(2, 3)}) ==
                ExponentPair{Rational(1, 6), Rational(2, 3)},
            "B(1/6,2/3) != (1/6,2/3)");
    for (std::uint64_t bits = 0; bits < (1u << 6); ++bits) {
        std::string w;
        for (int i = 0; i < 6; ++i) w += (bits >> i) & 1 ? 'B' : 'A';
        d.check(is_valid_pair(apply_word(w)), "generated pair left the region at word " + w);
    }
}

void criterion5_vaaler(Detail& d) {
    for (int H : {1, 2, 4, 8, 16, 32, 64}) {
        VaalerCheck c = verify_vaaler(H, 10000);
        d.check(c.pass, "H = " + std::to_string(H) +
                            ": max violation = " + std::to_string(c.max_violation));
    }
}

void criterion6_kusmin_landau(Detail& d) {
    auto suite = default_kl_suite();
    d.check(suite.size() == 50, "suite size != 50");
    for (std::size_t i = 0; i < suite.size(); ++i) {
        KLResult r = kusmin_landau_check(suite[i].phase, suite[i].n0, suite[i].n1);
        d.check(!r.skipped && r.lambda >= 1e-3,
                "case " + std::to_string(i) + " has lambda < 1e-3");
        d.check(r.pass, "case " + std::to_string(i) + ": |sum| = " +
                            std::to_string(r.sum_abs) + " > 1/lambda = " +
                            std::to_string(r.bound));
    }
}

void criterion7_spacing(Detail& d) {
    d.check(spacing_count({1, 1, 1.0, 1.0, 0.5}) == 1, "count(1,1;0.5) != 1");
    d.check(spacing_count({1, 1, 1.0, 1.0, 1e-3}) == 1, "count(1,1;1e-3) != 1");
    d.check(spacing_count({2, 2, 1.0, 1.0, 0.01}) == 6, "count(2,2;1,1,0.01) != 6");

    double worst_ratio = 0.0;
    for (std::int64_t M : {1, 2, 4, 8, 16, 32}) {
        for (std::int64_t N : {1, 2, 4, 8, 16, 32}) {
            for (double alpha : {1.0, -1.0, 0.5}) {
                for (double beta : {1.0, -1.0, 0.5}) {
                    for (double delta : {1e-3, 1e-2, 1e-1, 0.3}) {
                        SpacingParams p{M, N, alpha, beta, delta};
                        std::uint64_t merge = spacing_count(p);
                        std::uint64_t naive = spacing_count_naive(p);
                        if (merge != naive) {
                            d.check(false, "count mismatch at M=" + std::to_string(M) +
                                               " N=" + std::to_string(N));
                        }
                        double ratio = spacing_bound_ratio(p);
                        worst_ratio = std::max(worst_ratio, ratio);
                        if (ratio > 8.0) {
                            d.check(false, "bound ratio " + std::to_string(ratio) +
                                               " > 8 at M=" + std::to_string(M) +
                                               " N=" + std::to_string(N));
                        }
                    }
                }
            }
        }
    }
    d.info("worst bound ratio over the grid: " + std::to_string(worst_ratio));
}

void criterion8_counting(Detail& d) {
    PrimeCountReport hand = pi_c(31, RationalExponent(3, 2));
    d.check(hand.count == 4, "pi_{3/2}(31) = " + std::to_string(hand.count) + ", expected 4");

    RationalExponent c(6, 5);
    for (std::uint64_t x : {10000ull, 100000ull, 1000000ull}) {
        PrimeCountReport r = pi_c(x, c);
        d.info("x = " + std::to_string(x) + ": count = " + std::to_string(r.count) +
               ", ratio = " + std::to_string(r.ratio));
        d.check(r.ratio >= 0.8 && r.ratio <= 1.3,
                "ratio " + std::to_string(r.ratio) + " outside [0.8, 1.3] at x = " +
                    std::to_string(x));
    }

    CountOptions par;
    par.threads = 4;
    PrimeCountReport serial = pi_c(1000000, c);
    PrimeCountReport parallel = pi_c(1000000, c, par);
    d.check(serial.count == parallel.count, "parallel count differs from serial");
}

void criterion9_floor_pow(Detail& d) {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 100000; ++i) {
        std::uint64_t n = rng() % 1'000'000'000 + 1;
        unsigned p = static_cast<unsigned>(rng() % 7 + 1);
        unsigned q = static_cast<unsigned>(rng() % 7 + 1);
        BigInt r = floor_pow(n, p, q);
        BigInt np = boost::multiprecision::pow(BigInt(n), p);
        if (!(boost::multiprecision::pow(r, q) <= np &&
              np < boost::multiprecision::pow(r + 1, q))) {
            d.check(false, "floor_pow violated at n=" + std::to_string(n) + " p=" +
                               std::to_string(p) + " q=" + std::to_string(q));
            return;
        }
    }

    for (auto c : {RationalExponent(3, 2), RationalExponent(6, 5), RationalExponent(7, 6)}) {
        std::set<std::uint64_t> values;
        for (std::uint64_t n = 1;; ++n) {
            BigInt v = floor_pow(n, static_cast<unsigned>(c.p), static_cast<unsigned>(c.q));
            if (v > 10000) break;
            values.insert(v.convert_to<std::uint64_t>());
        }
        for (std::uint64_t m = 2; m <= 10000; ++m) {
            if (!is_prime(m)) continue;
            if (membership(m, c) != (values.count(m) > 0)) {
                d.check(false, "membership disagrees with enumeration at p=" +
                                   std::to_string(m) + " c=" + c.str());
                return;
            }
        }
    }
}

void criterion10_envelope(Detail& d) {
    double worst = 0.0;
    for (double X : {1e2, 1e3, 1e4}) {
        for (std::int64_t H : {8, 16, 32}) {
            for (std::int64_t M : {8, 16, 32}) {
                for (std::int64_t N : {8, 16, 32}) {
                    TrilinearSpec s = make_random_spec(X, H, M, N, 0.5, 1.0, 0.75, 42);
                    EnvelopeReport r = envelope_ratio(s, tty_pair());
                    worst = std::max(worst, r.ratio);
                }
            }
        }
    }
    d.info("max envelope ratio over the grid: " + std::to_string(worst));
    d.check(worst <= kEnvelopeRatioCeiling,
            "max ratio " + std::to_string(worst) + " exceeds frozen ceiling " +
                std::to_string(kEnvelopeRatioCeiling));
}

// ---- driver ----------------------------------------------------------------

struct Criterion {
    const char* name;
    double time_limit_s;
    std::function<void(Detail&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"headline exactness (c < 10318869/8886224, binding E1)", 1.0, criterion1_headline},
        {"E-term fidelity (exact exponents and thresholds)", 1.0, criterion2_eterms},
        {"type I/II constraints (gamma > 6/7)", 1.0, criterion3_type_constraints},
        {"exponent-pair calculus", 1.0, criterion4_calculus},
        {"Vaaler inequality on grids", 30.0, criterion5_vaaler},
        {"Kusmin-Landau 50-case suite", 30.0, criterion6_kusmin_landau},
        {"spacing counts and bound ratio", 120.0, criterion7_spacing},
        {"Piatetski-Shapiro prime counting", 120.0, criterion8_counting},
        {"floor_pow exactness and membership", 60.0, criterion9_floor_pow},
        {"envelope regression grid", 300.0, criterion10_envelope},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        Detail d;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(d);
        } catch (const std::exception& e) {
            d.check(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= c.time_limit_s) {
            d.check(false, "runtime " + std::to_string(secs) + " s exceeds limit " +
                               std::to_string(c.time_limit_s) + " s");
        }
        std::printf("[%2zu] %-55s %s (%.2f s)\n", i + 1, c.name, d.ok ? "PASS" : "FAIL", secs);
        for (const std::string& line : d.lines) {
            std::printf("     %s\n", line.c_str());
        }
        if (!d.ok) {
            ++failures;
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
