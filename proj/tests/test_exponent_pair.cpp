#include "pslab/exponent_pair.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace pslab;

TEST_CASE("validity region") {
    CHECK(is_valid_pair({Rational(0), Rational(1)}));
    CHECK(is_valid_pair({Rational(10769, 351096), Rational(609317, 702192)}));
    CHECK_FALSE(is_valid_pair({Rational(3, 5), Rational(3, 5)}));
    CHECK_FALSE(is_valid_pair({Rational(-1, 10), Rational(1)}));
    CHECK_FALSE(is_valid_pair({Rational(0), Rational(11, 10)}));
    CHECK_FALSE(is_valid_pair({Rational(1, 4), Rational(1, 4)}));
}

TEST_CASE("A-process") {
    CHECK(apply_A(trivial_pair()) == trivial_pair());  // fixed point
    CHECK(apply_A({Rational(1, 2), Rational(1, 2)}) ==
          ExponentPair{Rational(1, 6), Rational(2, 3)});
    CHECK(apply_A({Rational(1, 6), Rational(2, 3)}) ==
          ExponentPair{Rational(1, 14), Rational(11, 14)});
    CHECK_THROWS_AS(apply_A({Rational(3, 5), Rational(3, 5)}), std::domain_error);
}

TEST_CASE("B-process") {
    CHECK(apply_B(trivial_pair()) == ExponentPair{Rational(1, 2), Rational(1, 2)});
    CHECK(apply_B({Rational(1, 6), Rational(2, 3)}) ==
          ExponentPair{Rational(1, 6), Rational(2, 3)});  // fixed point
    CHECK(apply_B({Rational(1, 14), Rational(11, 14)}) ==
          ExponentPair{Rational(2, 7), Rational(4, 7)});
    CHECK_THROWS_AS(apply_B({Rational(3, 5), Rational(3, 5)}), std::domain_error);
}

TEST_CASE("word application") {
    CHECK(apply_word("") == trivial_pair());
    CHECK(apply_word("B") == ExponentPair{Rational(1, 2), Rational(1, 2)});
    CHECK(apply_word("BA") == ExponentPair{Rational(1, 6), Rational(2, 3)});
    CHECK_THROWS_AS(apply_word("BAC"), std::invalid_argument);
    CHECK_THROWS_AS(apply_word("ab"), std::invalid_argument);
}

TEST_CASE("word composition") {
    // apply_word(w1 ++ w2) equals applying w2 starting from apply_word(w1).
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::string w1, w2;
        for (std::uint64_t k = rng() % 6; k > 0; --k) w1 += (rng() & 1) ? 'B' : 'A';
        for (std::uint64_t k = rng() % 6; k > 0; --k) w2 += (rng() & 1) ? 'B' : 'A';
        ExponentPair direct = apply_word(w1 + w2);
        ExponentPair staged = apply_word(w1);
        for (char c : w2) staged = c == 'A' ? apply_A(staged) : apply_B(staged);
        CHECK(direct == staged);
    }
}

TEST_CASE("closure under A and B") {
    // Every pair reachable by words stays in the validity region.
    for (std::uint64_t bits = 0; bits < (1u << 10); ++bits) {
        std::string w;
        for (int i = 0; i < 10; ++i) w += (bits >> i) & 1 ? 'B' : 'A';
        ExponentPair p = apply_word(w);
        CHECK(is_valid_pair(p));
        CHECK(is_valid_pair(apply_A(p)));
        CHECK(is_valid_pair(apply_B(p)));
    }
}

TEST_CASE("reference pair") {
    ExponentPair p = tty_pair();
    CHECK(p.kappa == Rational(10769, 351096));
    CHECK(p.lambda == Rational(609317, 702192));
    CHECK(is_valid_pair(p));
}
