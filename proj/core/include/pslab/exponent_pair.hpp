#pragma once

// Van der Corput exponent-pair calculus.
//
// A pair (kappa, lambda) certifies the one-dimensional bound
//     sum_{n ~ N} e(f(n))  <<  Y^kappa N^lambda + Y^{-1}
// for phases with |f^(s)| ~ Y N^{1-s}.  The A- and B-processes map valid
// pairs to valid pairs; all arithmetic here is exact.

#include "pslab/rational.hpp"

#include <string>
#include <string_view>

namespace pslab {

struct ExponentPair {
    Rational kappa;
    Rational lambda;

    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;

    std::string str() const { return "(" + kappa.str() + ", " + lambda.str() + ")"; }
};

// Classical validity region 0 <= kappa <= 1/2 <= lambda <= 1.
bool is_valid_pair(const ExponentPair& p);

// A(kappa, lambda) = (kappa/(2 kappa + 2), (kappa + lambda + 1)/(2 kappa + 2)).
// Throws std::domain_error if the input pair is invalid.
ExponentPair apply_A(const ExponentPair& p);

// B(kappa, lambda) = (lambda - 1/2, kappa + 1/2).
// Throws std::domain_error if the input pair or its image is invalid; the
// message reports both pairs.
ExponentPair apply_B(const ExponentPair& p);

// Applies a word over {A, B} left to right, starting from the trivial pair
// (0, 1).  Throws std::invalid_argument on characters outside {A, B}.
ExponentPair apply_word(std::string_view word);

// (0, 1), the trivial exponent pair.
ExponentPair trivial_pair();

// (10769/351096, 609317/702192): a computer-optimized pair from the
// Tao-Trudgian-Yang exponent-pair tables.  It lies outside the hull reachable
// by A/B words from (0, 1) and is carried here as input data, not derived.
ExponentPair tty_pair();

}  // namespace pslab
