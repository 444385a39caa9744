#include "pslab/exponent_pair.hpp"

#include <stdexcept>

namespace pslab {

namespace {

const Rational kHalf(1, 2);

}  // namespace

bool is_valid_pair(const ExponentPair& p) {
    return !p.kappa.is_negative() && p.kappa <= kHalf && p.lambda >= kHalf &&
           p.lambda <= Rational(1);
}

ExponentPair apply_A(const ExponentPair& p) {
    if (!is_valid_pair(p)) {
        throw std::domain_error("apply_A: invalid exponent pair " + p.str());
    }
    Rational d = Rational(2) * p.kappa + Rational(2);
    return {p.kappa / d, (p.kappa + p.lambda + Rational(1)) / d};
}

ExponentPair apply_B(const ExponentPair& p) {
    if (!is_valid_pair(p)) {
        throw std::domain_error("apply_B: invalid exponent pair " + p.str());
    }
    ExponentPair image{p.lambda - kHalf, p.kappa + kHalf};
    if (!is_valid_pair(image)) {
        throw std::domain_error("apply_B: image " + image.str() +
                                " of pair " + p.str() + " leaves the validity region");
    }
    return image;
}

ExponentPair apply_word(std::string_view word) {
    ExponentPair p = trivial_pair();
    for (char c : word) {
        switch (c) {
            case 'A': p = apply_A(p); break;
            case 'B': p = apply_B(p); break;
            default:
                throw std::invalid_argument(
                    std::string("apply_word: invalid process character '") + c +
                    "' (expected A or B)");
        }
    }
    return p;
}

ExponentPair trivial_pair() {
    return {Rational(0), Rational(1)};
}

ExponentPair tty_pair() {
    return {Rational(10769, 351096), Rational(609317, 702192)};
}

}  // namespace pslab
