#pragma once

// Exact rational arithmetic over arbitrary-precision integers.
//
// Every exponent, threshold and bound constant in this project is an exact
// fraction; no operation in this header ever rounds.  Values are kept
// normalized at all times: denominator > 0 and gcd(|num|, den) = 1.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pslab {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    // Normalizing constructor; throws std::domain_error on a zero denominator.
    Rational(BigInt num, BigInt den);

    // Parses "num/den" or a bare integer "n".  Whitespace is not accepted.
    // Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // Reciprocal; throws std::domain_error for zero.
    Rational inverse() const;

    // Serialized form "num/den", e.g. "10769/351096", "-1/2", "0/1".
    std::string str() const;

    // Exact decimal rendering with the given number of fractional digits,
    // rounded half away from zero (e.g. (10318869/8886224).decimal(4) ==
    // "1.1612").
    std::string decimal(int digits) const;

    double to_double() const;

private:
    void normalize();

    BigInt num_;  // carries the sign
    BigInt den_;  // > 0
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace pslab
