#include "pslab/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <utility>

namespace pslab {

namespace {

BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

}  // namespace

void Rational::normalize() {
    if (den_ == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = big_gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("Rational: empty string");
    }
    auto parse_int = [](std::string_view s) -> BigInt {
        if (s.empty()) {
            throw std::invalid_argument("Rational: empty integer field");
        }
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) {
            throw std::invalid_argument("Rational: lone sign");
        }
        for (std::size_t k = i; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9') {
                throw std::invalid_argument("Rational: invalid character in '" +
                                            std::string(s) + "'");
            }
        }
        // cpp_int's parser takes a leading '-' but not '+'.
        BigInt magnitude{std::string(s.substr(i))};
        return s[0] == '-' ? BigInt(-magnitude) : magnitude;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    }
    return Rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) {
        throw std::domain_error("Rational: division by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross multiplication preserves order.
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::inverse() const {
    if (num_ == 0) {
        throw std::domain_error("Rational: inverse of zero");
    }
    return Rational(den_, num_);
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) {
        throw std::invalid_argument("Rational::decimal: negative digit count");
    }
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
    BigInt a = (num_ < 0 ? BigInt(-num_) : num_) * scale;
    BigInt q = a / den_;
    BigInt rem = a % den_;
    if (2 * rem >= den_) {
        ++q;
    }
    std::string s = q.str();
    std::string out;
    if (digits == 0) {
        out = s;
    } else {
        if (s.size() <= static_cast<std::size_t>(digits)) {
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        }
        out = s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
    }
    if (num_ < 0 && q != 0) {
        out.insert(0, 1, '-');
    }
    return out;
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

Rational abs(const Rational& r) {
    return r.is_negative() ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace pslab
