#include "pslab/bound_terms.hpp"

#include "pslab/admissibility.hpp"

#include <cmath>
#include <stdexcept>

namespace pslab {

double term_value(const MonomialTerm& t, double X, double H, double M, double N) {
    return std::pow(X, t.e_X.to_double()) * std::pow(H, t.e_H.to_double()) *
           std::pow(M, t.e_M.to_double()) * std::pow(N, t.e_N.to_double());
}

std::vector<MonomialTerm> trilinear_bound_terms(const ExponentPair& pair) {
    if (!is_valid_pair(pair)) {
        throw std::domain_error("trilinear_bound_terms: invalid exponent pair " + pair.str());
    }
    const Rational& k = pair.kappa;
    const Rational& l = pair.lambda;
    const Rational one(1), two(2), three(3), four(4), five(5);
    const Rational s1 = one + k + l;        // 1 + kappa + lambda
    const Rational s2 = two + k + l;        // 2 + kappa + lambda
    const Rational half(1, 2);

    std::vector<MonomialTerm> t;
    t.reserve(12);
    t.push_back({"T1", (one + two * k) / (two * s2), (k + l + one) / s2,
                 (k + l + four) / (two * s2), (two - k + three * l) / (two * s2)});
    t.push_back({"T2", (three * k + l + one) / (four * s1), half, one,
                 (one + l - k) / (two * s1)});
    t.push_back({"T3", (k - l + one) / (four * s1), half, one,
                 (k + three * l + one) / (two * s1)});
    t.push_back({"T4", (five * k + l + two) / (four * s2), half,
                 (three * k + three * l + Rational(8)) / (four * s2),
                 (four + five * l - three * k) / (four * s2)});
    t.push_back({"T5", Rational(1, 4), half, Rational(13, 12), Rational(1, 12)});
    t.push_back({"T6", Rational(0), one, Rational(2, 3), Rational(2, 3)});
    t.push_back({"T7", Rational(-1, 4), half, Rational(13, 12), Rational(13, 12)});
    t.push_back({"T8", Rational(1, 4), half, Rational(11, 12), Rational(5, 12)});
    t.push_back({"T9", (one + two * k) / four, half, (four - k - l) / four,
                 (two + l - three * k) / four});
    t.push_back({"T10", Rational(1, 4), half, half, one});
    t.push_back({"T11", Rational(0), half, one, one});
    t.push_back({"T12", Rational(-1, 2), one, one, one});
    return t;
}

std::vector<MonomialTerm> wu_bound_terms(int k) {
    if (k < 2) {
        throw std::domain_error("wu_bound_terms: k must be >= 2, got " + std::to_string(k));
    }
    const Rational K = Rational(BigInt(1) << static_cast<unsigned>(k));
    const Rational kk(k);
    const Rational d = Rational(6) * K - Rational(2) * kk - Rational(8);
    const Rational half(1, 2), one(1);

    std::vector<MonomialTerm> t;
    t.reserve(7);
    t.push_back({"W1", K / d, (Rational(4) * K - Rational(2) * kk - Rational(4)) / d,
                 (Rational(5) * K - kk - Rational(8)) / d,
                 (Rational(5) * K - Rational(3) * kk - Rational(8)) / d});
    t.push_back({"W2", Rational(1, 4), half, half, one});
    t.push_back({"W3", Rational(1, 4), half, one, half});
    t.push_back({"W4", Rational(0), one, one, Rational(0)});
    t.push_back({"W5", Rational(0), one, half, half});
    t.push_back({"W6", Rational(0), half, one, one});
    t.push_back({"W7", Rational(-1, 2), one, one, one});
    return t;
}

bool wu_restriction_holds(double X, double H, double M, double N) {
    return X <= H * H && X <= H * H * N / M;
}

std::vector<MonomialTerm> small_x_bound_terms() {
    const Rational half(1, 2), one(1);
    return {
        {"L1", Rational(0), one, half, half},
        {"L2", Rational(-1, 2), one, one, one},
        {"L3", Rational(0), half, one, one},
    };
}

Rational AffineExponent::eval(const Rational& gamma, const Rational& mu) const {
    return const_part + gamma_coeff * gamma + mu_coeff * mu;
}

AffineExponent& AffineExponent::operator+=(const AffineExponent& o) {
    const_part += o.const_part;
    gamma_coeff += o.gamma_coeff;
    mu_coeff += o.mu_coeff;
    return *this;
}

AffineExponent AffineExponent::scaled(const Rational& c) const {
    return {const_part * c, gamma_coeff * c, mu_coeff * c};
}

SubstitutionMap type1prime_substitution() {
    // X -> x, H -> x^mu, M -> x^{1-gamma}, N -> x^{1-mu}
    return {
        {Rational(1), Rational(0), Rational(0)},
        {Rational(0), Rational(0), Rational(1)},
        {Rational(1), Rational(-1), Rational(0)},
        {Rational(1), Rational(0), Rational(-1)},
    };
}

SubstitutionMap zero_substitution() {
    AffineExponent z{Rational(0), Rational(0), Rational(0)};
    return {z, z, z, z};
}

AffineExponent substitute(const MonomialTerm& term, const SubstitutionMap& map) {
    AffineExponent e = map.X.scaled(term.e_X);
    e += map.H.scaled(term.e_H);
    e += map.M.scaled(term.e_M);
    e += map.N.scaled(term.e_N);
    return e;
}

std::vector<SubstitutedTerm> substituted_bound_terms(const ExponentPair& pair) {
    const SubstitutionMap map = type1prime_substitution();
    const MWindow window = type1prime_window();

    std::vector<SubstitutedTerm> out;
    out.reserve(12);
    for (const MonomialTerm& t : trilinear_bound_terms(pair)) {
        SubstitutedTerm s;
        s.label = "E" + t.label.substr(1);
        s.exponent = substitute(t, map);
        s.dominated = false;
        out.push_back(std::move(s));
    }

    // A term is dominated when its gamma threshold is strictly below the
    // strongest one; only the binding term(s) stay unflagged.
    Rational strongest(0);
    bool have = false;
    std::vector<GammaConstraint> cs;
    cs.reserve(out.size());
    for (const SubstitutedTerm& s : out) {
        cs.push_back(gamma_threshold(s.exponent, window, s.label));
        const GammaConstraint& c = cs.back();
        if (c.kind == ConstraintKind::Bound && c.direction == Direction::Greater) {
            if (!have || c.threshold > strongest) {
                strongest = c.threshold;
                have = true;
            }
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        const GammaConstraint& c = cs[i];
        out[i].dominated = !(c.kind == ConstraintKind::Bound &&
                             c.direction == Direction::Greater &&
                             have && c.threshold == strongest);
    }
    return out;
}

}  // namespace pslab
