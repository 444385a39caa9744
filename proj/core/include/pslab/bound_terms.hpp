#pragma once

// Symbolic term tables for the trilinear exponential-sum bounds.
//
// A bound is a sum of monomials X^{e_X} H^{e_H} M^{e_M} N^{e_N} with exact
// rational exponents.  Three tables are provided:
//
//   * trilinear_bound_terms(pair): the twelve-term refinement, parametrized
//     by an exponent pair (labels T1..T12, in display order);
//   * wu_bound_terms(k): Wu's seven-term comparison bound with K = 2^k,
//     valid under the restriction X <= min(H^2, H^2 N / M) (labels W1..W7);
//   * small_x_bound_terms(): the three-term bound for the X <= MN regime
//     (labels L1..L3); pointwise absorbed by T6, T11, T12.
//
// Substituting sizes (X, H, M, N) -> (x^1, x^mu, x^{1-gamma}, x^{1-mu})
// turns each monomial into a single power of x whose exponent is affine in
// (gamma, mu); those substituted exponents drive the admissibility analysis.

#include "pslab/exponent_pair.hpp"
#include "pslab/rational.hpp"

#include <string>
#include <vector>

namespace pslab {

struct MonomialTerm {
    std::string label;
    Rational e_X;
    Rational e_H;
    Rational e_M;
    Rational e_N;

    friend bool operator==(const MonomialTerm&, const MonomialTerm&) = default;
};

// Numeric value X^{e_X} H^{e_H} M^{e_M} N^{e_N} of one term.
double term_value(const MonomialTerm& t, double X, double H, double M, double N);

// The twelve-term bound, in display order.  Throws std::domain_error on an
// invalid pair.
std::vector<MonomialTerm> trilinear_bound_terms(const ExponentPair& pair);

// Wu's seven-term bound with K = 2^k; requires k >= 2 (throws otherwise).
std::vector<MonomialTerm> wu_bound_terms(int k);

// Wu's validity restriction X <= min(H^2, H^2 M^{-1} N).
bool wu_restriction_holds(double X, double H, double M, double N);

// The small-X (X <= MN) three-term table.
std::vector<MonomialTerm> small_x_bound_terms();

// const_part + gamma_coeff * gamma + mu_coeff * mu, exactly.
struct AffineExponent {
    Rational const_part;
    Rational gamma_coeff;
    Rational mu_coeff;

    Rational eval(const Rational& gamma, const Rational& mu) const;

    AffineExponent& operator+=(const AffineExponent& o);
    friend AffineExponent operator+(AffineExponent a, const AffineExponent& b) {
        return a += b;
    }
    AffineExponent scaled(const Rational& c) const;

    friend bool operator==(const AffineExponent&, const AffineExponent&) = default;
};

// Exponent of x assigned to each of the four block sizes.
struct SubstitutionMap {
    AffineExponent X;
    AffineExponent H;
    AffineExponent M;
    AffineExponent N;
};

// The type I' substitution: the bound is applied with
// (X, H, M, N) -> (x, M, H, N) where M = x^mu, H = x^{1-gamma}, N = x^{1-mu}.
SubstitutionMap type1prime_substitution();

// Every size mapped to x^0; substitution collapses to (0, 0, 0).
SubstitutionMap zero_substitution();

// Exponent of x for the substituted term: sum over v of e_v * map(v).
AffineExponent substitute(const MonomialTerm& term, const SubstitutionMap& map);

struct SubstitutedTerm {
    std::string label;         // E1..E12, matching T1..T12
    AffineExponent exponent;   // exponent of x, affine in (gamma, mu)
    bool dominated;            // gamma threshold strictly weaker than the binding one
};

// Applies the type I' substitution to all twelve terms and flags the ones
// whose gamma threshold over the M-window is not binding.
std::vector<SubstitutedTerm> substituted_bound_terms(const ExponentPair& pair);

}  // namespace pslab
