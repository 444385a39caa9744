#pragma once

// Sawtooth function and its trigonometric approximation.
//
// The approximation contract is two-sided: there are coefficients a_h
// (0 < |h| <= H) and b_h >= 0 (|h| <= H) with
//
//     |psi(t) - sum a_h e(th)|  <=  sum b_h e(th)      for all real t,
//
// with a_h = O(1/|h|) and b_h = O(1/H).  The construction below follows the
// Beurling-Selberg extremal-function approach; the majorant is a scaled
// Fejer kernel and the inequality is tight at integer t.  verify_vaaler
// checks the inequality on an offset grid.

#include <complex>
#include <vector>

namespace pslab {

// psi(t) = {t} - 1/2 in [-1/2, 1/2).
double sawtooth(double t);

struct VaalerApprox {
    int H = 0;
    // a[h-1] is the coefficient of e(th) for h = 1..H; a_{-h} = conj(a_h).
    std::vector<std::complex<double>> a;
    // b[h] for h = 0..H; b_{-h} = b_h.  All entries nonnegative.
    std::vector<double> b;

    // sum_{0 < |h| <= H} a_h e(th); real by conjugate symmetry.
    double approximant(double t) const;
    // sum_{|h| <= H} b_h e(th); real and nonnegative for all t.
    double majorant(double t) const;
};

// Coefficients for the two-sided contract above; H >= 1.
VaalerApprox vaaler_coefficients(int H);

struct VaalerCheck {
    double max_violation = 0.0;  // worst of |psi - approximant| - majorant
    bool pass = false;           // max_violation <= 1e-12
};

// Evaluates both sides at t = k/grid_size + 1/(2*grid_size), k = 0..grid-1;
// the half-step offset avoids the jump points of psi.  grid_size >= 100.
VaalerCheck verify_vaaler(int H, int grid_size);

}  // namespace pslab
