#pragma once

#include <vector>

#include "rs3/spectra.hpp"
#include "rs3/types.hpp"

namespace rs3::extremizer {

// gamma_s = sum_j z_j z_{j+s-1}, s = 1..len(z).
GammaChain gamma_chain(const std::vector<double>& z);

// Normalized coefficients a_s = (gamma_s - gamma_{s+2}) / (gamma_1 - gamma_3)
// (gamma past the end is zero). Throws DegenerateNormalizer if the
// normalizing form is not positive.
std::vector<double> coeffs_from_gamma(const GammaChain& g);

// Route 1: the gamma-chain applied to the eigenvector basis. For even n the
// two basis vectors are mixed as cos(phi) Z1 + sin(phi) Z2 with
// tau = sin(2 phi) in [-1,1]; orientation is fixed so a_2 = +2 tau y^2.
Extremizer coeffs_from_eigvec(const spectra::EigvecBasis& basis, double tau = 0);

// Route 2: the per-case recurrences (max cases and B/D min) and the
// zeta-ratio formulas (A/C min).
Extremizer coeffs_recurrence(ExtremalCase c, int n, double tau = 0);

// Route 3: closed forms
//   a_{2k+1} = U_{2k}(y) + alpha_n * y/(1-y^2) *
//              ( y + U_{2k-1}(y)(3y^2-1)/(2y^2) - U_{2k}(y)(k(1-y^2)+y^2)/y )
//   a_{2k+2} = tau * 4/(n+4) * y(1-y^2) U_k(y) U'_{n/2-k}(y)   (even n)
// Only the U-root cases have closed forms; throws UnsupportedCase for
// Amin/Cmin.
Extremizer coeffs_closed_form(ExtremalCase c, int n, double tau = 0);

// Degree lift P_{n+1}(z) = P_n(z) + tau/2 (P_n(z)(z + 1/z) - 1); requires an
// odd-degree extremizer with a_1 = 1 so the constant terms cancel.
Extremizer lift_odd_to_even(const Extremizer& p_odd, double tau);

// Spectral factorization of the nonnegative cosine polynomial
// gamma_1 + 2 sum_{j>=2} gamma_j cos((j-1)t) = |delta(e^{it})|^2: roots of
// the palindromic lift, keep the closed-unit-disc half (pairing unit-circle
// roots of even multiplicity), rescale so sum delta_j^2 = gamma_1.
// Throws NegativityDetected / RootPairingFailure.
std::vector<double> fejer_riesz_factor(const std::vector<double>& gamma);

}  // namespace rs3::extremizer
