#pragma once

#include <vector>

#include "rs3/poly.hpp"
#include "rs3/types.hpp"

namespace rs3::sine {

// Im P(e^{it}) = sum_j a_j sin(jt) for coefficients a_1..a_n.
double im_on_circle(const std::vector<double>& coeffs, double t);
double im_on_circle(const Extremizer& p, double t);

// Theta:    sin^2 kernel over (cos^2 t - y^2)^2 (U-root cases).
// ThetaHat: squared-difference kernel with sin^3 t (U'-root cases).
enum class KernelKind { Theta, ThetaHat };

struct SineKernel {
  KernelKind kind;
  int n = 0;
  double y = 0;
};

SineKernel kernel_for(ExtremalCase c, int n);

// Closed kernel value at t in [0,pi]; even-n cases carry the (1 + tau cos t)
// factor. The removable points cos^2 t = y^2 are evaluated by averaging
// symmetric offsets at distance 1e-6.
double kernel_value(const SineKernel& k, double t, double tau = 0);

struct NonnegativityCertificate {
  int grid_size = 0;
  double min_value = 0;
  double min_location = 0;
  double max_value = 0;
  bool refined = false;
  bool pass = false;
};

// Uniform 8192-point scan of Im P(e^{it}) on [0,pi] with golden-section
// refinement (width 1e-10) around every local minimum; passes iff
// min >= -1e-10 * max sampled value.
NonnegativityCertificate certify_nonnegative(const std::vector<double>& coeffs);
NonnegativityCertificate certify_nonnegative(const Extremizer& p);

// R(x) = 1 + sum_{j>=2} a_j U_{j-1}(x), so that R(cos t) sin t = Im P(e^{it}).
Poly<double> royster_suffridge_r(const std::vector<double>& coeffs);

}  // namespace rs3::sine
