#pragma once

#include <array>
#include <complex>
#include <vector>

#include "rs3/poly.hpp"
#include "rs3/types.hpp"

namespace rs3::compact {

enum class GLabel { G1, G2, G3, G4 };

// The pole-free rational building blocks. All denominators are built from
// q(z) = 1 + 2(1-2y^2) z^2 + z^4 = (1 + z^2 - 2yz)(1 + z^2 + 2yz)
// and powers of 1 - z^2.
struct RationalRep {
  GLabel label;
  Poly<double> numerator;
  Poly<double> denominator;
};

RationalRep build_g(GLabel label, int n, double y);

template <class T>
Poly<T> pole_quartic(const T& y) {
  return Poly<T>(std::vector<T>{T(1), T(0), T(2) - T(4) * y * y, T(0), T(1)});
}

// Maclaurin expansion of the case's G-combination by power-series division to
// order n + 16; asserts zero constant term, unit z-coefficient, and a
// vanishing tail beyond z^n, then returns degrees 1..n.
// Throws TailNonvanishing / NonunitLeading.
Extremizer expand_to_polynomial(ExtremalCase c, int n, double tau = 0);

struct SingularityReport {
  struct Candidate {
    std::complex<double> z;
    int multiplicity = 0;
    double residual = 0;  // worst scaled |num^{(j)}(z)| over j < multiplicity
  };
  std::vector<Candidate> points;
  double tail_residual = 0;
  bool pass = false;
};

// Two independent removability certificates: the series tail beyond z^n, and
// local vanishing of the combined numerator at each denominator zero to its
// multiplicity (1 or 3 at +-1, 2 at +-e^{+-i arccos y}, 1 at 0 for even n).
SingularityReport certify_removability(ExtremalCase c, int n);

// Residuals of the four trigonometric identities that hold whenever
// b sin(at) = a sin(bt); throws PreconditionViolated if the premise fails.
std::array<double, 4> sine_ratio_identities(double a, double b, double t);

}  // namespace rs3::compact
