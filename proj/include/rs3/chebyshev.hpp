#pragma once

#include <array>

#include "rs3/poly.hpp"
#include "rs3/rational.hpp"
#include "rs3/types.hpp"

namespace rs3::cheb {

// Chebyshev polynomial of the second kind by the three-term recurrence
// U_{j+1} = 2x U_j - U_{j-1}, U_0 = 1, U_{-1} = 0. Exact for Rational x.
template <class T>
T eval_u(int j, const T& x) {
  if (j < -1) throw std::invalid_argument("eval_u: index below -1");
  if (j == -1) return T(0);
  T prev(0), cur(1);
  for (int i = 0; i < j; ++i) {
    T next = T(2) * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// U'_j via (j+2)U_{j-1} - j U_{j+1} over 2(1-x^2); at x = +-1 the limit
// U'_j(1) = j(j+1)(j+2)/3 applies, with U'_j(-x) = (-1)^{j+1} U'_j(x).
double eval_u_prime(int j, double x);
long double eval_u_prime(int j, long double x);
Rational eval_u_prime(int j, const Rational& x);

// Largest zero of U_m: cos(pi/(m+1)).
double max_root_u(int m);

// Smallest positive zero of U_m among cos(k pi/(m+1)); throws NoPositiveZero
// for m = 1 (the only zero is 0).
double min_positive_root_u(int m);

struct RootBracket {
  double lo = 0, hi = 0;
};

// Sign-change bracket for the smallest positive zero of U'_m, built from the
// interlacing of the zeros of U_{m-1}, U_m, U_{m+1}. Throws NoPositiveZero
// for m <= 2.
RootBracket min_positive_critical_bracket(int m);

// Smallest positive zero of U'_m by bisection inside the bracket above,
// refined to width < 1e-14.
double min_positive_root_u_prime(int m);

// Coefficient vector of U_j.
template <class T>
Poly<T> u_poly(int j) {
  if (j < -1) throw std::invalid_argument("u_poly: index below -1");
  if (j == -1) return Poly<T>{};
  Poly<T> prev;                              // U_{-1}
  Poly<T> cur(std::vector<T>{T(1)});         // U_0
  Poly<T> two_x(std::vector<T>{T(0), T(2)});
  for (int i = 0; i < j; ++i) {
    Poly<T> next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Residuals of the identity corpus the coefficient formulas rest on,
// evaluated for index k in the degree-n problem:
//  - reflection:   U_{m-k} = (+-) U_k at the extremal abscissas,
//  - product_rule: U_{k-1} U'_{m+1-k} reduced to U_{2k-1}, U_{k-1}U_k,
//  - sums:         alternating-sum closed forms at the given x.
struct IdentitySuiteReport {
  double reflection = 0;
  double product_rule = 0;
  double sums = 0;
  double max() const;
};
IdentitySuiteReport identity_suite(int k, double x, int n);

// Exact residuals (must all be zero) of the three alternating-sum identities
//   sum (-1)^j U_{2j-1}       = (-1)^k (U_{2k} - (-1)^k) / (2x)
//   sum (-1)^j j U_{2j-1}     = (-1)^k (2kx U_{2k} + U_{2k-1}) / (4x^2)
//   sum (-1)^j U_{j-1}^2      = (-1)^k U_{k-1} U_k / (2x)
// Requires x != 0.
std::array<Rational, 3> alternating_sum_residuals(int k, const Rational& x);

}  // namespace rs3::cheb
