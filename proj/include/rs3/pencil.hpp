#pragma once

#include <vector>

#include "rs3/rational.hpp"
#include "rs3/types.hpp"

namespace rs3::pencil {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// The two symmetric quadratic-form matrices (five-band Toeplitz):
//   delta^T A delta = sum d_j d_{j+2} - sum d_j d_{j+4}
//   delta^T B delta = sum d_j^2     - sum d_j d_{j+2}
// A: 1/2 on |i-j| = 2, -1/2 on |i-j| = 4, zero main diagonal.
// B: 1 on the diagonal, -1/2 on |i-j| = 2. B is positive definite.
struct Pencil {
  int n = 0;
  Rational a_entry(int i, int j) const;  // 0-based
  Rational b_entry(int i, int j) const;
  Matrix<Rational> a_dense() const;
  Matrix<Rational> b_dense() const;
};

Pencil build_pencil(int n);  // throws OrderTooSmall for n < 3

// Phi_n(x) = A - (4x^2 - 1) B: diagonal 1-4x^2, 2x^2 on |i-j| = 2,
// -1/2 on |i-j| = 4.
template <class T>
Matrix<T> phi_matrix(int n, const T& x) {
  Matrix<T> m(n, std::vector<T>(n, T(0)));
  T x2 = x * x;
  T diag = T(1) - T(4) * x2;
  T off2 = T(2) * x2;
  T off4 = T(-1) / T(2);
  for (int i = 0; i < n; ++i) {
    m[i][i] = diag;
    if (i + 2 < n) m[i][i + 2] = m[i + 2][i] = off2;
    if (i + 4 < n) m[i][i + 4] = m[i + 4][i] = off4;
  }
  return m;
}

// Pentadiagonal block Phi_n reduces to: diagonal 1-4x^2, 2x^2 on |i-j| = 1,
// -1/2 on |i-j| = 2.
template <class T>
Matrix<T> d_matrix(int n, const T& x) {
  Matrix<T> m(n, std::vector<T>(n, T(0)));
  T x2 = x * x;
  T diag = T(1) - T(4) * x2;
  T off1 = T(2) * x2;
  T off2 = T(-1) / T(2);
  for (int i = 0; i < n; ++i) {
    m[i][i] = diag;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = off1;
    if (i + 2 < n) m[i][i + 2] = m[i + 2][i] = off2;
  }
  return m;
}

// Exact determinant by fraction-free-pivoting Gaussian elimination.
Rational det_exact(Matrix<Rational> m);

Rational det_phi(int n, const Rational& x);
Rational det_d(int n, const Rational& x);

// Closed forms the determinants factor into (x != 0):
//   det Phi_n = -U_{(n+1)/2} U'_{(n+1)/2} U_{(n+3)/2} U'_{(n+3)/2} / (2^{n+4} x^2), n odd
//   det Phi_n =  [U_{(n+2)/2} U'_{(n+2)/2}]^2 / (2^{n+4} x^2),                     n even
//   det D_n   =  (-1)^n U_{n+1} U'_{n+1} / (2^{n+2} x)
Rational det_phi_factored(int n, const Rational& x);
Rational det_d_factored(int n, const Rational& x);

// Parity interleaving (odd slots first, 0-based) under which
// P Phi_n P^T = diag(D_{ceil(n/2)}, D_{floor(n/2)}).
std::vector<int> parity_permutation(int n);

struct FactorizationReport {
  int n = 0;
  int samples = 0;
  bool pass = false;
  bool block_structure_ok = false;  // permuted Phi equals the D-blocks entrywise
  Rational first_mismatch_x;        // meaningful only when !pass
};

// Certifies det Phi_n = closed form by exact agreement at sample_count
// distinct nonzero rationals. x^2 det Phi_n has degree <= 2n+4 in x, so
// sample_count >= 2n+5 pins the polynomial identity; smaller counts throw
// InsufficientSamples.
FactorizationReport verify_factorization(int n, int sample_count);

struct Abscissas {
  double x_max = 0, x_min = 0;
  ExtremalCase max_case, min_case;
};

// Extreme roots of det Phi_n(x) = 0 (x >= 0 canonical):
//   x_max = cos(2pi/(n+5)) (n odd), cos(2pi/(n+4)) (n even)
//   x_min = nu or sin(pi/(n+5)) / sin(pi/(n+4)) per the case table.
Abscissas extremal_abscissas(int n);

struct Bounds {
  double a3_min = 0, a3_max = 0;
  double crosscheck_residual = 0;  // vs the n' = floor((N-1)/2) formulas
};

// Sharp bounds (4 x_min^2 - 1, 4 x_max^2 - 1), cross-checked against the
// classical n'-form, including the transcendental branch for odd n'.
Bounds bounds(int n);

}  // namespace rs3::pencil
