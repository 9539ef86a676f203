#include "rs3/pencil.hpp"

#include <cmath>
#include <cstdlib>

#include "rs3/chebyshev.hpp"

namespace rs3::pencil {

Rational Pencil::a_entry(int i, int j) const {
  int d = std::abs(i - j);
  if (d == 2) return rat(1, 2);
  if (d == 4) return rat(-1, 2);
  return Rational(0);
}

Rational Pencil::b_entry(int i, int j) const {
  int d = std::abs(i - j);
  if (d == 0) return Rational(1);
  if (d == 2) return rat(-1, 2);
  return Rational(0);
}

Matrix<Rational> Pencil::a_dense() const {
  Matrix<Rational> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a_entry(i, j);
  return m;
}

Matrix<Rational> Pencil::b_dense() const {
  Matrix<Rational> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = b_entry(i, j);
  return m;
}

Pencil build_pencil(int n) {
  if (n < 3) throw OrderTooSmall("pencil order must be >= 3 (a_3 undefined below)");
  return Pencil{n};
}

Rational det_exact(Matrix<Rational> m) {
  const int n = static_cast<int>(m.size());
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Rational det_phi(int n, const Rational& x) {
  if (n < 3) throw OrderTooSmall("det_phi: order must be >= 3");
  return det_exact(phi_matrix<Rational>(n, x));
}

Rational det_d(int n, const Rational& x) {
  if (n < 1) throw std::invalid_argument("det_d: order must be >= 1");
  return det_exact(d_matrix<Rational>(n, x));
}

Rational det_phi_factored(int n, const Rational& x) {
  if (x == 0) throw PreconditionViolated("det_phi_factored: x must be nonzero");
  Rational den = pow2(static_cast<unsigned>(n) + 4) * x * x;
  if (n % 2 == 1) {
    int a = (n + 1) / 2, b = (n + 3) / 2;
    return -cheb::eval_u(a, x) * cheb::eval_u_prime(a, x) * cheb::eval_u(b, x) *
           cheb::eval_u_prime(b, x) / den;
  }
  int c = (n + 2) / 2;
  Rational t = cheb::eval_u(c, x) * cheb::eval_u_prime(c, x);
  return t * t / den;
}

Rational det_d_factored(int n, const Rational& x) {
  if (x == 0) throw PreconditionViolated("det_d_factored: x must be nonzero");
  Rational v = cheb::eval_u(n + 1, x) * cheb::eval_u_prime(n + 1, x) /
               (pow2(static_cast<unsigned>(n) + 2) * x);
  return (n % 2 == 0) ? v : -v;
}

std::vector<int> parity_permutation(int n) {
  std::vector<int> p;
  p.reserve(n);
  for (int i = 0; i < n; i += 2) p.push_back(i);
  for (int i = 1; i < n; i += 2) p.push_back(i);
  return p;
}

namespace {

// Permuted Phi must equal diag(D_ceil, D_floor) entrywise.
bool block_structure_holds(int n, const Rational& x) {
  auto phi = phi_matrix<Rational>(n, x);
  auto perm = parity_permutation(n);
  int n1 = (n + 1) / 2;
  auto d1 = d_matrix<Rational>(n1, x);
  auto d2 = d_matrix<Rational>(n - n1, x);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational expect(0);
      if (i < n1 && j < n1)
        expect = d1[i][j];
      else if (i >= n1 && j >= n1)
        expect = d2[i - n1][j - n1];
      if (phi[perm[i]][perm[j]] != expect) return false;
    }
  return true;
}

}  // namespace

FactorizationReport verify_factorization(int n, int sample_count) {
  if (n < 3) throw OrderTooSmall("verify_factorization: order must be >= 3");
  if (sample_count < 2 * n + 5)
    throw InsufficientSamples("verify_factorization: need >= 2n+5 samples to pin the degree");
  FactorizationReport rep;
  rep.n = n;
  rep.samples = sample_count;
  rep.block_structure_ok = block_structure_holds(n, rat(1, 3)) && block_structure_holds(n, rat(7, 5));
  rep.pass = rep.block_structure_ok;
  for (int i = 0; i < sample_count; ++i) {
    Rational x = rat(i + 1, sample_count + 2);
    if (det_phi(n, x) != det_phi_factored(n, x)) {
      rep.pass = false;
      rep.first_mismatch_x = x;
      return rep;
    }
  }
  return rep;
}

Abscissas extremal_abscissas(int n) {
  if (n < 3) throw OrderTooSmall("extremal_abscissas: order must be >= 3");
  Abscissas a;
  if (n % 2 == 1) {
    a.x_max = std::cos(2 * M_PI / (n + 5));
    a.max_case = ExtremalCase::AmaxBmax;
    if (((n + 3) / 2) % 2 == 1) {
      a.x_min = cheb::min_positive_root_u_prime((n + 3) / 2);
      a.min_case = ExtremalCase::Amin;
    } else {
      a.x_min = std::sin(M_PI / (n + 5));
      a.min_case = ExtremalCase::Bmin;
    }
  } else {
    a.x_max = std::cos(2 * M_PI / (n + 4));
    a.max_case = ExtremalCase::CmaxDmax;
    if (((n + 2) / 2) % 2 == 1) {
      a.x_min = cheb::min_positive_root_u_prime((n + 2) / 2);
      a.min_case = ExtremalCase::Cmin;
    } else {
      a.x_min = std::sin(M_PI / (n + 4));
      a.min_case = ExtremalCase::Dmin;
    }
  }
  return a;
}

namespace {

// Smallest positive root of (p+4)cos((p+2)t/2) + (p+2)cos((p+4)t/2) = 0 by
// scan and bisection.
double theta_equation_root(int p) {
  auto f = [p](double t) {
    return (p + 4) * std::cos((p + 2) * t / 2) + (p + 2) * std::cos((p + 4) * t / 2);
  };
  const int steps = 4000;
  double prev_t = 1e-9, prev_f = f(prev_t);
  for (int i = 1; i <= steps; ++i) {
    double t = 2 * M_PI * i / steps + 1e-9;
    double ft = f(t);
    if ((ft < 0) != (prev_f < 0)) {
      double lo = prev_t, hi = t, flo = prev_f;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        double mid = 0.5 * (lo + hi), fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    prev_t = t;
    prev_f = ft;
  }
  throw BracketFailure("theta equation: no sign change located");
}

}  // namespace

Bounds bounds(int n) {
  Abscissas a = extremal_abscissas(n);
  Bounds b;
  b.a3_max = 4 * a.x_max * a.x_max - 1;
  b.a3_min = 4 * a.x_min * a.x_min - 1;
  // Classical form in n' = floor((N-1)/2).
  int np = (n - 1) / 2;
  double upper = 1 + 2 * std::cos(2 * M_PI / (np + 3));
  double lower;
  if (np % 2 == 0) {
    lower = 1 - 2 * std::cos(M_PI / (np + 3));
  } else {
    lower = 1 - 2 * std::cos(theta_equation_root(np));
  }
  b.crosscheck_residual =
      std::max(std::abs(b.a3_max - upper), std::abs(b.a3_min - lower));
  return b;
}

}  // namespace rs3::pencil
