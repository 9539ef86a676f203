#include <doctest.h>

#include <cmath>

#include "rs3/chebyshev.hpp"
#include "rs3/pencil.hpp"

using namespace rs3;
using namespace rs3::pencil;

namespace {

// Pivot products of an SPD matrix are its leading principal minors; all
// minors positive iff all pivots positive.
bool leading_minors_positive(Matrix<Rational> m) {
  const int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    if (m[col][col] <= 0) return false;
    for (int r = col + 1; r < n; ++r) {
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return true;
}

}  // namespace

TEST_CASE("pencil band layout") {
  Pencil p = build_pencil(5);
  CHECK(p.a_entry(0, 0) == 0);
  CHECK(p.a_entry(0, 1) == 0);
  CHECK(p.a_entry(0, 2) == rat(1, 2));
  CHECK(p.a_entry(0, 3) == 0);
  CHECK(p.a_entry(0, 4) == rat(-1, 2));
  CHECK(p.b_entry(0, 0) == 1);
  CHECK(p.b_entry(0, 1) == 0);
  CHECK(p.b_entry(0, 2) == rat(-1, 2));
  CHECK(p.b_entry(0, 3) == 0);
  CHECK(p.b_entry(0, 4) == 0);

  Pencil p3 = build_pencil(3);
  CHECK(p3.a_entry(0, 2) == rat(1, 2));
  CHECK_THROWS_AS(build_pencil(2), OrderTooSmall);
}

TEST_CASE("pencil symmetry and positive definiteness of B") {
  for (int n = 3; n <= 40; ++n) {
    Pencil p = build_pencil(n);
    auto a = p.a_dense();
    auto b = p.b_dense();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CHECK(a[i][j] == a[j][i]);
        CHECK(b[i][j] == b[j][i]);
      }
    CHECK(leading_minors_positive(b));
  }
}

TEST_CASE("quadratic forms match the band description") {
  Pencil p = build_pencil(7);
  std::vector<Rational> d{rat(1), rat(-2), rat(3, 2), rat(0), rat(5), rat(-1, 3), rat(2)};
  Rational qa(0), qb(0);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      qa += d[i] * p.a_entry(i, j) * d[j];
      qb += d[i] * p.b_entry(i, j) * d[j];
    }
  Rational sa(0), sb(0);
  for (int j = 0; j + 2 < 7; ++j) sa += d[j] * d[j + 2];
  for (int j = 0; j + 4 < 7; ++j) sa -= d[j] * d[j + 4];
  for (int j = 0; j < 7; ++j) sb += d[j] * d[j];
  for (int j = 0; j + 2 < 7; ++j) sb -= d[j] * d[j + 2];
  CHECK(qa == sa);
  CHECK(qb == sb);
}

TEST_CASE("exact determinant equals the closed factorization at samples") {
  CHECK(det_phi(3, rat(1, 2)) == det_phi_factored(3, rat(1, 2)));
  CHECK(det_phi(4, rat(1, 3)) == det_phi_factored(4, rat(1, 3)));
  CHECK_THROWS_AS(det_phi_factored(3, Rational(0)), PreconditionViolated);

  // Explicit right side for n = 3, x = 1/2, both sides exact.
  Rational x = rat(1, 2);
  Rational rhs = -cheb::eval_u(2, x) * cheb::eval_u_prime(2, x) * cheb::eval_u(3, x) *
                 cheb::eval_u_prime(3, x) / (pow2(7) * x * x);
  CHECK(det_phi(3, x) == rhs);
}

TEST_CASE("pentadiagonal base determinant identity") {
  for (int n = 1; n <= 10; ++n)
    for (long num : {1L, 2L, 5L, -3L})
      CHECK(det_d(n, rat(num, 7)) == det_d_factored(n, rat(num, 7)));
}

TEST_CASE("parity permutation produces the block-diagonal form") {
  for (int n : {3, 4, 7, 10}) {
    Rational x = rat(3, 8);
    auto phi = phi_matrix<Rational>(n, x);
    auto perm = parity_permutation(n);
    int n1 = (n + 1) / 2;
    auto d1 = d_matrix<Rational>(n1, x);
    auto d2 = d_matrix<Rational>(n - n1, x);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational expect(0);
        if (i < n1 && j < n1) expect = d1[i][j];
        if (i >= n1 && j >= n1) expect = d2[i - n1][j - n1];
        CHECK(phi[perm[i]][perm[j]] == expect);
      }
  }
}

TEST_CASE("factorization certificate") {
  CHECK(verify_factorization(3, 30).pass);
  CHECK(verify_factorization(6, 40).pass);
  CHECK_THROWS_AS(verify_factorization(4, 1), InsufficientSamples);
  for (int n = 3; n <= 12; ++n) CHECK(verify_factorization(n, 2 * n + 6).pass);
}

TEST_CASE("extremal abscissas per case table") {
  auto a3 = extremal_abscissas(3);
  CHECK(a3.x_max == doctest::Approx(std::cos(M_PI / 4)).epsilon(1e-14));
  CHECK(a3.x_min == doctest::Approx(std::sqrt(1.0 / 6.0)).epsilon(1e-12));
  CHECK(a3.max_case == ExtremalCase::AmaxBmax);
  CHECK(a3.min_case == ExtremalCase::Amin);

  auto a5 = extremal_abscissas(5);
  CHECK(a5.x_max == doctest::Approx(std::cos(M_PI / 5)).epsilon(1e-14));
  CHECK(a5.x_min == doctest::Approx(std::sin(M_PI / 10)).epsilon(1e-14));
  CHECK(a5.min_case == ExtremalCase::Bmin);

  auto a6 = extremal_abscissas(6);
  CHECK(a6.x_max == doctest::Approx(std::cos(M_PI / 5)).epsilon(1e-14));
  CHECK(a6.x_min == doctest::Approx(std::sin(M_PI / 10)).epsilon(1e-14));
  CHECK(a6.min_case == ExtremalCase::Dmin);
}

TEST_CASE("bounds at small degrees") {
  auto b5 = bounds(5);
  CHECK(std::abs(b5.a3_max - (1 + std::sqrt(5.0)) / 2) < 1e-12);
  CHECK(std::abs(b5.a3_min - (1 - std::sqrt(5.0)) / 2) < 1e-12);

  auto b3 = bounds(3);
  CHECK(std::abs(b3.a3_max - 1.0) < 1e-12);
  CHECK(std::abs(b3.a3_min + 1.0 / 3.0) < 1e-12);

  auto b4 = bounds(4);
  CHECK(std::abs(b4.a3_max - 1.0) < 1e-12);
}

TEST_CASE("bounds cross-check against the classical form") {
  for (int n = 3; n <= 40; ++n) CHECK(bounds(n).crosscheck_residual < 1e-10);
}

TEST_CASE("upper bound is nondecreasing and approaches 3") {
  double prev = -10;
  for (int n = 3; n <= 40; ++n) {
    double cur = bounds(n).a3_max;
    CHECK(cur >= prev - 1e-14);
    prev = cur;
  }
  CHECK(bounds(40).a3_max > 2.9);
}

TEST_CASE("parity pairs share their extreme values") {
  for (int m = 2; m <= 15; ++m) {
    auto even = bounds(2 * m);
    auto odd = bounds(2 * m - 1);
    CHECK(std::abs(even.a3_max - odd.a3_max) < 1e-12);
    CHECK(std::abs(even.a3_min - odd.a3_min) < 1e-12);
  }
}
