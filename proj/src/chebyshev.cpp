#include "rs3/chebyshev.hpp"

#include <algorithm>
#include <cmath>

namespace rs3::cheb {

namespace {

template <class T>
T u_prime_limit(int j, bool at_plus_one) {
  // U'_j(1) = j(j+1)(j+2)/3; U'_j(-1) = (-1)^{j+1} U'_j(1).
  T lim = T(j) * T(j + 1) * T(j + 2) / T(3);
  if (!at_plus_one && j % 2 == 0) lim = -lim;
  return lim;
}

template <class F>
F u_prime_float(int j, F x) {
  if (j <= 0) return F(0);
  F omx2 = F(1) - x * x;
  if (std::abs(omx2) < F(1e-12)) return u_prime_limit<F>(j, x > 0);
  return (F(j + 2) * eval_u(j - 1, x) - F(j) * eval_u(j + 1, x)) / (F(2) * omx2);
}

double bisect(double lo, double hi, const auto& f) {
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double eval_u_prime(int j, double x) { return u_prime_float<double>(j, x); }
long double eval_u_prime(int j, long double x) { return u_prime_float<long double>(j, x); }

Rational eval_u_prime(int j, const Rational& x) {
  if (j <= 0) return Rational(0);
  Rational omx2 = 1 - x * x;
  if (omx2 == 0) return u_prime_limit<Rational>(j, x > 0);
  return (Rational(j + 2) * eval_u(j - 1, x) - Rational(j) * eval_u(j + 1, x)) / (2 * omx2);
}

double max_root_u(int m) {
  if (m < 1) throw std::invalid_argument("max_root_u: m must be >= 1");
  return std::cos(M_PI / (m + 1));
}

double min_positive_root_u(int m) {
  if (m < 1) throw std::invalid_argument("min_positive_root_u: m must be >= 1");
  // Zeros are cos(k pi/(m+1)), k = 1..m; positive ones need k < (m+1)/2.
  int k = (m % 2 == 0) ? m / 2 : (m - 1) / 2;
  if (k < 1) throw NoPositiveZero("U_1 has no positive zero");
  return std::cos(k * M_PI / (m + 1));
}

RootBracket min_positive_critical_bracket(int m) {
  if (m <= 2) throw NoPositiveZero("U'_m has no positive zero for m <= 2");
  // The smallest positive critical point of U_m lies strictly between the
  // smallest positive zeros of U_{m+1} (m odd) resp. U_m (m even) and
  // U_{m-1}.
  double lo = (m % 2 == 1) ? min_positive_root_u(m + 1) : min_positive_root_u(m);
  double hi = min_positive_root_u(m - 1);
  if (!(lo < hi)) throw BracketFailure("critical-point bracket is empty");
  return RootBracket{lo, hi};
}

double min_positive_root_u_prime(int m) {
  RootBracket b = min_positive_critical_bracket(m);
  auto f = [m](double x) { return eval_u_prime(m, x); };
  if ((f(b.lo) < 0) == (f(b.hi) < 0))
    throw BracketFailure("no sign change of U'_m on the interlacing bracket");
  return bisect(b.lo, b.hi, f);
}

double IdentitySuiteReport::max() const {
  return std::max({reflection, product_rule, sums});
}

namespace {

// Largest residual of U_{m-k}(x0) = sign * U_k(x0) over the branches n admits.
double reflection_residual(int k, int n) {
  double worst = 0;
  auto check = [&](int m, double x0, double sign) {
    if (m - k < -1 || k > m + 1) return;
    worst = std::max(worst, std::abs(eval_u(m - k, x0) - sign * eval_u(k, x0)));
  };
  if (n % 2 == 1) {
    int m = (n + 1) / 2;
    check(m, std::cos(2 * M_PI / (n + 5)), 1.0);
    if (m % 2 == 1)  // n = 1 (mod 4)
      check(m, std::sin(M_PI / (n + 5)), ((n - 1) / 4) % 2 == 0 ? 1.0 : -1.0);
  } else {
    int m = n / 2;
    check(m, std::cos(2 * M_PI / (n + 4)), 1.0);
    if ((n - 2) % 4 == 0)  // n = 2 (mod 4)
      check(m, std::sin(M_PI / (n + 4)), ((n - 2) / 4) % 2 == 0 ? 1.0 : -1.0);
  }
  return worst;
}

// Largest residual of
//   U_{k-1}(y) U'_{m+1-k}(y) = sign [ (m+1-k) U_{2k-1}(y) + 2 U_{k-1}(y) U_k(y) ] / (2(1-y^2))
// where m+1 = (n+3)/2 (n odd) or (n+2)/2 (n even).
double product_rule_residual(int k, int n) {
  double worst = 0;
  auto check = [&](int mp1, double y, double sign) {
    if (mp1 - k < 0) return;
    double lhs = eval_u(k - 1, y) * eval_u_prime(mp1 - k, y);
    double rhs = sign * ((mp1 - k) * eval_u(2 * k - 1, y) + 2 * eval_u(k - 1, y) * eval_u(k, y)) /
                 (2 * (1 - y * y));
    worst = std::max(worst, std::abs(lhs - rhs));
  };
  if (n % 2 == 1) {
    int mp1 = (n + 3) / 2;
    check(mp1, std::cos(2 * M_PI / (n + 5)), 1.0);
    if (((n + 1) / 2) % 2 == 1)
      check(mp1, std::sin(M_PI / (n + 5)), ((n - 1) / 4) % 2 == 0 ? 1.0 : -1.0);
  } else {
    int mp1 = (n + 2) / 2;
    check(mp1, std::cos(2 * M_PI / (n + 4)), 1.0);
    if ((n - 2) % 4 == 0)
      check(mp1, std::sin(M_PI / (n + 4)), ((n - 2) / 4) % 2 == 0 ? 1.0 : -1.0);
  }
  return worst;
}

double alternating_sum_residual(int k, double x) {
  double s1 = 0, s2 = 0, s3 = 0;
  for (int j = 1; j <= k; ++j) {
    double sgn = (j % 2 == 0) ? 1.0 : -1.0;
    s1 += sgn * eval_u(2 * j - 1, x);
    s2 += sgn * j * eval_u(2 * j - 1, x);
    double uj1 = eval_u(j - 1, x);
    s3 += sgn * uj1 * uj1;
  }
  double sk = (k % 2 == 0) ? 1.0 : -1.0;
  double r1 = s1 - sk * (eval_u(2 * k, x) - sk) / (2 * x);
  double r2 = s2 - sk * (2 * k * x * eval_u(2 * k, x) + eval_u(2 * k - 1, x)) / (4 * x * x);
  double r3 = s3 - sk * eval_u(k - 1, x) * eval_u(k, x) / (2 * x);
  return std::max({std::abs(r1), std::abs(r2), std::abs(r3)});
}

}  // namespace

IdentitySuiteReport identity_suite(int k, double x, int n) {
  if (k < 1) throw std::invalid_argument("identity_suite: k must be >= 1");
  if (n < 3) throw OrderTooSmall("identity_suite: n must be >= 3");
  if (x == 0 || std::abs(x) >= 1)
    throw PreconditionViolated("identity_suite: need 0 < |x| < 1");
  IdentitySuiteReport rep;
  rep.reflection = reflection_residual(k, n);
  rep.product_rule = product_rule_residual(k, n);
  rep.sums = alternating_sum_residual(k, x);
  return rep;
}

std::array<Rational, 3> alternating_sum_residuals(int k, const Rational& x) {
  if (k < 1) throw std::invalid_argument("alternating_sum_residuals: k must be >= 1");
  if (x == 0) throw PreconditionViolated("alternating_sum_residuals: x must be nonzero");
  Rational s1(0), s2(0), s3(0);
  for (int j = 1; j <= k; ++j) {
    int sgn = (j % 2 == 0) ? 1 : -1;
    Rational u = eval_u(2 * j - 1, x);
    s1 += sgn * u;
    s2 += sgn * j * u;
    Rational uj1 = eval_u(j - 1, x);
    s3 += sgn * uj1 * uj1;
  }
  int sk = (k % 2 == 0) ? 1 : -1;
  Rational r1 = s1 - sk * (eval_u(2 * k, x) - sk) / (2 * x);
  Rational r2 = s2 - sk * (2 * k * x * eval_u(2 * k, x) + eval_u(2 * k - 1, x)) / (4 * x * x);
  Rational r3 = s3 - sk * eval_u(k - 1, x) * eval_u(k, x) / (2 * x);
  return {r1, r2, r3};
}

}  // namespace rs3::cheb
