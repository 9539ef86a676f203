#include "rs3/extremizer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>

#include "rs3/chebyshev.hpp"
#include "rs3/pencil.hpp"

namespace rs3::extremizer {

namespace {

double case_abscissa(ExtremalCase c, int n) {
  pencil::Abscissas ab = pencil::extremal_abscissas(n);
  return case_is_min(c) ? ab.x_min : ab.x_max;
}

// Sign carried by the reflection identities at the sin-type abscissas:
// (-1)^{(n-1)/4} for Bmin, (-1)^{(n-2)/4} for Dmin.
double parity_sign(ExtremalCase c, int n) {
  if (c == ExtremalCase::Bmin) return ((n - 1) / 4) % 2 == 0 ? 1.0 : -1.0;
  if (c == ExtremalCase::Dmin) return ((n - 2) / 4) % 2 == 0 ? 1.0 : -1.0;
  return 1.0;
}

void finish(Extremizer& e) {
  e.a3 = 4 * e.y * e.y - 1;
  e.top_coeff_vanishes = std::abs(e.coeffs.back()) < 1e-12;
}

Extremizer assemble(ExtremalCase c, int n, double y, double tau,
                    std::vector<double> odd_all, std::vector<double> even_unit) {
  Extremizer e;
  e.kind = c;
  e.n = n;
  e.y = y;
  e.tau = (n % 2 == 0) ? tau : 0.0;
  e.coeffs.assign(n, 0.0);
  for (int k = 0; 2 * k < n; ++k) e.coeffs[2 * k] = odd_all[k];
  if (n % 2 == 0) {
    e.even_unit = std::move(even_unit);
    for (int k = 0; 2 * k + 1 < n; ++k) e.coeffs[2 * k + 1] = tau * e.even_unit[k];
  }
  finish(e);
  return e;
}

}  // namespace

GammaChain gamma_chain(const std::vector<double>& z) {
  GammaChain g;
  const int n = static_cast<int>(z.size());
  g.gamma.assign(n, 0.0);
  for (int s = 1; s <= n; ++s)
    for (int j = 0; j + s - 1 < n; ++j) g.gamma[s - 1] += z[j] * z[j + s - 1];
  return g;
}

std::vector<double> coeffs_from_gamma(const GammaChain& g) {
  const int n = static_cast<int>(g.gamma.size());
  auto gam = [&](int s) { return (s >= 1 && s <= n) ? g.gamma[s - 1] : 0.0; };
  double norm = gam(1) - gam(3);
  double scale = 0;
  for (double v : g.gamma) scale = std::max(scale, std::abs(v));
  if (norm <= 1e-12 * scale)
    throw DegenerateNormalizer("coeffs_from_gamma: gamma_1 - gamma_3 is not positive");
  std::vector<double> a(n);
  for (int s = 1; s <= n; ++s) a[s - 1] = (gam(s) - gam(s + 2)) / norm;
  return a;
}

Extremizer coeffs_from_eigvec(const spectra::EigvecBasis& basis, double tau) {
  const int n = basis.n;
  Extremizer e;
  e.kind = basis.kind;
  e.n = n;
  e.y = basis.x;
  if (n % 2 == 1) {
    e.tau = 0;
    e.coeffs = coeffs_from_gamma(gamma_chain(basis.vectors[0]));
    finish(e);
    return e;
  }
  if (tau < -1 || tau > 1)
    throw PreconditionViolated("coeffs_from_eigvec: tau must lie in [-1,1]");
  // Mix the two basis vectors; the chain is scale-free, so alpha^2+beta^2 = 1
  // costs nothing. tau = 2 alpha beta.
  auto mixed_chain = [&](double t) {
    double phi = 0.5 * std::asin(t);
    double alpha = std::cos(phi), beta = std::sin(phi);
    std::vector<double> z(n);
    for (int i = 0; i < n; ++i)
      z[i] = alpha * basis.vectors[0][i] + beta * basis.vectors[1][i];
    return coeffs_from_gamma(gamma_chain(z));
  };
  std::vector<double> odd = mixed_chain(0.0);
  std::vector<double> unit = mixed_chain(1.0);
  e.even_unit.resize(n / 2);
  for (int k = 0; 2 * k + 1 < n; ++k) e.even_unit[k] = unit[2 * k + 1];
  // Canonical orientation: a_2 = +2 tau y^2.
  if (e.even_unit[0] < 0)
    for (double& v : e.even_unit) v = -v;
  e.tau = tau;
  e.coeffs = std::move(odd);
  for (int k = 0; 2 * k + 1 < n; ++k) e.coeffs[2 * k + 1] = tau * e.even_unit[k];
  finish(e);
  return e;
}

namespace {

// Ratio formulas for the critical-point cases, from the star-zeta values:
//   odd:  a_{2k-1} = (S(k-1, mz+1-k) - S(k, mz-k)) / denom
//   even: a_{2k}   = tau/2 (S(k-1, mz+1-k) - S(k+1, mz-1-k)) / denom
// where S(d, cnt) = sum_{j=1}^{cnt} z_j z_{j+d} and mz = len(z).
Extremizer ratio_route(ExtremalCase c, int n, double tau) {
  double y = case_abscissa(c, n);
  std::vector<double> z = spectra::zeta(spectra::ZetaKind::Star, n, y);
  const int mz = static_cast<int>(z.size());
  auto S = [&](int d, int cnt) {
    double s = 0;
    for (int j = 0; j < cnt && j + d < mz; ++j) s += z[j] * z[j + d];
    return s;
  };
  double denom = S(0, mz) - S(1, mz - 1);
  if (denom <= 0) throw DegenerateNormalizer("ratio_route: normalizer not positive");

  int odd_count = (n + 1) / 2;  // number of odd-index coefficients
  std::vector<double> odd(odd_count);
  for (int k = 1; k <= odd_count; ++k)
    odd[k - 1] = (S(k - 1, mz + 1 - k) - S(k, mz - k)) / denom;

  std::vector<double> even_unit;
  if (n % 2 == 0) {
    even_unit.resize(n / 2);
    for (int k = 1; k <= n / 2; ++k)
      even_unit[k - 1] = 0.5 * (S(k - 1, mz + 1 - k) - S(k + 1, mz - 1 - k)) / denom;
  }
  return assemble(c, n, y, tau, std::move(odd), std::move(even_unit));
}

}  // namespace

Extremizer coeffs_recurrence(ExtremalCase c, int n, double tau) {
  if (!case_admits(c, n))
    throw ParityMismatch("coeffs_recurrence: case does not admit this degree");
  if (c == ExtremalCase::Amin || c == ExtremalCase::Cmin) return ratio_route(c, n, tau);

  double y = case_abscissa(c, n);
  double sign = parity_sign(c, n);
  int denom_n = (n % 2 == 1) ? n + 5 : n + 4;
  int half = (n % 2 == 1) ? (n + 3) / 2 : (n + 2) / 2;
  double r_odd = sign * 8 * (1 - y * y) * y / denom_n;

  int odd_count = (n + 1) / 2;
  std::vector<double> odd(odd_count);
  odd[0] = 1.0;
  for (int k = 1; k < odd_count; ++k)
    odd[k] = -odd[k - 1] +
             r_odd * cheb::eval_u(k - 1, y) * cheb::eval_u_prime(half - k, y);

  std::vector<double> even_unit;
  if (n % 2 == 0) {
    double r_even = sign * 4 * (1 - y * y) * y / denom_n;
    even_unit.resize(n / 2);
    double prev = 0;  // a_0
    for (int k = 0; k < n / 2; ++k) {
      double step = cheb::eval_u(k - 1, y) * cheb::eval_u_prime(half - k, y) +
                    cheb::eval_u(k, y) * cheb::eval_u_prime(n / 2 - k, y);
      even_unit[k] = -prev + r_even * step;
      prev = even_unit[k];
    }
  }
  return assemble(c, n, y, tau, std::move(odd), std::move(even_unit));
}

Extremizer coeffs_closed_form(ExtremalCase c, int n, double tau) {
  if (c == ExtremalCase::Amin || c == ExtremalCase::Cmin)
    throw UnsupportedCase("coeffs_closed_form: no closed form for the critical-point cases");
  if (!case_admits(c, n))
    throw ParityMismatch("coeffs_closed_form: case does not admit this degree");

  double y = case_abscissa(c, n);
  double alpha = (n % 2 == 1) ? 2.0 / (n + 5) : 2.0 / (n + 4);
  double y2 = y * y;

  int odd_count = (n + 1) / 2;
  std::vector<double> odd(odd_count);
  for (int k = 0; k < odd_count; ++k) {
    double u2k = cheb::eval_u(2 * k, y);
    double u2km1 = cheb::eval_u(2 * k - 1, y);
    odd[k] = u2k + alpha * y / (1 - y2) *
                       (y + u2km1 * (3 * y2 - 1) / (2 * y2) -
                        u2k * (k * (1 - y2) + y2) / y);
  }

  std::vector<double> even_unit;
  if (n % 2 == 0) {
    double sign = parity_sign(c, n);  // keeps a_2 = +2 tau y^2 for Dmin
    even_unit.resize(n / 2);
    for (int k = 0; k < n / 2; ++k)
      even_unit[k] = sign * 4.0 / (n + 4) * y * (1 - y2) * cheb::eval_u(k, y) *
                     cheb::eval_u_prime(n / 2 - k, y);
  }
  return assemble(c, n, y, tau, std::move(odd), std::move(even_unit));
}

Extremizer lift_odd_to_even(const Extremizer& p_odd, double tau) {
  const int n = p_odd.n;
  if (n % 2 != 1) throw ParityMismatch("lift_odd_to_even: source degree must be odd");
  if (std::abs(p_odd.coeff(1) - 1.0) > 1e-9)
    throw PreconditionViolated("lift_odd_to_even: a_1 must be 1");
  Extremizer e;
  e.kind = classify(n + 1, case_is_min(p_odd.kind) ? Want::Min : Want::Max);
  e.n = n + 1;
  e.y = p_odd.y;
  e.tau = tau;
  e.even_unit.resize((n + 1) / 2);
  for (int k = 0; k < (n + 1) / 2; ++k)
    e.even_unit[k] = 0.5 * (p_odd.coeff(2 * k + 1) + p_odd.coeff(2 * k + 3));
  e.coeffs.assign(n + 1, 0.0);
  for (int j = 1; j <= n; j += 2) e.coeffs[j - 1] = p_odd.coeff(j);
  for (int k = 0; 2 * k + 1 < n + 1; ++k) e.coeffs[2 * k + 1] = tau * e.even_unit[k];
  finish(e);
  return e;
}

std::vector<double> fejer_riesz_factor(const std::vector<double>& gamma) {
  std::vector<double> g = gamma;
  while (!g.empty() && g.back() == 0.0) g.pop_back();
  if (g.empty()) throw PreconditionViolated("fejer_riesz_factor: zero input");
  const int m = static_cast<int>(g.size());

  double scale = 0;
  for (double v : g) scale = std::max(scale, std::abs(v));
  double grid_min = 0;
  for (int i = 0; i < 4096; ++i) {
    double t = M_PI * i / 4095;
    double c = g[0];
    for (int j = 2; j <= m; ++j) c += 2 * g[j - 1] * std::cos((j - 1) * t);
    grid_min = std::min(grid_min, c);
  }
  if (grid_min < -1e-10 * scale)
    throw NegativityDetected("fejer_riesz_factor: cosine polynomial dips negative");

  if (m == 1) return {std::sqrt(g[0])};

  // Palindromic lift p(z) = sum gamma_{|i-(m-1)|+1} z^i, roots in (r, 1/r)
  // pairs, unit-circle roots of even multiplicity.
  const int deg = 2 * m - 2;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  double lead = g[m - 1];
  for (int i = 0; i < deg; ++i) {
    double ci = g[std::abs(i - (m - 1))];
    companion(i, deg - 1) = -ci / lead;
    if (i + 1 < deg) companion(i + 1, i) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion);
  std::vector<std::complex<double>> roots(es.eigenvalues().data(),
                                          es.eigenvalues().data() + deg);

  const double tol = 1e-6;
  std::vector<std::complex<double>> selected, on_circle;
  for (const auto& r : roots) {
    double ar = std::abs(r);
    if (ar < 1 - tol)
      selected.push_back(r);
    else if (ar <= 1 + tol)
      on_circle.push_back(r);
  }
  // Unit-circle roots come in coincident pairs; keep one of each
  // (greedy nearest-neighbor pairing, robust at the +-pi seam).
  if (on_circle.size() % 2 != 0)
    throw RootPairingFailure("fejer_riesz_factor: odd unit-circle multiplicity");
  std::vector<bool> used(on_circle.size(), false);
  for (std::size_t i = 0; i < on_circle.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::size_t best = on_circle.size();
    double best_d = 10 * tol;
    for (std::size_t j = i + 1; j < on_circle.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(on_circle[i] - on_circle[j]);
      if (d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (best == on_circle.size())
      throw RootPairingFailure("fejer_riesz_factor: unmatched unit-circle root");
    used[best] = true;
    selected.push_back(0.5 * (on_circle[i] + on_circle[best]));
  }
  if (static_cast<int>(selected.size()) != m - 1)
    throw RootPairingFailure("fejer_riesz_factor: wrong root count inside the disc");

  // delta(z) = s * prod (z - r) over the selected roots, coefficient of z^k
  // at index k; all roots stay in the closed unit disc.
  std::vector<std::complex<double>> q{1.0};
  for (const auto& r : selected) {
    q.push_back(0.0);
    for (int i = static_cast<int>(q.size()) - 1; i > 0; --i) q[i] = q[i - 1] - r * q[i];
    q[0] *= -r;
  }
  std::vector<double> delta(m);
  double norm2 = 0;
  for (int i = 0; i < m; ++i) {
    delta[i] = q[i].real();
    norm2 += delta[i] * delta[i];
  }
  double s = std::sqrt(g[0] / norm2);
  for (double& d : delta) d *= s;
  return delta;
}

}  // namespace rs3::extremizer
