#include "rs3/sine.hpp"

#include <cmath>

#include "rs3/chebyshev.hpp"
#include "rs3/pencil.hpp"

namespace rs3::sine {

double im_on_circle(const std::vector<double>& coeffs, double t) {
  double s = 0;
  for (int j = static_cast<int>(coeffs.size()); j >= 1; --j)
    s += coeffs[j - 1] * std::sin(j * t);
  return s;
}

double im_on_circle(const Extremizer& p, double t) { return im_on_circle(p.coeffs, t); }

SineKernel kernel_for(ExtremalCase c, int n) {
  if (!case_admits(c, n)) throw ParityMismatch("kernel_for: case does not admit this degree");
  SineKernel k;
  k.n = n;
  k.kind = (c == ExtremalCase::Amin || c == ExtremalCase::Cmin) ? KernelKind::ThetaHat
                                                                : KernelKind::Theta;
  pencil::Abscissas ab = pencil::extremal_abscissas(n);
  k.y = case_is_min(c) ? ab.x_min : ab.x_max;
  return k;
}

namespace {

double kernel_raw(const SineKernel& k, double t) {
  double y2 = k.y * k.y;
  double ct = std::cos(t);
  double st = std::sin(t);
  double dd = ct * ct - y2;
  if (k.kind == KernelKind::Theta) {
    int p = (k.n % 2 == 1) ? k.n + 5 : k.n + 4;
    double s = std::sin(0.5 * p * t);
    return 2 * y2 * (1 - y2) / st * s * s / (p * dd * dd);
  }
  int p1 = (k.n % 2 == 1) ? k.n + 3 : k.n + 2;
  int p2 = p1 + 2, p3 = p1 + 4;
  double d = 0.5 * p3 * std::sin(0.5 * p1 * t) - 0.5 * p1 * std::sin(0.5 * p3 * t);
  return 2 * y2 * (1 - y2) / (st * st * st) * d * d /
         (static_cast<double>(p1) * p2 * p3 * dd * dd);
}

}  // namespace

double kernel_value(const SineKernel& k, double t, double tau) {
  double factor = (k.n % 2 == 0) ? 1 + tau * std::cos(t) : 1.0;
  if (t < 1e-12 || M_PI - t < 1e-12) return 0.0;  // sine polynomials vanish there
  double alpha = std::acos(k.y);
  double t_removable = std::min(std::abs(t - alpha), std::abs(t - (M_PI - alpha)));
  if (t_removable < 1e-6) {
    // cos^2 t = y^2 is a removable point: average symmetric offsets.
    const double h = 1e-6;
    return 0.5 * (kernel_raw(k, t - h) + kernel_raw(k, t + h)) * factor;
  }
  return kernel_raw(k, t) * factor;
}

namespace {

double golden_min(const auto& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

}  // namespace

NonnegativityCertificate certify_nonnegative(const std::vector<double>& coeffs) {
  NonnegativityCertificate cert;
  cert.grid_size = 8192;
  auto f = [&](double t) { return im_on_circle(coeffs, t); };
  std::vector<double> v(cert.grid_size);
  for (int i = 0; i < cert.grid_size; ++i) v[i] = f(M_PI * i / (cert.grid_size - 1));
  cert.min_value = v[0];
  cert.min_location = 0;
  for (int i = 0; i < cert.grid_size; ++i) {
    cert.max_value = std::max(cert.max_value, std::abs(v[i]));
    if (v[i] < cert.min_value) {
      cert.min_value = v[i];
      cert.min_location = M_PI * i / (cert.grid_size - 1);
    }
  }
  double h = M_PI / (cert.grid_size - 1);
  for (int i = 1; i + 1 < cert.grid_size; ++i) {
    if (v[i] <= v[i - 1] && v[i] <= v[i + 1]) {
      double t0 = h * (i - 1), t1 = h * (i + 1);
      double tm = golden_min(f, t0, t1, 1e-10);
      double fm = f(tm);
      if (fm < cert.min_value) {
        cert.min_value = fm;
        cert.min_location = tm;
      }
    }
  }
  cert.refined = true;
  cert.pass = cert.min_value >= -1e-10 * cert.max_value;
  return cert;
}

NonnegativityCertificate certify_nonnegative(const Extremizer& p) {
  return certify_nonnegative(p.coeffs);
}

Poly<double> royster_suffridge_r(const std::vector<double>& coeffs) {
  Poly<double> r(std::vector<double>{1.0});
  for (int j = 2; j <= static_cast<int>(coeffs.size()); ++j) {
    if (coeffs[j - 1] == 0.0) continue;
    r += coeffs[j - 1] * cheb::u_poly<double>(j - 1);
  }
  return r;
}

}  // namespace rs3::sine
