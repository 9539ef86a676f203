#include "rs3/spectra.hpp"

#include <cmath>

#include "rs3/chebyshev.hpp"
#include "rs3/pencil.hpp"

namespace rs3::spectra {

namespace {

double inf_norm(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> matvec(const pencil::Matrix<double>& m, const std::vector<double>& v) {
  std::vector<double> r(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

// zeta_k = U_{k-1}U_k - U_{m-k}U_{m+1-k} + (1 - 2k/(m+1)) U_m U_{m+1},
// k = 1..m; the general corrected family behind the critical-point cases.
std::vector<double> star_family(int m, double x) {
  std::vector<double> z(m);
  double tail = cheb::eval_u(m, x) * cheb::eval_u(m + 1, x);
  for (int k = 1; k <= m; ++k) {
    z[k - 1] = cheb::eval_u(k - 1, x) * cheb::eval_u(k, x) -
               cheb::eval_u(m - k, x) * cheb::eval_u(m + 1 - k, x) +
               (1.0 - 2.0 * k / (m + 1)) * tail;
  }
  return z;
}

}  // namespace

std::vector<double> zeta(ZetaKind kind, int n, double x) {
  if (n < 1) throw std::invalid_argument("zeta: n must be >= 1");
  int m = (n % 2 == 1) ? (n + 1) / 2 : n / 2;
  if (kind == ZetaKind::Plain) {
    std::vector<double> z(m);
    for (int k = 1; k <= m; ++k) z[k - 1] = cheb::eval_u(k - 1, x) * cheb::eval_u(k, x);
    return z;
  }
  // The star family exists only where the smallest positive critical point
  // is the extreme abscissa: (n+3)/2 odd for odd n, (n+2)/2 odd for even n.
  if (n % 2 == 1 && ((n + 3) / 2) % 2 != 1)
    throw ParityMismatch("zeta: star family needs (n+3)/2 odd");
  if (n % 2 == 0 && ((n + 2) / 2) % 2 != 1)
    throw ParityMismatch("zeta: star family needs (n+2)/2 odd");
  return star_family(m, x);
}

EigvecBasis eigvec_basis(ExtremalCase c, int n) {
  if (!case_admits(c, n)) throw ParityMismatch("eigvec_basis: case does not admit this degree");
  pencil::Abscissas ab = pencil::extremal_abscissas(n);
  EigvecBasis basis;
  basis.kind = c;
  basis.n = n;
  basis.x = case_is_min(c) ? ab.x_min : ab.x_max;
  basis.eigenvalue = 4 * basis.x * basis.x - 1;

  ZetaKind kind = (c == ExtremalCase::Amin || c == ExtremalCase::Cmin) ? ZetaKind::Star
                                                                       : ZetaKind::Plain;
  std::vector<double> z = zeta(kind, n, basis.x);

  if (n % 2 == 1) {
    std::vector<double> v(n, 0.0);
    for (std::size_t k = 0; k < z.size(); ++k) v[2 * k] = z[k];
    basis.vectors.push_back(std::move(v));
  } else {
    std::vector<double> v1(n, 0.0), v2(n, 0.0);
    for (std::size_t k = 0; k < z.size(); ++k) {
      v1[2 * k] = z[k];
      v2[2 * k + 1] = z[k];
    }
    basis.vectors.push_back(std::move(v1));
    basis.vectors.push_back(std::move(v2));
  }

  auto phi = pencil::phi_matrix<double>(n, basis.x);
  for (const auto& v : basis.vectors) {
    double r = inf_norm(matvec(phi, v)) / inf_norm(v);
    basis.nullity_residual = std::max(basis.nullity_residual, r);
  }
  if (basis.nullity_residual > 1e-9)
    throw NullityFailure("eigvec_basis: Phi Z residual exceeds 1e-9");
  return basis;
}

DNullReport verify_d_null_at_cos_nodes(int n) {
  if (n < 1) throw std::invalid_argument("verify_d_null_at_cos_nodes: n must be >= 1");
  DNullReport rep;
  rep.n = n;
  for (int j = 1; j <= n + 1; ++j) {
    double x = std::cos(M_PI * j / (n + 2));
    std::vector<double> z(n);
    for (int k = 1; k <= n; ++k) z[k - 1] = cheb::eval_u(k - 1, x) * cheb::eval_u(k, x);
    auto d = pencil::d_matrix<double>(n, x);
    // x near 0 degenerates the family to the zero vector; the floor keeps the
    // residual absolute there instead of noise-over-noise.
    double r = inf_norm(matvec(d, z)) / std::max(inf_norm(z), 1.0);
    rep.worst_residual = std::max(rep.worst_residual, r);
  }
  rep.pass = rep.worst_residual < 1e-9;
  return rep;
}

DNullReport verify_d_null_at_critical_points(int n) {
  if (n < 1) throw std::invalid_argument("verify_d_null_at_critical_points: n must be >= 1");
  DNullReport rep;
  rep.n = n;
  // U'_{n+1} has one zero strictly between consecutive zeros of U_{n+1}.
  for (int gap = 1; gap <= n; ++gap) {
    double hi = std::cos(M_PI * gap / (n + 2));
    double lo = std::cos(M_PI * (gap + 1) / (n + 2));
    double flo = cheb::eval_u_prime(n + 1, lo);
    double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
      double mid = 0.5 * (a + b);
      double fm = cheb::eval_u_prime(n + 1, mid);
      if ((fm < 0) == (flo < 0)) {
        a = mid;
        flo = fm;
      } else {
        b = mid;
      }
    }
    double nu = 0.5 * (a + b);
    std::vector<double> z = star_family(n, nu);
    auto d = pencil::d_matrix<double>(n, nu);
    double r = inf_norm(matvec(d, z)) / std::max(inf_norm(z), 1.0);
    rep.worst_residual = std::max(rep.worst_residual, r);
  }
  rep.pass = rep.worst_residual < 1e-9;
  return rep;
}

}  // namespace rs3::spectra
