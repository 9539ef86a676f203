#include "rs3/oracle.hpp"

#include <cmath>
#include <random>

#include "rs3/pencil.hpp"

namespace rs3::oracle {

namespace {

Eigen::MatrixXd to_eigen(const pencil::Pencil& p, bool use_a) {
  Eigen::MatrixXd m(p.n, p.n);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      m(i, j) = to_double(use_a ? p.a_entry(i, j) : p.b_entry(i, j));
  return m;
}

}  // namespace

DenseEig solve_pencil_dense(int n) {
  if (n < 3) throw OrderTooSmall("solve_pencil_dense: order must be >= 3");
  if (n > 256) throw std::invalid_argument("solve_pencil_dense: dense bound is 256");
  pencil::Pencil p = pencil::build_pencil(n);
  Eigen::MatrixXd a = to_eigen(p, true);
  Eigen::MatrixXd b = to_eigen(p, false);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, b);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("solve_pencil_dense: eigensolver failed (B not SPD?)");
  DenseEig out;
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd r = a * out.eigenvectors.col(i) -
                        out.eigenvalues(i) * (b * out.eigenvectors.col(i));
    out.max_residual = std::max(out.max_residual, r.lpNorm<Eigen::Infinity>());
  }
  Eigen::MatrixXd gram = out.eigenvectors.transpose() * b * out.eigenvectors;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.max_b_orth_defect = std::max(out.max_b_orth_defect, std::abs(gram(i, j)));
  return out;
}

RayleighResult rayleigh_search(int n, Want want, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("rayleigh_search: restarts must be >= 1");
  pencil::Pencil p = pencil::build_pencil(n);
  Eigen::MatrixXd a = to_eigen(p, true);
  Eigen::MatrixXd b = to_eigen(p, false);
  Eigen::LLT<Eigen::MatrixXd> b_chol(b);

  auto quotient = [&](const Eigen::VectorXd& v) {
    return v.dot(a * v) / v.dot(b * v);
  };

  // Spectrum lies in (-1, 3): shift by 4 to make the wanted end dominant.
  const double shift = 4.0;
  Eigen::MatrixXd op = (want == Want::Max) ? Eigen::MatrixXd(a + shift * b)
                                           : Eigen::MatrixXd(shift * b - a);

  RayleighResult best;
  best.value = (want == Want::Max) ? -1e300 : 1e300;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  for (int r = 0; r < restarts; ++r) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = gauss(rng);
    v.normalize();
    int iters = 0;
    double mu_prev = 1e300;
    for (int it = 0; it < 2000; ++it) {
      v = b_chol.solve(op * v);
      v.normalize();
      ++iters;
      if (it % 16 == 15) {
        double mu = quotient(v);
        if (std::abs(mu - mu_prev) < 1e-14) break;
        mu_prev = mu;
      }
    }
    // Inverse-iteration polish at the current quotient.
    for (int polish = 0; polish < 3; ++polish) {
      double mu = quotient(v);
      Eigen::MatrixXd shifted = a - mu * b;
      for (int i = 0; i < n; ++i) shifted(i, i) += 1e-13;
      Eigen::PartialPivLU<Eigen::MatrixXd> lu(shifted);
      Eigen::VectorXd w = lu.solve(b * v);
      if (!w.allFinite()) break;
      v = w.normalized();
      ++iters;
    }
    double mu = quotient(v);
    bool better = (want == Want::Max) ? mu > best.value : mu < best.value;
    if (better) {
      best.value = mu;
      best.delta = v;
      best.iterations = iters;
    }
  }
  return best;
}

std::vector<double> reconstruct_coeffs(const std::vector<double>& delta) {
  const int n = static_cast<int>(delta.size());
  std::vector<double> gamma(n, 0.0);
  for (int s = 1; s <= n; ++s)
    for (int j = 0; j + s - 1 < n; ++j) gamma[s - 1] += delta[j] * delta[j + s - 1];
  auto gam = [&](int s) { return (s >= 1 && s <= n) ? gamma[s - 1] : 0.0; };
  double norm = gam(1) - gam(3);
  double scale = 0;
  for (double v : gamma) scale = std::max(scale, std::abs(v));
  if (norm <= 1e-12 * scale)
    throw DegenerateNormalizer("reconstruct_coeffs: gamma_1 - gamma_3 not positive");
  std::vector<double> a(n);
  for (int s = 1; s <= n; ++s) a[s - 1] = (gam(s) - gam(s + 2)) / norm;
  return a;
}

int extreme_multiplicity(const DenseEig& eig, Want want, double rel_gap) {
  const int n = static_cast<int>(eig.eigenvalues.size());
  double spread = eig.eigenvalues(n - 1) - eig.eigenvalues(0);
  if (spread <= 0) return n;
  double tol = rel_gap * spread;
  int count = 0;
  if (want == Want::Max) {
    double top = eig.eigenvalues(n - 1);
    for (int i = n - 1; i >= 0 && top - eig.eigenvalues(i) < tol; --i) ++count;
  } else {
    double bottom = eig.eigenvalues(0);
    for (int i = 0; i < n && eig.eigenvalues(i) - bottom < tol; ++i) ++count;
  }
  return count;
}

}  // namespace rs3::oracle
