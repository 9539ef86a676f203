#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "rs3/types.hpp"

namespace rs3::oracle {

// Brute-force verification layer. Depends only on the pencil's matrix
// builders, never on the constructive formula modules.

struct DenseEig {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // columns, B-orthonormal
  double max_residual = 0;       // max_i |A v_i - l_i B v_i|_inf
  double max_b_orth_defect = 0;  // max_{i!=j} |v_i^T B v_j|
};

// All generalized eigenpairs of (A, B) via Cholesky reduction of B and a
// dense symmetric solve. n in [3, 256].
DenseEig solve_pencil_dense(int n);

struct RayleighResult {
  double value = 0;
  Eigen::VectorXd delta;
  int iterations = 0;
};

// Extreme of the Rayleigh quotient (d^T A d)/(d^T B d) by shifted power
// iteration plus inverse-iteration polish, best over random restarts.
RayleighResult rayleigh_search(int n, Want want, int restarts, std::uint64_t seed);

// gamma_s = sum_j d_j d_{j+s-1}, then a_s = (gamma_s - gamma_{s+2}) /
// (gamma_1 - gamma_3). Throws DegenerateNormalizer.
std::vector<double> reconstruct_coeffs(const std::vector<double>& delta);

// Number of eigenvalues within rel_gap * spectral-spread of the extreme one.
int extreme_multiplicity(const DenseEig& eig, Want want, double rel_gap = 1e-6);

}  // namespace rs3::oracle
