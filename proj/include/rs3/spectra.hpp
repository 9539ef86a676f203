#pragma once

#include <vector>

#include "rs3/types.hpp"

namespace rs3::spectra {

// Plain: zeta_k = U_{k-1} U_k (eigenvectors at zeros of U).
// Star:  the three-term corrected family (eigenvectors at zeros of U'),
//        zeta_k = U_{k-1}U_k - U_{m-k}U_{m+1-k} + (1 - 2k/(m+1)) U_m U_{m+1}
//        with m = (n+1)/2 (n odd) or n/2 (n even).
enum class ZetaKind { Plain, Star };

// zeta_1..zeta_m at abscissa x; star kind requires the sub-parity under which
// the critical-point case exists ((n+3)/2 odd resp. (n+2)/2 odd).
std::vector<double> zeta(ZetaKind kind, int n, double x);

struct EigvecBasis {
  ExtremalCase kind;
  int n = 0;
  double x = 0;           // abscissa
  double eigenvalue = 0;  // 4x^2 - 1
  // One vector for odd n; for even n the odd-slot and even-slot
  // interleavings (disjoint supports, hence independent).
  std::vector<std::vector<double>> vectors;
  double nullity_residual = 0;  // max_v |Phi_n(x) v|_inf / |v|_inf
};

// Null vectors of Phi_n at the case's extremal abscissa, built by
// interleaving the zeta values with zeros. Throws ParityMismatch if the case
// does not admit n, NullityFailure if the residual exceeds 1e-9.
EigvecBasis eigvec_basis(ExtremalCase c, int n);

struct DNullReport {
  int n = 0;
  bool pass = false;
  double worst_residual = 0;
};

// D_n(x_j) Z = 0 for Z_k = U_{k-1}(x_j)U_k(x_j) at every x_j = cos(pi j/(n+2)).
DNullReport verify_d_null_at_cos_nodes(int n);

// D_n(nu) Z = 0 for the corrected family at every zero nu of U'_{n+1}.
DNullReport verify_d_null_at_critical_points(int n);

}  // namespace rs3::spectra
