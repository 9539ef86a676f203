#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rs3 {

enum class Want { Max, Min };

// The six extremal problems for the third coefficient, keyed by the parity
// of the degree N and of the relevant half-index.
enum class ExtremalCase { AmaxBmax, CmaxDmax, Amin, Bmin, Cmin, Dmin };

struct OrderTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParityMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsupportedCase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InsufficientSamples : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PreconditionViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NoPositiveZero : std::domain_error {
  using std::domain_error::domain_error;
};
struct BracketFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NullityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateNormalizer : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NegativityDetected : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RootPairingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TailNonvanishing : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonunitLeading : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool case_is_min(ExtremalCase c) {
  return c == ExtremalCase::Amin || c == ExtremalCase::Bmin ||
         c == ExtremalCase::Cmin || c == ExtremalCase::Dmin;
}

inline bool case_admits(ExtremalCase c, int n) {
  if (n < 3) return false;
  switch (c) {
    case ExtremalCase::AmaxBmax: return n % 2 == 1;
    case ExtremalCase::CmaxDmax: return n % 2 == 0;
    case ExtremalCase::Amin:     return n % 2 == 1 && ((n + 3) / 2) % 2 == 1;
    case ExtremalCase::Bmin:     return n % 2 == 1 && ((n + 3) / 2) % 2 == 0;
    case ExtremalCase::Cmin:     return n % 2 == 0 && ((n + 2) / 2) % 2 == 1;
    case ExtremalCase::Dmin:     return n % 2 == 0 && ((n + 2) / 2) % 2 == 0;
  }
  return false;
}

inline ExtremalCase classify(int n, Want want) {
  if (n < 3) throw OrderTooSmall("degree must be at least 3");
  if (want == Want::Max)
    return n % 2 == 1 ? ExtremalCase::AmaxBmax : ExtremalCase::CmaxDmax;
  if (n % 2 == 1)
    return ((n + 3) / 2) % 2 == 1 ? ExtremalCase::Amin : ExtremalCase::Bmin;
  return ((n + 2) / 2) % 2 == 1 ? ExtremalCase::Cmin : ExtremalCase::Dmin;
}

inline std::string to_string(ExtremalCase c) {
  switch (c) {
    case ExtremalCase::AmaxBmax: return "amax-bmax";
    case ExtremalCase::CmaxDmax: return "cmax-dmax";
    case ExtremalCase::Amin:     return "amin";
    case ExtremalCase::Bmin:     return "bmin";
    case ExtremalCase::Cmin:     return "cmin";
    case ExtremalCase::Dmin:     return "dmin";
  }
  return "?";
}

inline std::string to_string(Want w) { return w == Want::Max ? "max" : "min"; }

// Extremal polynomial P(z) = z + sum_{j>=2} a_j z^j.
//
// coeffs holds a_1..a_n densely (even slots explicitly zero for odd n).
// For even n the family is affine in tau: coeffs = odd part + tau*even_unit,
// where even_unit holds a_2, a_4, ... at tau = 1.
struct Extremizer {
  ExtremalCase kind = ExtremalCase::AmaxBmax;
  int n = 0;
  double y = 0;    // critical abscissa
  double a3 = 0;   // extremal value, 4y^2 - 1
  double tau = 0;  // family parameter; unused for odd n
  std::vector<double> coeffs;
  std::vector<double> even_unit;
  bool top_coeff_vanishes = false;  // a_n = 0 at this tau (class boundary)

  double coeff(int j) const {  // 1-based
    return (j >= 1 && j <= n) ? coeffs[j - 1] : 0.0;
  }
};

// gamma_s = sum_j delta_j delta_{j+s-1}; delta optional (Fejer-Riesz factor).
struct GammaChain {
  std::vector<double> gamma;
  std::vector<double> delta;
};

}  // namespace rs3
