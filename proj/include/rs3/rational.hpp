#pragma once

#include <gmpxx.h>

namespace rs3 {

// Exact rational scalar, used wherever a verification can be made exact.
using Rational = mpq_class;

// mpq_class(n, d) does not reduce; this does.
inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational pow2(unsigned k) { return Rational(mpz_class(1) << k); }

}  // namespace rs3
