#include "rs3/compact.hpp"

#include <cmath>

#include "rs3/pencil.hpp"

namespace rs3::compact {

namespace {

using Series = std::vector<long double>;
using LPoly = Poly<long double>;

Series to_series(const LPoly& p, int order) {
  Series s(order + 1, 0.0L);
  for (int k = 0; k <= order && k < static_cast<int>(p.c.size()); ++k) s[k] = p.c[k];
  return s;
}

Series series_mul(const Series& a, const Series& b, int order) {
  Series r(order + 1, 0.0L);
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0.0L) continue;
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
      r[i + j] += a[i] * b[j];
  }
  return r;
}

// num/den as a Maclaurin series; den must have nonzero constant term.
Series series_div(const Series& num, const LPoly& den, int order) {
  Series r(order + 1, 0.0L);
  long double d0 = den.c.at(0);
  for (int k = 0; k <= order; ++k) {
    long double acc = k < static_cast<int>(num.size()) ? num[k] : 0.0L;
    for (int j = 1; j <= k && j < static_cast<int>(den.c.size()); ++j)
      acc -= den.c[j] * r[k - j];
    r[k] = acc / d0;
  }
  return r;
}

// 1/(1 - z^2)^p = sum C(m+p-1, p-1) z^{2m}.
Series inv_one_minus_z2_pow(int p, int order) {
  Series s(order + 1, 0.0L);
  long double coeff = 1.0L;
  for (int m = 0; 2 * m <= order; ++m) {
    s[2 * m] = coeff;
    coeff = coeff * (m + p) / (m + 1);
  }
  return s;
}

LPoly lquartic(long double y) { return pole_quartic<long double>(y); }

// Numerator polynomials of the four blocks over the denominators
// (1-z^2)^k q(z)^2 (k = 1 for g1, 0 for g2, 3 for g3, 2 for g4).
LPoly g1_numerator(int n, long double y) {
  int p = (n % 2 == 1) ? n + 5 : n + 4;
  long double c = 32.0L * y * y * (1 - y * y) / p;
  LPoly num;
  num.c.assign(p + 6, 0.0L);
  num.c[5] = c;
  num.c[5 + p] = -c;
  return num;
}

LPoly g2_numerator() { return LPoly(std::vector<long double>{0, 1, 0, 1}); }

LPoly g3_numerator(int n, long double y) {
  int p1 = (n % 2 == 1) ? n + 3 : n + 2;
  int p2 = p1 + 2, p3 = p1 + 4;
  long double c = -32.0L * y * y * (1 - y * y) / ((long double)p1 * p2 * p3);
  LPoly bracket;
  bracket.c.assign(p3 + 1, 0.0L);
  bracket.c[0] += (long double)p3 * p3 + (long double)p1 * p1;
  bracket.c[p1] -= (long double)p3 * p3;
  bracket.c[p3] -= (long double)p1 * p1;
  bracket.c[2] -= 2.0L * p1 * p3;
  bracket.c[p2] += 2.0L * p1 * p3;
  LPoly z7 = LPoly::monomial(7, c);
  return z7 * bracket;
}

LPoly g4_numerator(int n, long double y) {
  int p = (n % 2 == 1) ? n + 5 : n + 4;
  long double y2 = y * y;
  long double gamma1 = 4.0L * y2;
  long double gamma2 = 2.0L * (-16.0L / p * y2 * y2 + 4.0L * (1.0L + 4.0L / p) * y2 - 1.0L);
  LPoly oct(std::vector<long double>{1, 0, -gamma1, 0, gamma2, 0, -gamma1, 0, 1});
  LPoly zz3(std::vector<long double>{0, 1, 0, 1});
  return zz3 * oct;
}

bool is_min_pair_case(ExtremalCase c) {
  return c == ExtremalCase::Amin || c == ExtremalCase::Cmin;
}

// Maclaurin series of the case's G-combination before the tau factor.
Series base_series(ExtremalCase c, int n, long double y, int order) {
  LPoly q = lquartic(y);
  LPoly q2 = q * q;
  if (!is_min_pair_case(c)) {
    Series s1 = series_div(series_mul(to_series(g1_numerator(n, y), order),
                                      inv_one_minus_z2_pow(1, order), order),
                           q2, order);
    Series s2 = series_div(to_series(g2_numerator(), order), q, order);
    for (int k = 0; k <= order; ++k) s1[k] += s2[k];
    return s1;
  }
  Series s3 = series_div(series_mul(to_series(g3_numerator(n, y), order),
                                    inv_one_minus_z2_pow(3, order), order),
                         q2, order);
  Series s4 = series_div(series_mul(to_series(g4_numerator(n, y), order),
                                    inv_one_minus_z2_pow(2, order), order),
                         q2, order);
  for (int k = 0; k <= order; ++k) s3[k] += s4[k];
  return s3;
}

// (base)(1 + tau (z + 1/z)/2) - tau/2; base has zero constant term, so the
// z^{-1} contribution is tau/2 base_1 at z^0, cancelled by -tau/2.
Series apply_tau(const Series& base, double tau, int order) {
  Series out(order + 1, 0.0L);
  for (int k = 0; k <= order; ++k) {
    long double v = base[k];
    long double below = (k >= 1) ? base[k - 1] : 0.0L;
    long double above = (k + 1 <= order) ? base[k + 1] : 0.0L;
    out[k] = v + 0.5L * tau * (below + above);
  }
  out[0] -= 0.5L * tau;
  return out;
}

struct Expansion {
  Series full;                // coefficients of z^0..z^order
  double tail_residual = 0;   // max |c_k|, k > n, relative to max |c_k|, k <= n
  double head_scale = 0;
};

Expansion expand_core(ExtremalCase c, int n, double tau, int order) {
  if (!case_admits(c, n)) throw ParityMismatch("expand: case does not admit this degree");
  pencil::Abscissas ab = pencil::extremal_abscissas(n);
  long double y = case_is_min(c) ? ab.x_min : ab.x_max;
  Series s = base_series(c, n, y, order);
  if (n % 2 == 0) s = apply_tau(s, tau, order);
  Expansion e;
  long double head = 0, tail = 0;
  for (int k = 0; k <= order; ++k) {
    long double a = std::abs(s[k]);
    if (k <= n)
      head = std::max(head, a);
    else
      tail = std::max(tail, a);
  }
  e.full = std::move(s);
  e.head_scale = static_cast<double>(head);
  e.tail_residual = static_cast<double>(tail / head);
  return e;
}

}  // namespace

RationalRep build_g(GLabel label, int n, double y) {
  if (n < 3) throw OrderTooSmall("build_g: degree must be >= 3");
  if (!(y > 0 && y < 1)) throw PreconditionViolated("build_g: y must lie in (0,1)");
  auto narrow = [](const LPoly& p) {
    Poly<double> q;
    q.c.assign(p.c.begin(), p.c.end());
    return q;
  };
  long double ly = y;
  LPoly q = lquartic(ly);
  LPoly one_minus_z2(std::vector<long double>{1, 0, -1});
  RationalRep rep;
  rep.label = label;
  switch (label) {
    case GLabel::G1:
      rep.numerator = narrow(g1_numerator(n, ly));
      rep.denominator = narrow(one_minus_z2 * q * q);
      break;
    case GLabel::G2:
      rep.numerator = narrow(g2_numerator());
      rep.denominator = narrow(q);
      break;
    case GLabel::G3:
      rep.numerator = narrow(g3_numerator(n, ly));
      rep.denominator = narrow(one_minus_z2 * one_minus_z2 * one_minus_z2 * q * q);
      break;
    case GLabel::G4:
      rep.numerator = narrow(g4_numerator(n, ly));
      rep.denominator = narrow(one_minus_z2 * one_minus_z2 * q * q);
      break;
  }
  return rep;
}

Extremizer expand_to_polynomial(ExtremalCase c, int n, double tau) {
  Expansion e = expand_core(c, n, tau, n + 16);
  if (e.tail_residual > 1e-9)
    throw TailNonvanishing("expand_to_polynomial: coefficients beyond z^n do not vanish");
  if (std::abs(static_cast<double>(e.full[0])) > 1e-9 ||
      std::abs(static_cast<double>(e.full[1]) - 1.0) > 1e-9)
    throw NonunitLeading("expand_to_polynomial: normalization failed");
  Extremizer p;
  p.kind = c;
  p.n = n;
  pencil::Abscissas ab = pencil::extremal_abscissas(n);
  p.y = case_is_min(c) ? ab.x_min : ab.x_max;
  p.a3 = 4 * p.y * p.y - 1;
  p.tau = (n % 2 == 0) ? tau : 0.0;
  p.coeffs.resize(n);
  for (int k = 1; k <= n; ++k) p.coeffs[k - 1] = static_cast<double>(e.full[k]);
  if (n % 2 == 0) {
    // The family is affine in tau; difference against tau = 0 isolates it.
    Expansion e0 = expand_core(c, n, 0.0, n + 16);
    p.even_unit.resize(n / 2);
    if (tau != 0.0) {
      for (int k = 0; 2 * k + 1 < n; ++k)
        p.even_unit[k] =
            static_cast<double>((e.full[2 * k + 2] - e0.full[2 * k + 2]) / tau);
    } else {
      Expansion e1 = expand_core(c, n, 1.0, n + 16);
      for (int k = 0; 2 * k + 1 < n; ++k)
        p.even_unit[k] = static_cast<double>(e1.full[2 * k + 2] - e0.full[2 * k + 2]);
    }
  }
  p.top_coeff_vanishes = std::abs(p.coeffs.back()) < 1e-12;
  return p;
}

SingularityReport certify_removability(ExtremalCase c, int n) {
  if (!case_admits(c, n))
    throw ParityMismatch("certify_removability: case does not admit this degree");
  pencil::Abscissas ab = pencil::extremal_abscissas(n);
  long double y = case_is_min(c) ? ab.x_min : ab.x_max;
  bool min_pair = is_min_pair_case(c);
  double tau = (n % 2 == 0) ? 1.0 : 0.0;  // tau = 1 exercises the z = 0 pole

  LPoly q = lquartic(y);
  LPoly q2 = q * q;
  LPoly one_minus_z2(std::vector<long double>{1, 0, -1});

  // Combined numerator/denominator with a polynomial denominator.
  LPoly num, den;
  if (!min_pair) {
    num = g1_numerator(n, y) + g2_numerator() * one_minus_z2 * q;
    den = one_minus_z2 * q2;
  } else {
    num = g3_numerator(n, y) + g4_numerator(n, y) * one_minus_z2;
    den = one_minus_z2 * one_minus_z2 * one_minus_z2 * q2;
  }
  if (n % 2 == 0) {
    // P = base (1 + tau(z + 1/z)/2) - tau/2 over z * den.
    LPoly mix(std::vector<long double>{0.5L * tau, 1.0L, 0.5L * tau});
    LPoly z1 = LPoly::monomial(1, 1.0L);
    num = num * mix - LPoly::monomial(1, 0.5L * tau) * den;
    den = z1 * den;
  }

  int mult_pm1 = min_pair ? 3 : 1;
  double alpha = std::acos(static_cast<double>(y));
  using C = std::complex<long double>;
  std::vector<std::pair<C, int>> candidates = {
      {C(1, 0), mult_pm1},
      {C(-1, 0), mult_pm1},
      {std::polar(1.0L, (long double)alpha), 2},
      {std::polar(1.0L, (long double)-alpha), 2},
      {C(0, 0) - std::polar(1.0L, (long double)alpha), 2},
      {C(0, 0) - std::polar(1.0L, (long double)-alpha), 2},
  };
  if (n % 2 == 0) candidates.push_back({C(0, 0), 1});

  SingularityReport rep;
  Expansion e = expand_core(c, n, tau, n + 16);
  rep.tail_residual = e.tail_residual;
  rep.pass = rep.tail_residual <= 1e-9;

  for (const auto& [z0, mult] : candidates) {
    LPoly d = num;
    double worst = 0;
    for (int j = 0; j < mult; ++j) {
      long double scale = 0;
      for (long double cf : d.c) scale += std::abs(cf);
      double r = scale > 0 ? static_cast<double>(std::abs(d.eval_at(z0)) / scale) : 0.0;
      worst = std::max(worst, r);
      d = d.derivative();
    }
    SingularityReport::Candidate cand;
    cand.z = std::complex<double>(static_cast<double>(z0.real()),
                                  static_cast<double>(z0.imag()));
    cand.multiplicity = mult;
    cand.residual = worst;
    rep.points.push_back(cand);
    if (worst > 1e-8) rep.pass = false;
  }
  return rep;
}

std::array<double, 4> sine_ratio_identities(double a, double b, double t) {
  double premise = b * std::sin(a * t) - a * std::sin(b * t);
  double scale = std::abs(a) + std::abs(b);
  if (std::abs(premise) > 1e-12 * scale)
    throw PreconditionViolated("sine_ratio_identities: b sin(at) != a sin(bt)");
  double r1 = b * b * (1 - std::cos(2 * a * t)) + a * a * (1 - std::cos(2 * b * t)) -
              2 * a * b * (std::cos((a - b) * t) - std::cos((a + b) * t));
  double r2 = b * b * std::sin(2 * a * t) + a * a * std::sin(2 * b * t) -
              2 * a * b * std::sin((a + b) * t);
  double r3 = b * std::sin(2 * a * t) + a * std::sin(2 * b * t) -
              (a + b) * std::sin((a + b) * t) + (b - a) * std::sin((b - a) * t);
  double r4 = b * std::cos(2 * a * t) + a * std::cos(2 * b * t) -
              (a + b) * std::cos((a + b) * t) + (a + b) * (-1 + std::cos((a - b) * t));
  return {std::abs(r1), std::abs(r2), std::abs(r3), std::abs(r4)};
}

}  // namespace rs3::compact
