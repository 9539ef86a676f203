#include <doctest.h>

#include <cmath>
#include <random>

#include "rs3/compact.hpp"
#include "rs3/extremizer.hpp"
#include "rs3/pencil.hpp"
#include "rs3/rational.hpp"

using namespace rs3;
using namespace rs3::compact;

namespace {

const double kSqrt5 = std::sqrt(5.0);

// Test-local expansion oracle: plain double-precision series division of the
// assembled numerator/denominator pairs, independent of the long-double path.
std::vector<double> series_div_ref(const Poly<double>& num, const Poly<double>& den,
                                   int order) {
  std::vector<double> r(order + 1, 0.0);
  for (int k = 0; k <= order; ++k) {
    double acc = num.coeff(k);
    for (int j = 1; j <= k && j < static_cast<int>(den.c.size()); ++j)
      acc -= den.c[j] * r[k - j];
    r[k] = acc / den.c[0];
  }
  return r;
}

}  // namespace

TEST_CASE("building blocks have the documented coefficients") {
  double y = 0.62;
  auto g2 = build_g(GLabel::G2, 7, y);
  CHECK(g2.numerator.coeff(0) == 0.0);
  CHECK(g2.numerator.coeff(1) == 1.0);
  CHECK(g2.numerator.coeff(2) == 0.0);
  CHECK(g2.numerator.coeff(3) == 1.0);
  CHECK(g2.denominator.coeff(0) == 1.0);
  CHECK(g2.denominator.coeff(2) == doctest::Approx(2 * (1 - 2 * y * y)));
  CHECK(g2.denominator.coeff(4) == 1.0);

  double y5 = std::cos(M_PI / 5);
  auto g1 = build_g(GLabel::G1, 5, y5);
  CHECK(g1.numerator.coeff(5) == doctest::Approx((5 + kSqrt5) / 10).epsilon(1e-14));
  CHECK(g1.numerator.coeff(15) == doctest::Approx(-(5 + kSqrt5) / 10).epsilon(1e-14));
  CHECK(g1.numerator.degree() == 15);

  auto g4 = build_g(GLabel::G4, 3, 0.4);
  double g1c = 4 * 0.4 * 0.4;
  double g2c = 2 * (-16.0 / 8 * std::pow(0.4, 4) + 4 * (1 + 4.0 / 8) * 0.16 - 1);
  CHECK(g4.numerator.coeff(3) == doctest::Approx(-g1c + 1.0));  // z^3 of (z+z^3)(1 - g1 z^2 + ...)
  CHECK(g4.numerator.coeff(5) == doctest::Approx(g2c - g1c));
  CHECK_THROWS_AS(build_g(GLabel::G1, 5, 1.5), PreconditionViolated);
}

TEST_CASE("quartic splits into the two circle factors exactly") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-60, 60);
  for (int trial = 0; trial < 50; ++trial) {
    Rational y = rat(num(rng), 61);
    Poly<Rational> lhs = pole_quartic<Rational>(y);
    Poly<Rational> f1(std::vector<Rational>{1, -2 * y, 1});
    Poly<Rational> f2(std::vector<Rational>{1, 2 * y, 1});
    Poly<Rational> diff = lhs - f1 * f2;
    diff.trim();
    CHECK(diff.degree() == -1);
  }
}

TEST_CASE("expansion reproduces the worked examples") {
  auto p5 = expand_to_polynomial(ExtremalCase::AmaxBmax, 5);
  CHECK(std::abs(p5.coeff(3) - (1 + kSqrt5) / 2) < 1e-12);
  CHECK(std::abs(p5.coeff(5) - (5 + kSqrt5) / 10) < 1e-12);
  CHECK(std::abs(p5.coeff(2)) < 1e-12);

  auto m5 = expand_to_polynomial(ExtremalCase::Bmin, 5);
  CHECK(std::abs(m5.coeff(3) - (1 - kSqrt5) / 2) < 1e-12);
  CHECK(std::abs(m5.coeff(5) - (5 - kSqrt5) / 10) < 1e-12);

  auto p6 = expand_to_polynomial(ExtremalCase::CmaxDmax, 6, 1.0);
  CHECK(std::abs(p6.coeff(2) - (3 + kSqrt5) / 4) < 1e-12);
  CHECK(std::abs(p6.coeff(4) - (5 + 3 * kSqrt5) / 10) < 1e-12);
  CHECK(std::abs(p6.coeff(6) - (5 + kSqrt5) / 20) < 1e-12);
}

TEST_CASE("expansion agrees with a full-denominator reference at higher order") {
  // Reference route: divide by the complete polynomial denominators at order
  // n+32 (the implementation pre-expands the 1/(1-z^2)^k factors instead).
  // Retained coefficients of a causal division do not depend on the
  // truncation order.
  for (int n : {9, 15, 21}) {
    double y = pencil::extremal_abscissas(n).x_max;
    auto g1 = build_g(GLabel::G1, n, y);
    auto g2 = build_g(GLabel::G2, n, y);
    auto s1 = series_div_ref(g1.numerator, g1.denominator, n + 32);
    auto s2 = series_div_ref(g2.numerator, g2.denominator, n + 32);
    auto p = expand_to_polynomial(ExtremalCase::AmaxBmax, n);
    for (int k = 1; k <= n; ++k)
      CHECK(std::abs(p.coeff(k) - (s1[k] + s2[k])) < 1e-12);
    for (int k = n + 1; k <= n + 32; ++k) CHECK(std::abs(s1[k] + s2[k]) < 1e-9);
  }
  for (int n : {11, 19}) {  // critical-point pair
    double y = pencil::extremal_abscissas(n).x_min;
    auto g3 = build_g(GLabel::G3, n, y);
    auto g4 = build_g(GLabel::G4, n, y);
    auto s3 = series_div_ref(g3.numerator, g3.denominator, n + 32);
    auto s4 = series_div_ref(g4.numerator, g4.denominator, n + 32);
    auto p = expand_to_polynomial(ExtremalCase::Amin, n);
    for (int k = 1; k <= n; ++k)
      CHECK(std::abs(p.coeff(k) - (s3[k] + s4[k])) < 1e-11);
    for (int k = n + 1; k <= n + 32; ++k) CHECK(std::abs(s3[k] + s4[k]) < 1e-8);
  }
}

TEST_CASE("the even-degree families are affine in tau") {
  for (int n : {4, 6, 10}) {
    for (Want w : {Want::Max, Want::Min}) {
      ExtremalCase c = classify(n, w);
      auto lo = expand_to_polynomial(c, n, -1.0);
      auto mid = expand_to_polynomial(c, n, 0.0);
      auto hi = expand_to_polynomial(c, n, 1.0);
      for (int j = 1; j <= n; ++j)
        CHECK(std::abs(lo.coeff(j) + hi.coeff(j) - 2 * mid.coeff(j)) < 1e-12);
    }
  }
}

TEST_CASE("removability certificates") {
  auto r7 = certify_removability(ExtremalCase::AmaxBmax, 7);
  CHECK(r7.pass);
  CHECK(r7.tail_residual < 1e-9);
  for (const auto& pt : r7.points) {
    CHECK(pt.residual < 1e-8);
    if (std::abs(pt.z.real()) == 1.0 && pt.z.imag() == 0.0) CHECK(pt.multiplicity == 1);
  }

  auto a7 = certify_removability(ExtremalCase::Amin, 7);
  CHECK(a7.pass);
  bool saw_triple = false;
  for (const auto& pt : a7.points)
    if (pt.z.imag() == 0.0 && std::abs(std::abs(pt.z.real()) - 1.0) < 1e-14)
      saw_triple = saw_triple || pt.multiplicity == 3;
  CHECK(saw_triple);

  auto c4 = certify_removability(ExtremalCase::Cmin, 4);
  CHECK(c4.pass);
  bool saw_origin = false;
  for (const auto& pt : c4.points) saw_origin = saw_origin || std::abs(pt.z) == 0.0;
  CHECK(saw_origin);

  CHECK(certify_removability(ExtremalCase::Dmin, 6).pass);
  CHECK_THROWS_AS(certify_removability(ExtremalCase::Dmin, 4), ParityMismatch);
}

TEST_CASE("expansion rejects inadmissible degrees") {
  CHECK_NOTHROW(expand_to_polynomial(ExtremalCase::AmaxBmax, 9));
  CHECK_THROWS_AS(expand_to_polynomial(ExtremalCase::AmaxBmax, 4), ParityMismatch);
  CHECK_THROWS_AS(expand_to_polynomial(ExtremalCase::Cmin, 6), ParityMismatch);
}

TEST_CASE("constrained sine identities") {
  auto zero_all = sine_ratio_identities(2.5, 2.5, 0.923);
  for (double r : zero_all) CHECK(r < 1e-12);

  auto at_pi = sine_ratio_identities(1.0, 2.0, M_PI);
  for (double r : at_pi) CHECK(r < 1e-12);

  // Critical abscissa for the degree-7 minimum problem: a = 5, b = 7.
  double y = pencil::extremal_abscissas(7).x_min;
  auto rs = sine_ratio_identities(5.0, 7.0, std::acos(y));
  for (double r : rs) CHECK(r < 1e-9);

  CHECK_THROWS_AS(sine_ratio_identities(1.0, 2.0, 0.37), PreconditionViolated);
}
