#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace rs3 {

// Dense univariate polynomial; c[k] multiplies z^k. Empty vector is the zero
// polynomial.
template <class T>
struct Poly {
  std::vector<T> c;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) {}

  static Poly monomial(int k, const T& coeff) {
    Poly p;
    p.c.assign(static_cast<std::size_t>(k) + 1, T(0));
    p.c[static_cast<std::size_t>(k)] = coeff;
    return p;
  }

  int degree() const {
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
      if (!(c[static_cast<std::size_t>(k)] == T(0))) return k;
    return -1;
  }

  T coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c.size())) return T(0);
    return c[static_cast<std::size_t>(k)];
  }

  T eval(const T& x) const {
    T acc(0);
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
      acc = acc * x + c[static_cast<std::size_t>(k)];
    return acc;
  }

  // Evaluation in a wider scalar type (e.g. std::complex).
  template <class U>
  U eval_at(const U& x) const {
    U acc(0);
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
      acc = acc * x + U(c[static_cast<std::size_t>(k)]);
    return acc;
  }

  Poly derivative() const {
    Poly d;
    if (c.size() <= 1) return d;
    d.c.resize(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d.c[k - 1] = T(static_cast<unsigned long>(k)) * c[k];
    return d;
  }

  void trim() {
    while (!c.empty() && c.back() == T(0)) c.pop_back();
  }

  Poly& operator+=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), T(0));
    for (std::size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), T(0));
    for (std::size_t k = 0; k < o.c.size(); ++k) c[k] -= o.c[k];
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
  }

  friend Poly operator*(const T& s, Poly p) {
    for (auto& x : p.c) x = s * x;
    return p;
  }
};

}  // namespace rs3
