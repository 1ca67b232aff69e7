#pragma once
// Dense univariate polynomials over either exact rationals or complex
// doubles, stored lowest-degree-first. The zero polynomial has an empty
// coefficient vector and degree -1. Floating-point polynomials trim trailing
// coefficients relative to the largest coefficient magnitude, so degrees stay
// honest after cancellation-heavy arithmetic.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "wronski/numeric.hpp"

namespace wronski {

// Trailing coefficients with |c| <= kDegreeTol * max|coeffs| are dropped when
// a polynomial is (re)normalized. Exact scalars drop exact zeros only.
inline constexpr double kDegreeTol = 1e-12;

inline double scalar_abs(const Complex& c) { return std::abs(c); }
inline double scalar_abs(const Rational& r) {
  return std::abs(r.convert_to<double>());
}

template <typename T>
class Polynomial {
  static_assert(std::is_same_v<T, Rational> || std::is_same_v<T, Complex>,
                "Polynomial supports Rational and Complex scalars");

 public:
  Polynomial() = default;  // the zero polynomial
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const T& value) {
    return Polynomial(std::vector<T>{value});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coefficients() const { return c_; }

  // Coefficient of x^i; indices outside the stored range read as 0.
  T coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
    return c_[static_cast<std::size_t>(i)];
  }

  T lead() const {
    if (c_.empty()) throw std::invalid_argument("lead: zero polynomial");
    return c_.back();
  }

  double max_abs_coeff() const {
    double mx = 0;
    for (const auto& v : c_) mx = std::max(mx, scalar_abs(v));
    return mx;
  }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<T> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      out[i - 1] = c_[i] * T(static_cast<int>(i));
    return Polynomial(std::move(out));
  }

  // Antiderivative with constant term 0.
  Polynomial antiderivative() const {
    if (c_.empty()) return Polynomial();
    std::vector<T> out(c_.size() + 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      out[i + 1] = c_[i] / T(static_cast<int>(i) + 1);
    return Polynomial(std::move(out));
  }

  Polynomial monic() const {
    if (c_.empty()) throw std::invalid_argument("monic: zero polynomial");
    return *this * (T(1) / c_.back());
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> out(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> out(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return Polynomial(std::move(out));
  }

  Polynomial operator-() const {
    std::vector<T> out(c_);
    for (auto& v : out) v = -v;
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const T& s) {
    std::vector<T> out(a.c_);
    for (auto& v : out) v *= s;
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const T& s, const Polynomial& a) { return a * s; }

  friend Polynomial operator/(const Polynomial& a, const T& s) {
    if (s == T(0)) throw std::invalid_argument("polynomial / 0 scalar");
    return a * (T(1) / s);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

 private:
  void trim() {
    if constexpr (std::is_same_v<T, Rational>) {
      while (!c_.empty() && c_.back() == 0) c_.pop_back();
    } else {
      double threshold = kDegreeTol * max_abs_coeff();
      while (!c_.empty() && scalar_abs(c_.back()) <= threshold) c_.pop_back();
    }
  }

  std::vector<T> c_;  // c_[i] multiplies x^i
};

// Quotient and remainder of polynomial long division; deg(rem) < deg(den).
template <typename T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& num,
                                               const Polynomial<T>& den) {
  if (den.is_zero())
    throw std::invalid_argument("divmod: division by the zero polynomial");
  if (num.degree() < den.degree()) return {Polynomial<T>(), num};

  std::vector<T> rem = num.coefficients();
  const std::vector<T>& dc = den.coefficients();
  const int dn = den.degree();
  const T dl = dc.back();
  std::vector<T> quot(static_cast<std::size_t>(num.degree() - dn + 1), T(0));
  for (int i = num.degree(); i >= dn; --i) {
    T q = rem[static_cast<std::size_t>(i)] / dl;
    quot[static_cast<std::size_t>(i - dn)] = q;
    for (int j = 0; j <= dn; ++j)
      rem[static_cast<std::size_t>(i - dn + j)] -=
          q * dc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dn));  // positions >= dn went to quot
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

// Quotient when the division is (numerically) exact, std::nullopt otherwise.
// Exact scalars demand a literally zero remainder; floating scalars accept a
// remainder below rel_tol relative to the numerator's coefficient scale.
template <typename T>
std::optional<Polynomial<T>> divide_exact(const Polynomial<T>& num,
                                          const Polynomial<T>& den,
                                          double rel_tol = 1e-8) {
  auto [quot, rem] = divmod(num, den);
  if constexpr (std::is_same_v<T, Rational>) {
    if (!rem.is_zero()) return std::nullopt;
  } else {
    double scale = std::max(1.0, num.max_abs_coeff());
    if (rem.max_abs_coeff() > rel_tol * scale) return std::nullopt;
  }
  return quot;
}

// W[g, f] = g' f - g f'.
template <typename T>
Polynomial<T> wronskian(const Polynomial<T>& g, const Polynomial<T>& f) {
  return g.derivative() * f - g * f.derivative();
}

// Monic polynomial with the given roots (repeats allowed).
template <typename T>
Polynomial<T> monic_from_roots(const std::vector<T>& roots) {
  Polynomial<T> p = Polynomial<T>::constant(T(1));
  for (const T& r : roots)
    p = p * Polynomial<T>(std::vector<T>{-r, T(1)});
  return p;
}

// Monic polynomial prod_j (x - z_j)^{m_j}. The z_j must be pairwise
// distinct; multiplicities may be 0 (their factor is skipped).
template <typename T>
Polynomial<T> monic_from_roots(const std::vector<T>& z,
                               const std::vector<int>& m) {
  if (z.size() != m.size())
    throw std::invalid_argument("monic_from_roots: |z| != |m|");
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (m[i] < 0)
      throw std::invalid_argument("monic_from_roots: negative multiplicity");
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (z[i] == z[j])
        throw std::invalid_argument("monic_from_roots: repeated root given "
                                    "with separate multiplicities");
  }
  Polynomial<T> p = Polynomial<T>::constant(T(1));
  for (std::size_t i = 0; i < z.size(); ++i) {
    Polynomial<T> factor(std::vector<T>{-z[i], T(1)});
    for (int rep = 0; rep < m[i]; ++rep) p = p * factor;
  }
  return p;
}

// Monic gcd via the Euclidean algorithm in exact arithmetic;
// poly_gcd(0, 0) = 0.
Polynomial<Rational> poly_gcd(Polynomial<Rational> a, Polynomial<Rational> b);

// All complex roots (with multiplicity, in no particular order) by the
// Durand-Kerner simultaneous iteration followed by per-root Newton polish.
// A constant yields no roots; the zero polynomial is rejected.
std::vector<Complex> polynomial_roots(const Polynomial<Complex>& p);

}  // namespace wronski
