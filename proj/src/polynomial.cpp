#include "wronski/polynomial.hpp"

namespace wronski {

Polynomial<Rational> poly_gcd(Polynomial<Rational> a, Polynomial<Rational> b) {
  while (!b.is_zero()) {
    auto [quot, rem] = divmod(a, b);
    (void)quot;
    a = std::move(b);
    b = std::move(rem);
  }
  return a.is_zero() ? a : a.monic();
}

std::vector<Complex> polynomial_roots(const Polynomial<Complex>& p) {
  if (p.is_zero())
    throw std::invalid_argument("polynomial_roots: zero polynomial");
  const int n = p.degree();
  if (n == 0) return {};

  // Monic coefficients c_0..c_n with c_n = 1.
  std::vector<Complex> c = p.coefficients();
  const Complex lead = c.back();
  for (Complex& v : c) v /= lead;

  // Cauchy bound: every root satisfies |r| <= 1 + max_i |c_i|.
  double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
  radius += 1.0;

  auto eval = [&](Complex x) {
    Complex acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * x + c[static_cast<std::size_t>(i)];
    return acc;
  };
  auto eval_deriv = [&](Complex x) {
    Complex acc = 0;
    for (int i = n; i >= 1; --i)
      acc = acc * x + c[static_cast<std::size_t>(i)] * static_cast<double>(i);
    return acc;
  };

  // Start on the bounding circle with a phase offset so real-axis-symmetric
  // root sets do not trap the iteration.
  constexpr double kTau = 6.283185307179586476925287;
  std::vector<Complex> r(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    r[static_cast<std::size_t>(k)] =
        std::polar(radius, kTau * k / n + 0.4);

  const double tol = 1e-14 * radius;
  for (int sweep = 0; sweep < 500; ++sweep) {
    double moved = 0;
    for (int k = 0; k < n; ++k) {
      Complex denom = 1;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        denom *= r[static_cast<std::size_t>(k)] - r[static_cast<std::size_t>(j)];
      }
      if (std::abs(denom) == 0.0) {
        // Two iterates collided; nudge and keep sweeping.
        r[static_cast<std::size_t>(k)] +=
            std::polar(16 * tol + 1e-280, kTau * (sweep % 7) / 7.0);
        moved = radius;
        continue;
      }
      Complex delta = eval(r[static_cast<std::size_t>(k)]) / denom;
      r[static_cast<std::size_t>(k)] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < tol) break;
  }

  // Newton polish drives simple roots to full precision; clustered multiple
  // roots keep their (necessarily lower) accuracy.
  for (Complex& root : r) {
    for (int step = 0; step < 8; ++step) {
      Complex dv = eval_deriv(root);
      if (std::abs(dv) == 0.0) break;
      Complex delta = eval(root) / dv;
      if (!(std::abs(delta) < 1.0 + radius)) break;  // also rejects NaN
      root -= delta;
      if (std::abs(delta) < 1e-16 * radius) break;
    }
  }
  return r;
}

}  // namespace wronski
