#include "wronski/plane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace wronski {

PolyPlane PolyPlane::from_basis(Polynomial<Complex> a, Polynomial<Complex> b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("PolyPlane: basis polynomial is zero");
  if (a.degree() == b.degree()) {
    a = a - (a.lead() / b.lead()) * b;  // strictly lowers deg a
    if (a.is_zero())
      throw std::invalid_argument("PolyPlane: basis is linearly dependent");
  }
  PolyPlane plane;
  if (a.degree() > b.degree()) {
    plane.g = std::move(a);
    plane.f = std::move(b);
  } else {
    plane.g = std::move(b);
    plane.f = std::move(a);
  }
  return plane;
}

PlaneType plane_type(const PolyPlane& plane) {
  return {plane.degree(), plane.order(),
          wronskian(plane.g, plane.f).degree()};
}

double coprimality_margin(const PolyPlane& plane) {
  if (plane.f.degree() < 1) return std::numeric_limits<double>::infinity();
  const double scale = std::max(1.0, plane.g.max_abs_coeff());
  double margin = std::numeric_limits<double>::infinity();
  for (const Complex& r : polynomial_roots(plane.f))
    margin = std::min(margin, std::abs(plane.g(r)) / scale);
  return margin;
}

bool plane_is_generic(const PolyPlane& plane, double tol) {
  return coprimality_margin(plane) > tol;
}

Polynomial<Complex> wronskian_of_configuration(const std::vector<Complex>& z,
                                               const std::vector<int>& m) {
  for (int mj : m)
    if (mj < 1)
      throw std::invalid_argument(
          "wronskian_of_configuration: multiplicities must be >= 1");
  return monic_from_roots(z, m);  // also rejects repeated z_j
}

double equation_residual(const FuchsianEquation& eq,
                         const Polynomial<Complex>& u) {
  const Polynomial<Complex> du = u.derivative();
  const Polynomial<Complex> ddu = du.derivative();
  const Polynomial<Complex> lhs = eq.F * ddu + eq.G * du + eq.H * u;
  const double denom = eq.F.max_abs_coeff() * ddu.max_abs_coeff() +
                       eq.G.max_abs_coeff() * du.max_abs_coeff() +
                       eq.H.max_abs_coeff() * u.max_abs_coeff();
  if (denom == 0) return 0.0;
  return lhs.max_abs_coeff() / denom;
}

namespace {

// Relative max-norm distance between two polynomials.
double coeff_distance(const Polynomial<Complex>& a,
                      const Polynomial<Complex>& b) {
  const double scale = std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
  return (a - b).max_abs_coeff() / scale;
}

}  // namespace

FuchsianEquation fuchsian_from_plane(const PolyPlane& plane,
                                     const std::vector<Complex>& z,
                                     const std::vector<int>& m, double tol) {
  const Polynomial<Complex> target = wronskian_of_configuration(z, m);
  const int n = static_cast<int>(z.size());

  Polynomial<Complex> W = wronskian(plane.g, plane.f);
  if (W.is_zero())
    throw NotASolutionError("fuchsian_from_plane: degenerate plane (zero "
                            "Wronskian)");
  if (W.degree() != target.degree())
    throw NotASolutionError(
        "fuchsian_from_plane: Wronskian degree " +
        std::to_string(W.degree()) + " != configuration degree " +
        std::to_string(target.degree()));
  W = W.monic();
  if (coeff_distance(W, target) > tol)
    throw NotASolutionError(
        "fuchsian_from_plane: Wronskian does not match the configuration");

  // Every u in the plane satisfies W u'' - W' u' + h u = 0 where
  // h f = W' f' - W f''; the division is exact precisely because W is the
  // plane's Wronskian.
  const Polynomial<Complex> df = plane.f.derivative();
  const Polynomial<Complex> numerator =
      W.derivative() * df - W * df.derivative();
  auto h = divide_exact(numerator, plane.f, tol);
  if (!h)
    throw NotASolutionError(
        "fuchsian_from_plane: determinant identity division left a "
        "remainder");

  // Reduce by the common factor prod (x - z_j)^{m_j - 1}.
  std::vector<int> m_reduced(m);
  for (int& v : m_reduced) --v;
  const Polynomial<Complex> divisor = monic_from_roots(z, m_reduced);

  auto F = divide_exact(W, divisor, tol);
  auto G = divide_exact(-W.derivative(), divisor, tol);
  auto H = divide_exact(*h, divisor, tol);
  if (!F || !G || !H)
    throw NotASolutionError(
        "fuchsian_from_plane: equation coefficients are not divisible by the "
        "configuration's repeated factors");

  if (H->degree() > n - 2)
    throw NotASolutionError("fuchsian_from_plane: reduced zeroth-order "
                            "coefficient exceeds degree n-2");

  // Independent cross-check of the reduced leading coefficients.
  const Polynomial<Complex> F_expected =
      monic_from_roots(z, std::vector<int>(z.size(), 1));
  Polynomial<Complex> G_expected;
  for (std::size_t j = 0; j < z.size(); ++j) {
    std::vector<int> ones(z.size(), 1);
    ones[j] = 0;
    G_expected = G_expected -
                 Polynomial<Complex>::constant(Complex(m[j])) *
                     monic_from_roots(z, ones);
  }
  if (coeff_distance(*F, F_expected) > tol ||
      coeff_distance(*G, G_expected) > tol)
    throw NotASolutionError(
        "fuchsian_from_plane: reduced coefficients disagree with the "
        "configuration");

  FuchsianEquation eq{*F, *G, *H};
  if (equation_residual(eq, plane.g) > tol ||
      equation_residual(eq, plane.f) > tol)
    throw NotASolutionError(
        "fuchsian_from_plane: a basis member does not satisfy the reduced "
        "equation");
  return eq;
}

bool all_solutions_polynomial_check(const FuchsianEquation& eq,
                                    const PolyPlane& plane, double tol) {
  if (plane.f.degree() >= 2) {
    const Polynomial<Complex> df = plane.f.derivative();
    const double scale = std::max(1.0, df.max_abs_coeff());
    for (const Complex& r : polynomial_roots(plane.f))
      if (std::abs(df(r)) <= 1e-8 * scale)
        throw std::invalid_argument(
            "all_solutions_polynomial_check: f has a multiple root");
  }
  return equation_residual(eq, plane.g) < tol &&
         equation_residual(eq, plane.f) < tol;
}

bool local_wronskian_identity_check(const PolyPlane& plane, Complex z0,
                                    double tol) {
  if (!(tol > 0))
    throw std::invalid_argument(
        "local_wronskian_identity_check: tol must be positive");
  const Polynomial<Complex>& g = plane.g;
  const Polynomial<Complex>& f = plane.f;
  const Complex gz = g(z0);
  const Complex fz = f(z0);

  // The member vanishing at z0. When both basis members vanish there, every
  // member does; take the one with the larger slope.
  Polynomial<Complex> p;
  if (std::abs(gz) <= 1e-9 * std::max(1.0, g.max_abs_coeff()) &&
      std::abs(fz) <= 1e-9 * std::max(1.0, f.max_abs_coeff())) {
    p = (std::abs(g.derivative()(z0)) >= std::abs(f.derivative()(z0))) ? g : f;
  } else {
    p = fz * g - gz * f;
  }

  const Polynomial<Complex> dp = p.derivative();
  const Complex dpz = dp(z0);
  if (std::abs(dpz) <= 1e-9 * std::max(1.0, p.max_abs_coeff()))
    throw DegeneratePointError(
        "local_wronskian_identity_check: every member vanishing at the point "
        "has zero derivative there");

  const Polynomial<Complex> W = wronskian(g, f);
  const Complex Wz = W(z0);
  if (std::abs(Wz) <= 1e-9 * std::max(1.0, W.max_abs_coeff()))
    return false;  // the identity requires W(z0) != 0

  const Complex lhs = W.derivative()(z0) / Wz;
  const Complex rhs = dp.derivative()(z0) / dpz;
  return std::abs(lhs - rhs) < tol;
}

}  // namespace wronski
