// Polynomial planes: basis normalization, coprimality, the reduced
// second-order equation attached to a root configuration, and the local
// Wronskian identity, on hand-checkable planes and randomized ones.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "test_support.hpp"
#include "wronski/numeric.hpp"
#include "wronski/plane.hpp"
#include "wronski/polynomial.hpp"
#include "wronski/rng.hpp"

using wronski::Complex;
using wronski::PolyPlane;
using wronski::Polynomial;
using wronski::SplitMix64;

using CPoly = Polynomial<Complex>;

static CPoly cpoly(std::vector<Complex> c) { return CPoly(std::move(c)); }

// The hand-worked degree-2 plane: g = x^2 - x/2 + 1/4, f = x - 1/2, whose
// Wronskian is x(x - 1).
static PolyPlane worked_plane() {
  return PolyPlane{cpoly({{0.25, 0.0}, {-0.5, 0.0}, {1.0, 0.0}}),
                   cpoly({{-0.5, 0.0}, {1.0, 0.0}})};
}

static void basis_normalization() {
  const CPoly g = cpoly({{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
  const CPoly f = cpoly({{1.0, 0.0}, {1.0, 0.0}});

  // Order does not matter; the higher degree lands in g.
  const PolyPlane p1 = PolyPlane::from_basis(g, f);
  const PolyPlane p2 = PolyPlane::from_basis(f, g);
  CHECK_EQ(p1.degree(), 3);
  CHECK_EQ(p1.order(), 1);
  CHECK(p1.g == p2.g && p1.f == p2.f);

  // Equal degrees are reduced by one elimination step.
  const CPoly a = cpoly({{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}});  // x^2 + x
  const CPoly b = cpoly({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}});  // x^2
  const PolyPlane p3 = PolyPlane::from_basis(a, b);
  CHECK_EQ(p3.degree(), 2);
  CHECK_EQ(p3.order(), 1);
  CHECK(p3.f == cpoly({{0.0, 0.0}, {1.0, 0.0}}));

  CHECK_THROWS(PolyPlane::from_basis(a, a * Complex(2.0, 1.0)),
               std::invalid_argument);
  CHECK_THROWS(PolyPlane::from_basis(a, CPoly()), std::invalid_argument);
}

static void types_and_margins() {
  const wronski::PlaneType type = wronski::plane_type(worked_plane());
  CHECK_EQ(type.degree, 2);
  CHECK_EQ(type.order, 1);
  CHECK_EQ(type.wronskian_degree, 2);
  CHECK_EQ(type.degree + type.order, type.wronskian_degree + 1);

  // g(1/2) = 1/4 and g has max coefficient 1, so the margin is exactly 1/4.
  CHECK_NEAR(wronski::coprimality_margin(worked_plane()), 0.25, 1e-12);
  CHECK(wronski::plane_is_generic(worked_plane()));

  // A shared root collapses the margin.
  const PolyPlane shared{cpoly({{-1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}),
                         cpoly({{-1.0, 0.0}, {1.0, 0.0}})};
  CHECK_NEAR(wronski::coprimality_margin(shared), 0.0, 1e-12);
  CHECK(!wronski::plane_is_generic(shared));

  // A constant f has no roots to share.
  const PolyPlane free{cpoly({{0.0, 0.0}, {1.0, 0.0}}),
                       CPoly::constant({1.0, 0.0})};
  CHECK(std::isinf(wronski::coprimality_margin(free)));
}

static void configuration_wronskian() {
  const std::vector<Complex> z = {{0.0, 0.0}, {1.0, 0.0}};
  const CPoly w = wronski::wronskian_of_configuration(z, {1, 1});
  CHECK(w == cpoly({{0.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}}));
  CHECK_EQ(wronski::wronskian_of_configuration(z, {2, 3}).degree(), 5);
  CHECK_THROWS(wronski::wronskian_of_configuration(z, {1, 0}),
               std::invalid_argument);
  CHECK_THROWS(wronski::wronskian_of_configuration(
                   {{0.0, 0.0}, {0.0, 0.0}}, {1, 1}),
               std::invalid_argument);
}

static void fuchsian_worked_example() {
  // The worked plane against its own configuration z = (0, 1), m = (1, 1).
  const std::vector<Complex> z = {{0.0, 0.0}, {1.0, 0.0}};
  const std::vector<int> m = {1, 1};
  const wronski::FuchsianEquation eq =
      wronski::fuchsian_from_plane(worked_plane(), z, m);

  // All multiplicities are 1, so nothing is divided out: F = x^2 - x,
  // G = -W' = 1 - 2x, and H has degree <= 0.
  CHECK_NEAR((eq.F - cpoly({{0.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}}))
                 .max_abs_coeff(),
             0.0, 1e-12);
  CHECK_NEAR((eq.G - cpoly({{1.0, 0.0}, {-2.0, 0.0}})).max_abs_coeff(), 0.0,
             1e-12);
  CHECK(eq.H.degree() <= 0);

  // Both members and any combination solve the equation.
  const PolyPlane plane = worked_plane();
  CHECK(wronski::equation_residual(eq, plane.g) < 1e-12);
  CHECK(wronski::equation_residual(eq, plane.f) < 1e-12);
  CHECK(wronski::equation_residual(eq, plane.g + plane.f * Complex(2.0, -1.0)) <
        1e-12);
  CHECK(wronski::all_solutions_polynomial_check(eq, plane));

  // The equation determines H pointwise: F g'' + G g' + H g = 0, so
  // H = -(F g'' + G g') / g wherever g does not vanish; here g'' = 2.
  const Complex x0(0.5, 0.0);
  const Complex expected_h =
      -(eq.F(x0) * Complex(2.0, 0.0) +
        eq.G(x0) * plane.g.derivative()(x0)) /
      plane.g(x0);
  CHECK_NEAR(eq.H(x0), expected_h, 1e-10);
}

static void fuchsian_repeated_roots() {
  // Plane {x^3, x + 3/2} has Wronskian 2x^3 + (9/2)x^2 = x^2 (2x + 9/2):
  // configuration z = (0, -9/4), m = (2, 1), with one repeated factor x
  // divided out of the reduced equation.
  const PolyPlane plane{
      cpoly({{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}),
      cpoly({{1.5, 0.0}, {1.0, 0.0}})};
  const std::vector<Complex> z = {{0.0, 0.0}, {-2.25, 0.0}};
  const std::vector<int> m = {2, 1};

  const wronski::FuchsianEquation eq =
      wronski::fuchsian_from_plane(plane, z, m);
  CHECK_NEAR((eq.F - cpoly({{0.0, 0.0}, {2.25, 0.0}, {1.0, 0.0}}))
                 .max_abs_coeff(),
             0.0, 1e-10);
  CHECK(eq.H.degree() <= 0);
  CHECK(wronski::equation_residual(eq, plane.g) < 1e-10);
  CHECK(wronski::equation_residual(eq, plane.f) < 1e-10);
  CHECK(wronski::all_solutions_polynomial_check(eq, plane));
}

static void fuchsian_rejections() {
  const std::vector<Complex> z = {{0.0, 0.0}, {1.0, 0.0}};
  const std::vector<int> m = {1, 1};

  // Wrong Wronskian: W[x^2, 1] = 2x does not match x(x - 1) (degree off).
  const PolyPlane wrong{cpoly({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}),
                        CPoly::constant({1.0, 0.0})};
  CHECK_THROWS(wronski::fuchsian_from_plane(wrong, z, m),
               wronski::NotASolutionError);

  // Right degree, wrong roots: the worked plane's Wronskian is x(x - 1),
  // which cannot serve the configuration z = (0, 2).
  CHECK_THROWS(wronski::fuchsian_from_plane(worked_plane(),
                                            {{0.0, 0.0}, {2.0, 0.0}}, m),
               wronski::NotASolutionError);

  // A plane with a base point: {x^3, x} has Wronskian 2x^3, which does match
  // the configuration z = (0), m = (3) in degree and roots, but the common
  // factor makes the zeroth-order division impossible.
  const PolyPlane base_point{
      cpoly({{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}),
      cpoly({{0.0, 0.0}, {1.0, 0.0}})};
  CHECK_THROWS(
      wronski::fuchsian_from_plane(base_point, {{0.0, 0.0}}, {3}),
      wronski::NotASolutionError);

  // The tampered basis g -> g + x f keeps the degree but shifts the
  // Wronskian by f^2, so the equation construction must refuse it.
  const PolyPlane good = worked_plane();
  std::vector<Complex> tampered_c = {{0.25, 0.0}, {-1.0, 0.0}, {2.0, 0.0}};
  const PolyPlane tampered{cpoly(tampered_c), good.f};
  CHECK_EQ(tampered.degree(), good.degree());
  CHECK_THROWS(wronski::fuchsian_from_plane(tampered, z, m),
               wronski::NotASolutionError);

  // Basis change g -> g + f leaves the plane (and hence the equation) alone.
  const PolyPlane rebased = PolyPlane::from_basis(good.g + good.f, good.f);
  const wronski::FuchsianEquation eq =
      wronski::fuchsian_from_plane(rebased, z, m);
  CHECK(wronski::equation_residual(eq, good.g) < 1e-12);
}

static void boundary_plane() {
  // Order-0 plane {antiderivative of W, 1} for z = (0, 1), m = (1, 1).
  const CPoly W = wronski::wronskian_of_configuration(
      {{0.0, 0.0}, {1.0, 0.0}}, {1, 1});
  const PolyPlane plane{W.antiderivative(), CPoly::constant({1.0, 0.0})};
  CHECK_NEAR((wronski::wronskian(plane.g, plane.f) - W).max_abs_coeff(), 0.0,
             1e-14);
  const wronski::FuchsianEquation eq = wronski::fuchsian_from_plane(
      plane, {{0.0, 0.0}, {1.0, 0.0}}, {1, 1});
  CHECK(wronski::equation_residual(eq, plane.g) < 1e-12);
  CHECK(wronski::all_solutions_polynomial_check(eq, plane));
}

static void polynomial_solution_check_guards() {
  // f with a multiple root violates the check's precondition.
  const wronski::FuchsianEquation eq{CPoly::constant({1.0, 0.0}), CPoly(),
                                     CPoly()};
  const PolyPlane degenerate{
      cpoly({{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}),
      cpoly({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}})};
  CHECK_THROWS(wronski::all_solutions_polynomial_check(eq, degenerate),
               std::invalid_argument);
}

static void local_identity() {
  // Hand numbers on {x^2, 1} at z0 = 1: the member vanishing there is
  // x^2 - 1, and W = 2x gives W'/W = 1 = p''/p'.
  const PolyPlane simple{cpoly({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}),
                         CPoly::constant({1.0, 0.0})};
  CHECK(wronski::local_wronskian_identity_check(simple, {1.0, 0.0}, 1e-9));

  // The worked plane away from the configuration points.
  CHECK(wronski::local_wronskian_identity_check(worked_plane(), {2.0, 0.0},
                                                1e-9));
  CHECK(wronski::local_wronskian_identity_check(worked_plane(), {0.3, 0.7},
                                                1e-9));

  // At a configuration point the vanishing member has a double root, which
  // is exactly the degenerate case.
  CHECK_THROWS(wronski::local_wronskian_identity_check(worked_plane(),
                                                       {0.0, 0.0}, 1e-9),
               wronski::DegeneratePointError);

  // A base point kills W without degenerating the vanishing member.
  const PolyPlane base_point{
      cpoly({{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}),  // x^3 + x
      cpoly({{0.0, 0.0}, {1.0, 0.0}})};
  CHECK(!wronski::local_wronskian_identity_check(base_point, {0.0, 0.0},
                                                 1e-9));

  CHECK_THROWS(wronski::local_wronskian_identity_check(simple, {1.0, 0.0}, 0),
               std::invalid_argument);

  // Random planes at random good points: the identity is a theorem, so it
  // must hold wherever W and the vanishing member's slope are away from 0.
  SplitMix64 rng(5);
  int verified = 0;
  while (verified < 25) {
    std::vector<Complex> gc(4), fc(2);
    for (auto& v : gc) v = rng.in_disc({0.0, 0.0}, 1.0);
    for (auto& v : fc) v = rng.in_disc({0.0, 0.0}, 1.0);
    if (std::abs(gc.back()) < 0.2 || std::abs(fc.back()) < 0.2) continue;
    const PolyPlane plane{cpoly(gc), cpoly(fc)};
    const Complex z0 = rng.in_disc({0.0, 0.0}, 1.5);
    const CPoly W = wronski::wronskian(plane.g, plane.f);
    if (std::abs(W(z0)) < 0.1 * std::max(1.0, W.max_abs_coeff())) continue;
    CHECK(wronski::local_wronskian_identity_check(plane, z0, 1e-7));
    ++verified;
  }
}

int main() {
  basis_normalization();
  types_and_margins();
  configuration_wronskian();
  fuchsian_worked_example();
  fuchsian_repeated_roots();
  fuchsian_rejections();
  boundary_plane();
  polynomial_solution_check_guards();
  local_identity();
  return testsupport::harness().summary("plane");
}
