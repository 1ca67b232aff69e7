#pragma once
// Two-dimensional spaces of polynomials (planes), their Wronskians, and the
// second-order equation F u'' + G u' + H u = 0 attached to a plane whose
// Wronskian vanishes at prescribed points with prescribed multiplicities.
// Every member of such a plane solves the equation, and the equation has
// regular singular points exactly at the prescribed roots.

#include <stdexcept>
#include <vector>

#include "wronski/polynomial.hpp"

namespace wronski {

// Thrown when a plane fails to produce / satisfy the reduced second-order
// equation for a given root configuration — its Wronskian does not match, a
// coefficient division leaves a remainder, or a basis member misses the
// equation beyond tolerance.
struct NotASolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by the local Wronskian identity when every member of the plane that
// vanishes at the test point has zero derivative there, so the identity's
// hypotheses fail (the point is a ramification point of the plane).
struct DegeneratePointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A plane spanned by g and f, normalized so deg g > deg f. Any basis of a
// plane can be brought to this form by one elimination step.
struct PolyPlane {
  Polynomial<Complex> g;  // degree representative (higher degree)
  Polynomial<Complex> f;  // order representative (lower degree)

  // Normalizes an arbitrary basis: reduces equal degrees by elimination and
  // orders the pair. Throws invalid_argument if the two polynomials are
  // linearly dependent (including either being zero).
  static PolyPlane from_basis(Polynomial<Complex> a, Polynomial<Complex> b);

  int degree() const { return g.degree(); }
  int order() const { return f.degree(); }
};

struct PlaneType {
  int degree;            // deg g
  int order;             // deg f
  int wronskian_degree;  // deg W[g,f]; degree + order = wronskian_degree + 1
                         // for planes without common roots
};

PlaneType plane_type(const PolyPlane& plane);

// min_{f(r)=0} |g(r)| / max(1, max|coeff g|): positive iff g and f share no
// root. Returns +infinity when f is constant (no roots to share).
double coprimality_margin(const PolyPlane& plane);

bool plane_is_generic(const PolyPlane& plane, double tol = 1e-9);

// Monic polynomial prod_j (x - z_j)^{m_j} of a root configuration; the
// Wronskian every plane of this configuration must be proportional to.
// Requires pairwise distinct z_j and m_j >= 1.
Polynomial<Complex> wronskian_of_configuration(const std::vector<Complex>& z,
                                               const std::vector<int>& m);

// Second-order equation F u'' + G u' + H u = 0 with F = prod (x - z_j),
// G/F = sum_j -m_j/(x - z_j), and deg H <= n-2.
struct FuchsianEquation {
  Polynomial<Complex> F;
  Polynomial<Complex> G;
  Polynomial<Complex> H;
};

// Backward-error residual of u against the equation: coefficient max-norm of
// F u'' + G u' + H u relative to the sizes of the three products. 0 when the
// natural scale vanishes (e.g. constant u and H = 0).
double equation_residual(const FuchsianEquation& eq,
                         const Polynomial<Complex>& u);

// Builds the reduced equation of a plane whose Wronskian is proportional to
// prod (x - z_j)^{m_j}: starting from W u'' - W' u' + h u = 0 with
// h = (W' f' - W f'') / f, divides all three coefficients by
// prod (x - z_j)^{m_j - 1}. Every division must be exact within tol and both
// basis members must satisfy the result within tol; otherwise the plane does
// not solve this configuration and NotASolutionError is thrown.
FuchsianEquation fuchsian_from_plane(const PolyPlane& plane,
                                     const std::vector<Complex>& z,
                                     const std::vector<int>& m,
                                     double tol = 1e-8);

// Checks that both basis members of the plane satisfy eq within tol — the
// checkable finite form of "every solution of eq is a polynomial" (the
// plane exhausts the solution space). Requires f square-free; a multiple
// root of f is a precondition violation (invalid_argument).
bool all_solutions_polynomial_check(const FuchsianEquation& eq,
                                    const PolyPlane& plane, double tol = 1e-8);

// Local identity at a simple, non-critical point: for the member p of the
// plane vanishing at z0 (unique up to scale), W'(z0)/W(z0) = p''(z0)/p'(z0)
// whenever W(z0) != 0. Returns false when W(z0) = 0 or the identity fails by
// more than tol; throws DegeneratePointError when p'(z0) = 0.
bool local_wronskian_identity_check(const PolyPlane& plane, Complex z0,
                                    double tol);

}  // namespace wronski
