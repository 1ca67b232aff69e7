#pragma once
// The master function attached to a critical-point configuration, its
// critical system, a deterministic multi-start Newton solver enumerating the
// symmetric-group orbits of critical points, and the reconstruction of the
// rational-map class (a polynomial plane) belonging to each orbit. The
// number of orbits found is the fourth, numerical route to the class count.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wronski/numeric.hpp"
#include "wronski/plane.hpp"
#include "wronski/polynomial.hpp"
#include "wronski/problem.hpp"

namespace wronski {

// A candidate point failed the residue test that characterizes critical
// points, so no class can be attached to it.
struct NotCriticalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reconstruction produced a plane violating its own invariants (Wronskian
// mismatch, common roots, or degree drift).
struct ReconstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The critical-system data: prescribed points z (pairwise distinct), their
// multiplicities m, and the number k of unknowns t_1..t_k. Valid instances
// have 0 < k < d where d = M + 1 - k; the k = 0 boundary has no system and
// is handled directly by the pipeline.
struct MasterProblem {
  std::vector<Complex> z;
  std::vector<int> m;
  int k = 0;

  // Validated construction from an admissible problem; throws
  // std::invalid_argument if the spec is inadmissible, k is out of range,
  // or z does not fit m (wrong length or repeated points).
  static MasterProblem from_spec(const ProblemSpec& spec,
                                 std::vector<Complex> z);

  int n() const { return static_cast<int>(m.size()); }
  int total_multiplicity() const;
  int degree() const { return total_multiplicity() + 1 - k; }
  ProblemSpec spec() const { return ProblemSpec(degree(), m); }
};

struct SolverConfig {
  std::uint64_t seed = 1;
  int max_starts = 0;          // 0 = auto: 2000 x expected count (capped)
  int saturation_window = 500; // stop after this many starts with no new orbit
  double eps_newton = 1e-10;   // gradient max-norm declaring convergence
  double eps_verify = 1e-8;    // Wronskian coefficient max-norm tolerance
  double delta_dedupe = 1e-6;  // orbits closer than this (matching) coincide
  double delta_sep = 1e-6;     // required separation from poles of the system
};

// One orbit of critical points under coordinate permutations, stored by its
// canonical representative.
struct CriticalOrbit {
  std::vector<Complex> points;  // canonically ordered, pairwise separated
  double residual = 0;          // gradient max-norm at the points
  double hessian_condition = 0; // infinity-norm condition of the Hessian

  bool hessian_degenerate() const { return !(hessian_condition < 1e10); }
};

// The plane reconstructed from an orbit: f with the orbit as roots, g of
// degree d completing the basis.
struct ReconstructedClass {
  Polynomial<Complex> f;
  Polynomial<Complex> g;
  double wronskian_residual = 0;  // monic W[g,f] vs configuration Wronskian
  double coprimality_margin = 0;  // min |g| over roots of f, normalized
};

// Pass/fail record of every independent check a reconstructed class must
// satisfy. Values are kept alongside flags so reports can show margins.
struct VerificationReport {
  double wronskian_residual = 0;
  bool wronskian_ok = false;
  double coprimality_margin = 0;
  bool coprime_ok = false;
  int degree = 0;
  int order = 0;
  bool type_ok = false;  // degree = d, order = k, degree + order = M + 1
  double fuchsian_residual = 0;
  bool fuchsian_ok = false;
  bool all_polynomial = false;
  double gradient_norm = 0;
  bool gradient_ok = false;

  bool passed() const {
    return wronskian_ok && coprime_ok && type_ok && fuchsian_ok &&
           all_polynomial && gradient_ok;
  }
};

// min over pairs of |t_i - t_j| and over (i, l) of |t_i - z_l|: the distance
// to the poles of the critical system. Empty t gives +infinity.
double domain_margin(const std::vector<Complex>& t,
                     const std::vector<Complex>& z);

// Gradient of the logarithm of the master function:
//   G_i(t) = sum_l -m_l / (t_i - z_l) + sum_{j != i} 2 / (t_i - t_j).
// Critical points are exactly the zeros of G. Points violating the domain
// margin raise std::domain_error naming the offending pair.
std::vector<Complex> master_log_gradient(const std::vector<Complex>& t,
                                         const MasterProblem& prob,
                                         double delta_sep = 1e-6);

// Jacobian of the gradient (Hessian of log of the master function); complex
// symmetric with
//   J_ii = sum_l m_l/(t_i - z_l)^2 - sum_{j != i} 2/(t_i - t_j)^2,
//   J_ij = 2/(t_i - t_j)^2.
std::vector<std::vector<Complex>> master_log_hessian(
    const std::vector<Complex>& t, const MasterProblem& prob,
    double delta_sep = 1e-6);

// Canonical representative of a point multiset: ascending by real then
// imaginary part after rounding to 1e-10 (raw values break ties), so any
// permutation of the same points canonicalizes identically.
std::vector<Complex> canonical_points(std::vector<Complex> points);

// Optimal-matching (bottleneck) distance between two point multisets:
// min over pairings of the max pointwise distance; +infinity when the sizes
// differ.
double matching_distance(const std::vector<Complex>& a,
                         const std::vector<Complex>& b);

// Multi-start damped Newton enumeration of critical orbits. Deterministic
// for a fixed seed independent of thread count (set WRONSKI_THREADS to
// override the worker count): every start draws from its own seed+index
// stream and results merge in start order. Stops at max_starts or after
// saturation_window consecutive starts yielding no new orbit; the returned
// list is sorted by canonical points.
std::vector<CriticalOrbit> solve_orbits(const MasterProblem& prob,
                                        const SolverConfig& cfg);

// Literal enumeration for k = 1, where the critical points are exactly the
// roots of W' at which W does not vanish: finds all roots of W', drops those
// at the prescribed points (where W = 0), and polishes the rest on the
// gradient itself. Serves as a completeness check of solve_orbits.
// Throws std::invalid_argument when k != 1.
std::vector<CriticalOrbit> critical_orbits_k1(const MasterProblem& prob);

// Builds the plane of an orbit: f = prod (x - t_i); the partial fractions of
// W / f^2 must have vanishing simple residues a_i (|a_i| >= residue_tol
// raises NotCriticalError — residue vanishing is equivalent to criticality),
// and then g = (integral of the polynomial part) * f - sum_i b_i * f/(x-t_i)
// has degree d and Wronskian W. A Wronskian residual >= eps_verify raises
// ReconstructionError. The coprimality margin is recorded as a diagnostic;
// judging it is verify_class's job.
ReconstructedClass reconstruct_class(const CriticalOrbit& orbit,
                                     const MasterProblem& prob,
                                     double residue_tol = 1e-8,
                                     double eps_verify = 1e-8);

// Re-derives every claim about a reconstructed class from scratch: Wronskian
// match, coprimality, degree/order bookkeeping, the reduced second-order
// equation and its residuals, and the gradient at the roots of f.
VerificationReport verify_class(const ReconstructedClass& rc,
                                const MasterProblem& prob, double tol = 1e-8);

// One enumerated class with its verification.
struct ClassRecord {
  CriticalOrbit orbit;  // empty points on the k = 0 boundary
  ReconstructedClass cls;
  VerificationReport report;
};

// Counts from all four routes plus the solved-and-verified classes.
struct PipelineResult {
  BigInt count_formula = 0;
  BigInt count_schubert = 0;
  BigInt count_rep = 0;
  BigInt count_orbits = 0;
  bool routes_agree = false;   // the three exact routes coincide
  bool orbits_match = false;   // enumeration found exactly count_formula
  bool all_verified = false;   // every found class passed verification
  std::vector<ClassRecord> classes;
};

// Full pipeline at one configuration: exact counts by all three routes, then
// (for admissible specs) numerical enumeration, reconstruction, and
// verification. The k = 0 boundary emits its single class { integral of W,
// 1 } directly; inadmissible specs skip solving (their count is 0, or 1 via
// the n = 1 degree rule).
PipelineResult run_pipeline(const ProblemSpec& spec,
                            const std::vector<Complex>& z,
                            const SolverConfig& cfg);

}  // namespace wronski
