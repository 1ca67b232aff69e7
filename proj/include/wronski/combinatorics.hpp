#pragma once
// Closed-form counting of classes of rational maps with prescribed critical
// points, the companion singular-dimension formula, Catalan numbers, and the
// generating-function coefficients they assemble into. All arithmetic is
// exact; no floating point enters this module.

#include <vector>

#include "wronski/numeric.hpp"
#include "wronski/problem.hpp"

namespace wronski::comb {

// C(a, b) with the convention C(a, b) = 0 whenever a < b, which covers every
// negative a since b must be nonnegative. b < 0 is a caller error.
BigInt binomial(long long a, long long b);

// Inclusion-exclusion count of classes for n >= 2 critical points:
//   sum over nonempty subsets I of {1..n}, sign (-1)^(n-|I|), of
//   C(sum_{j in I} m_j + |I| - d - 1, n - 2).
// Inadmissible specs return 0 up front (the degree argument forces the count
// to vanish there; the bare sum does not). Throws std::invalid_argument for
// n < 2 (that case has a direct answer, see count_classes); a negative
// signed total raises std::logic_error since the count is a cardinality.
BigInt class_count_formula(const ProblemSpec& spec);

// Total count for any n >= 1: n = 1 has the direct answer 1 iff m_1 = d - 1,
// and n >= 2 goes through the closed formula.
BigInt count_classes(const ProblemSpec& spec);

// Dimension of the space of singular vectors of weight M - 2k in the tensor
// product of irreducibles with highest weights m, by the inclusion-exclusion
// closed form (n >= 2):
//   sum over all subsets I, sign (-1)^|I|, of C(k + n - 2 - sum_I m - |I|, n - 2).
// Out-of-range k (k < 0 or 2k > M) returns 0, so sums over all k telescope
// correctly.
BigInt singular_dimension_formula(const std::vector<int>& m, long long k);

// The representation-theoretic route to the same count: the dimension of the
// singular-vector space of weight M - 2k at k = M + 1 - d. Out-of-range k
// gives 0; n = 1 is answered by irreducibility (only the highest weight
// vector is singular, so the count is 1 exactly when k = 0).
BigInt singular_route_count(const ProblemSpec& spec);

// (1/d) * C(2d - 2, d - 1): the count when all 2d - 2 finite critical points
// are simple. The division is always exact.
BigInt catalan(int d);

// Coefficients M_1..M_order of the generating function for the multiplicity
// of the trivial module in tensor powers of the two-dimensional irreducible:
// M_k = 0 for odd k and M_{2j} = catalan(j + 1).
std::vector<BigInt> genfun_coefficients(int order);

}  // namespace wronski::comb
