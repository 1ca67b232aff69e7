#pragma once
// Weight-space oracle for tensor products of irreducible sl2 modules: weight
// multiplicities, singular-vector dimensions, and the Clebsch-Gordan
// decomposition. Computed independently of the closed formulas so the two
// can check each other.

#include <map>
#include <vector>

#include "wronski/numeric.hpp"

namespace wronski::sl2 {

// weight -> multiplicity for L_{m_1} (x) ... (x) L_{m_n}. Weights share the
// parity of M = sum m_j and lie in [-M, M].
using WeightMultiplicity = std::map<int, BigInt>;

// Convolution of the factor weight sets {m_j, m_j - 2, ..., -m_j}. The empty
// list gives the trivial module {0: 1}; factors of highest weight 0 are
// allowed.
WeightMultiplicity weight_multiplicities(const std::vector<int>& m);

// Multiplicity lookup with 0 outside the support.
BigInt multiplicity(const WeightMultiplicity& w, int weight);

// Dimension of the space of singular vectors (vectors killed by the raising
// operator) of weight M - 2k: mult(M - 2k) - mult(M - 2k + 2). Requires
// 0 <= 2k <= M; a negative difference in range means a corrupted table and
// raises std::logic_error.
BigInt singular_dimension(const std::vector<int>& m, int k);

// Iterated Clebsch-Gordan L_a (x) L_b = L_{a+b} + L_{a+b-2} + ... + L_{|a-b|}:
// highest weight -> multiplicity of the irreducible summand. The empty list
// decomposes as the trivial module.
std::map<int, BigInt> tensor_decompose(const std::vector<int>& m);

}  // namespace wronski::sl2
