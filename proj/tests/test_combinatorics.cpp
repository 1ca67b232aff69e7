// Exact counting routes: the inclusion-exclusion class count, the
// singular-dimension companion, Catalan numbers, and the generating-function
// coefficients, checked against hand values, recurrences, and the
// weight-space oracle.

#include <functional>
#include <stdexcept>
#include <vector>

#include "test_support.hpp"
#include "wronski/combinatorics.hpp"
#include "wronski/numeric.hpp"
#include "wronski/problem.hpp"
#include "wronski/sl2.hpp"

using wronski::BigInt;
using wronski::ProblemSpec;
namespace comb = wronski::comb;
namespace sl2 = wronski::sl2;

// Runs fn on every multiplicity vector in {1..max_m}^n.
static void for_each_multiplicity(
    int n, int max_m, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> m(static_cast<std::size_t>(n), 1);
  for (;;) {
    fn(m);
    int pos = n - 1;
    while (pos >= 0 && m[static_cast<std::size_t>(pos)] == max_m) {
      m[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) return;
    ++m[static_cast<std::size_t>(pos)];
  }
}

static void binomial_basics() {
  CHECK_EQ(comb::binomial(0, 0), BigInt(1));
  CHECK_EQ(comb::binomial(5, 2), BigInt(10));
  CHECK_EQ(comb::binomial(10, 10), BigInt(1));
  CHECK_EQ(comb::binomial(3, 5), BigInt(0));   // a < b
  CHECK_EQ(comb::binomial(-2, 1), BigInt(0));  // negative upper index
  CHECK_EQ(comb::binomial(-1, 0), BigInt(0));
  CHECK_THROWS(comb::binomial(4, -1), std::invalid_argument);

  // Pascal's identity over a block of the triangle.
  for (long long a = 1; a <= 20; ++a)
    for (long long b = 1; b <= a; ++b)
      CHECK(comb::binomial(a, b) ==
            comb::binomial(a - 1, b - 1) + comb::binomial(a - 1, b));

  // Row sums.
  BigInt row = 0;
  for (long long b = 0; b <= 30; ++b) row += comb::binomial(30, b);
  CHECK_EQ(row, BigInt(1) << 30);
}

static void known_counts() {
  CHECK_EQ(comb::count_classes(ProblemSpec(2, {1, 1})), BigInt(1));
  CHECK_EQ(comb::count_classes(ProblemSpec(3, {1, 1, 1, 1})), BigInt(2));
  CHECK_EQ(comb::count_classes(ProblemSpec(3, {2, 1})), BigInt(1));
  CHECK_EQ(comb::count_classes(ProblemSpec(4, {2, 2, 1})), BigInt(2));
  CHECK_EQ(comb::count_classes(ProblemSpec(4, {1, 1, 1, 1, 1, 1})), BigInt(5));
  CHECK_EQ(comb::count_classes(ProblemSpec(5, {1, 1, 1, 1, 1, 1, 1, 1})),
           BigInt(14));

  // All critical points simple: the count is the d-th entry of the Catalan
  // sequence, here checked deep enough that the closed formulas must cancel
  // a lot of inclusion-exclusion mass to land right.
  for (int d = 2; d <= 12; ++d) {
    std::vector<int> ones(static_cast<std::size_t>(2 * d - 2), 1);
    CHECK_EQ(comb::count_classes(ProblemSpec(d, ones)), comb::catalan(d));
  }
  CHECK_EQ(comb::count_classes(
               ProblemSpec(12, std::vector<int>(22, 1))),
           BigInt(58786));
}

static void single_point_rule() {
  // n = 1 bypasses the inclusion-exclusion sum entirely: the lone finite
  // critical multiplicity must be exactly d - 1.
  for (int d = 2; d <= 9; ++d) {
    for (int m1 = 1; m1 <= d - 1; ++m1)
      CHECK_EQ(comb::count_classes(ProblemSpec(d, {m1})),
               BigInt(m1 == d - 1 ? 1 : 0));
  }
  CHECK_THROWS(comb::class_count_formula(ProblemSpec(4, {3})),
               std::invalid_argument);
}

static void admissibility_guard() {
  // The bare inclusion-exclusion sum is nonzero on some inadmissible specs
  // (d = 2, m = (2,2) sums to -1), so the guard must answer first.
  CHECK_EQ(comb::count_classes(ProblemSpec(2, {2, 2})), BigInt(0));
  CHECK_EQ(comb::class_count_formula(ProblemSpec(2, {2, 2})), BigInt(0));

  // Vanishing across the whole small grid: every inadmissible spec counts 0,
  // every boundary spec (M = d - 1) counts exactly 1.
  for (int d = 1; d <= 6; ++d) {
    for (int n = 2; n <= 5; ++n) {
      for_each_multiplicity(n, 6, [&](const std::vector<int>& m) {
        ProblemSpec spec(d, m);
        const BigInt c = comb::count_classes(spec);
        if (!spec.admissible()) {
          CHECK_EQ(c, BigInt(0));
        } else if (spec.total_multiplicity() == d - 1) {
          CHECK_EQ(c, BigInt(1));
        } else {
          CHECK(c >= 0);
        }
      });
    }
  }
}

static void permutation_symmetry() {
  const std::vector<std::vector<int>> orders = {
      {3, 1, 2, 1}, {1, 1, 2, 3}, {2, 3, 1, 1}, {1, 2, 1, 3}};
  const BigInt reference = comb::count_classes(ProblemSpec(5, orders[0]));
  for (const auto& m : orders)
    CHECK_EQ(comb::count_classes(ProblemSpec(5, m)), reference);
}

static void dimension_bookkeeping() {
  // Every singular vector of weight M - 2k generates an irreducible summand
  // of dimension M - 2k + 1, so the dimensions must add up to the tensor
  // product's: sum_k dim_k (M - 2k + 1) = prod (m_j + 1).
  for (int n = 2; n <= 6; ++n) {
    const int max_m = n <= 4 ? 5 : 3;
    for_each_multiplicity(n, max_m, [&](const std::vector<int>& m) {
      int M = 0;
      BigInt product = 1;
      for (int mj : m) {
        M += mj;
        product *= mj + 1;
      }
      BigInt total = 0;
      for (int k = 0; 2 * k <= M; ++k)
        total += comb::singular_dimension_formula(m, k) * (M - 2 * k + 1);
      CHECK_EQ(total, product);
    });
  }

  // Out-of-range k contributes nothing.
  CHECK_EQ(comb::singular_dimension_formula({2, 2}, -1), BigInt(0));
  CHECK_EQ(comb::singular_dimension_formula({2, 2}, 3), BigInt(0));
  CHECK_THROWS(comb::singular_dimension_formula({3}, 0),
               std::invalid_argument);
}

static void dimension_matches_weight_oracle() {
  // The closed form against the convolution-of-weight-strings oracle.
  for (int n = 2; n <= 5; ++n) {
    for_each_multiplicity(n, 4, [&](const std::vector<int>& m) {
      int M = 0;
      for (int mj : m) M += mj;
      for (int k = 0; 2 * k <= M; ++k)
        CHECK_EQ(comb::singular_dimension_formula(m, k),
                 sl2::singular_dimension(m, k));
    });
  }
}

static void route_identity() {
  // The two exact closed forms agree spec by spec (including the vanishing
  // locus) over the full small grid.
  for (int d = 1; d <= 7; ++d) {
    for (int n = 2; n <= 5; ++n) {
      for_each_multiplicity(n, 4, [&](const std::vector<int>& m) {
        ProblemSpec spec(d, m);
        CHECK_EQ(comb::class_count_formula(spec),
                 comb::singular_route_count(spec));
      });
    }
  }
}

static void catalan_sequence() {
  const std::vector<long long> expected = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int d = 1; d <= static_cast<int>(expected.size()); ++d)
    CHECK_EQ(comb::catalan(d),
             BigInt(expected[static_cast<std::size_t>(d - 1)]));

  // Convolution recurrence c_d = sum_{i=1}^{d-1} c_i c_{d-i}, c_1 = 1.
  std::vector<BigInt> rec = {BigInt(1)};
  for (int d = 2; d <= 24; ++d) {
    BigInt sum = 0;
    for (int i = 1; i <= d - 1; ++i)
      sum += rec[static_cast<std::size_t>(i - 1)] *
             rec[static_cast<std::size_t>(d - i - 1)];
    rec.push_back(sum);
  }
  for (int d = 1; d <= 24; ++d)
    CHECK_EQ(comb::catalan(d), rec[static_cast<std::size_t>(d - 1)]);

  CHECK_THROWS(comb::catalan(0), std::invalid_argument);
}

static void generating_function() {
  const std::vector<BigInt> coeffs = comb::genfun_coefficients(20);
  CHECK_EQ(coeffs.size(), std::size_t(20));

  // Odd coefficients vanish; even ones follow the shifted Catalan pattern.
  for (int j = 1; j <= 20; ++j) {
    const BigInt& mj = coeffs[static_cast<std::size_t>(j - 1)];
    if (j % 2 == 1) {
      CHECK_EQ(mj, BigInt(0));
    } else {
      CHECK_EQ(mj, comb::catalan(j / 2 + 1));
    }
  }
  CHECK_EQ(coeffs[1], BigInt(1));
  CHECK_EQ(coeffs[3], BigInt(2));
  CHECK_EQ(coeffs[5], BigInt(5));

  // Independent meaning: M_j is the multiplicity of the trivial module in
  // the j-th tensor power of the two-dimensional irreducible.
  for (int j = 1; j <= 12; ++j) {
    std::vector<int> ones(static_cast<std::size_t>(j), 1);
    const auto decomposition = sl2::tensor_decompose(ones);
    const auto it = decomposition.find(0);
    const BigInt trivial = it == decomposition.end() ? BigInt(0) : it->second;
    CHECK_EQ(coeffs[static_cast<std::size_t>(j - 1)], trivial);
  }

  CHECK_THROWS(comb::genfun_coefficients(0), std::invalid_argument);
}

static void spec_validation() {
  CHECK_THROWS(ProblemSpec(0, {1}), std::invalid_argument);
  CHECK_THROWS(ProblemSpec(3, {}), std::invalid_argument);
  CHECK_THROWS(ProblemSpec(3, {1, 0}), std::invalid_argument);

  const ProblemSpec spec(4, {2, 2, 1});
  CHECK_EQ(spec.n(), 3);
  CHECK_EQ(spec.total_multiplicity(), 5);
  CHECK_EQ(spec.plane_order(), 2);
  CHECK_EQ(spec.infinity_multiplicity(), 1);
  CHECK(spec.admissible());
  CHECK(!ProblemSpec(5, {5, 1}).admissible());   // one point too heavy
  CHECK(!ProblemSpec(3, {1}).admissible());      // M below d - 1
  CHECK(!ProblemSpec(2, {1, 1, 1}).admissible());  // M above 2d - 2
}

int main() {
  binomial_basics();
  known_counts();
  single_point_rule();
  admissibility_guard();
  permutation_symmetry();
  dimension_bookkeeping();
  dimension_matches_weight_oracle();
  route_identity();
  catalan_sequence();
  generating_function();
  spec_validation();
  return testsupport::harness().summary("combinatorics");
}
