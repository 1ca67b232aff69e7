#include "wronski/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace wronski::comb {

BigInt binomial(long long a, long long b) {
  if (b < 0) throw std::invalid_argument("binomial: lower index must be >= 0");
  if (a < b) return 0;
  // Multiplicative form; every intermediate division is exact.
  const long long bb = std::min(b, a - b);
  BigInt r = 1;
  for (long long i = 1; i <= bb; ++i) {
    r *= a - bb + i;
    r /= i;
  }
  return r;
}

namespace {

// Visits one (size, sum, ways) signature per distinct subset shape of m.
// Small n enumerates subsets directly; larger n groups repeated values and
// weights each shape by the number of subsets realizing it.
void for_each_subset_signature(
    const std::vector<int>& m,
    const std::function<void(long long q, long long s, const BigInt& ways)>& visit) {
  const int n = static_cast<int>(m.size());
  if (n <= 20) {
    const BigInt one = 1;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      long long q = 0, s = 0;
      for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) {
          ++q;
          s += m[j];
        }
      visit(q, s, one);
    }
    return;
  }
  std::map<int, int> groups;
  for (int mj : m) ++groups[mj];
  std::vector<std::pair<int, int>> gv(groups.begin(), groups.end());
  std::function<void(size_t, long long, long long, const BigInt&)> rec =
      [&](size_t gi, long long q, long long s, const BigInt& ways) {
        if (gi == gv.size()) {
          visit(q, s, ways);
          return;
        }
        const auto [value, count] = gv[gi];
        for (int take = 0; take <= count; ++take)
          rec(gi + 1, q + take, s + static_cast<long long>(take) * value,
              ways * binomial(count, take));
      };
  rec(0, 0, 0, 1);
}

}  // namespace

BigInt class_count_formula(const ProblemSpec& spec) {
  const int n = spec.n();
  if (n < 2)
    throw std::invalid_argument("class_count_formula: n >= 2 required (n = 1 has a direct answer)");
  // Inadmissible specs count zero by the degree argument (a degree-d map has
  // critical multiplicities <= d-1 summing to exactly 2d-2 over the sphere).
  // The alternating sum is NOT identically zero out there — e.g. d=2,
  // m=(2,2) sums to -1 — so the guard carries the vanishing, and negativity
  // below stays a genuine bug signal.
  if (!spec.admissible()) return 0;
  const long long d = spec.d;
  BigInt total = 0;
  for_each_subset_signature(spec.m, [&](long long q, long long s, const BigInt& ways) {
    if (q == 0) return;  // the empty subset's binomial is C(-d-1, n-2) = 0
    const BigInt term = ways * binomial(s + q - d - 1, n - 2);
    if ((n - q) & 1)
      total -= term;
    else
      total += term;
  });
  if (total < 0) throw std::logic_error("class_count_formula: negative total");
  return total;
}

BigInt count_classes(const ProblemSpec& spec) {
  if (spec.n() == 1) return spec.m[0] == spec.d - 1 ? 1 : 0;
  return class_count_formula(spec);
}

BigInt singular_dimension_formula(const std::vector<int>& m, long long k) {
  const int n = static_cast<int>(m.size());
  if (n < 2) throw std::invalid_argument("singular_dimension_formula: n >= 2 required");
  long long M = 0;
  for (int mj : m) {
    if (mj < 1) throw std::invalid_argument("singular_dimension_formula: multiplicities must be >= 1");
    M += mj;
  }
  if (k < 0 || 2 * k > M) return 0;  // weight M - 2k falls outside the weight lattice
  BigInt total = 0;
  for_each_subset_signature(m, [&](long long q, long long s, const BigInt& ways) {
    const BigInt term = ways * binomial(k + n - 2 - s - q, n - 2);
    if (q & 1)
      total -= term;
    else
      total += term;
  });
  if (total < 0) throw std::logic_error("singular_dimension_formula: negative total");
  return total;
}

BigInt singular_route_count(const ProblemSpec& spec) {
  const long long k = spec.plane_order();
  const long long M = spec.total_multiplicity();
  if (k < 0 || 2 * k > M) return 0;
  if (spec.n() == 1) return k == 0 ? 1 : 0;
  return singular_dimension_formula(spec.m, k);
}

BigInt catalan(int d) {
  if (d < 1) throw std::invalid_argument("catalan: d must be >= 1");
  BigInt r = binomial(2LL * d - 2, d - 1);
  if (r % d != 0) throw std::logic_error("catalan: division not exact");
  return r / d;
}

std::vector<BigInt> genfun_coefficients(int order) {
  if (order < 1) throw std::invalid_argument("genfun_coefficients: order must be >= 1");
  std::vector<BigInt> out(order);
  for (int k = 1; k <= order; ++k) out[k - 1] = (k % 2 == 0) ? catalan(k / 2 + 1) : 0;
  return out;
}

}  // namespace wronski::comb
