#include "wronski/sl2.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace wronski::sl2 {

namespace {

void validate(const std::vector<int>& m) {
  for (int mj : m)
    if (mj < 0) throw std::invalid_argument("sl2: highest weights must be >= 0");
}

}  // namespace

WeightMultiplicity weight_multiplicities(const std::vector<int>& m) {
  validate(m);
  WeightMultiplicity acc{{0, 1}};
  for (int mj : m) {
    WeightMultiplicity next;
    for (const auto& [w, c] : acc)
      for (int x = -mj; x <= mj; x += 2) next[w + x] += c;
    acc = std::move(next);
  }
  return acc;
}

BigInt multiplicity(const WeightMultiplicity& w, int weight) {
  const auto it = w.find(weight);
  return it == w.end() ? BigInt(0) : it->second;
}

BigInt singular_dimension(const std::vector<int>& m, int k) {
  const auto w = weight_multiplicities(m);
  const int M = std::accumulate(m.begin(), m.end(), 0);
  if (k < 0 || 2 * k > M)
    throw std::invalid_argument("singular_dimension: weight M - 2k outside [-M, M]");
  const BigInt diff = multiplicity(w, M - 2 * k) - multiplicity(w, M - 2 * k + 2);
  if (diff < 0) throw std::logic_error("singular_dimension: negative multiplicity difference");
  return diff;
}

std::map<int, BigInt> tensor_decompose(const std::vector<int>& m) {
  validate(m);
  std::map<int, BigInt> acc{{0, 1}};
  for (int mj : m) {
    std::map<int, BigInt> next;
    for (const auto& [a, c] : acc)
      for (int w = std::abs(a - mj); w <= a + mj; w += 2) next[w] += c;
    acc = std::move(next);
  }
  return acc;
}

}  // namespace wronski::sl2
