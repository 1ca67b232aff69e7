#pragma once
// Problem specification: degree-d rational maps with prescribed finite
// critical points of multiplicities m_1..m_n.

#include <numeric>
#include <stdexcept>
#include <vector>

namespace wronski {

// Degree d together with the finite critical multiplicities. Derived
// quantities used throughout the library:
//   M     = m_1 + ... + m_n       (total finite multiplicity)
//   k     = M + 1 - d             (order of the polynomial planes sought)
//   m_inf = 2d - 2 - M            (multiplicity forced at infinity)
struct ProblemSpec {
  int d;
  std::vector<int> m;

  ProblemSpec(int degree, std::vector<int> mult) : d(degree), m(std::move(mult)) {
    if (d < 1) throw std::invalid_argument("ProblemSpec: degree must be >= 1");
    if (m.empty()) throw std::invalid_argument("ProblemSpec: need at least one critical point");
    for (int mj : m)
      if (mj < 1) throw std::invalid_argument("ProblemSpec: multiplicities must be >= 1");
  }

  int n() const { return static_cast<int>(m.size()); }
  int total_multiplicity() const { return std::accumulate(m.begin(), m.end(), 0); }
  int plane_order() const { return total_multiplicity() + 1 - d; }
  int infinity_multiplicity() const { return 2 * d - 2 - total_multiplicity(); }

  // Specs outside these bounds admit no maps at all (each critical point of a
  // degree-d map has multiplicity at most d-1, and the total over the sphere
  // is exactly 2d-2, so d-1 <= M <= 2d-2 once infinity absorbs the rest).
  bool admissible() const {
    const int M = total_multiplicity();
    if (M < d - 1 || M > 2 * d - 2) return false;
    for (int mj : m)
      if (mj > d - 1) return false;
    return true;
  }
};

}  // namespace wronski
