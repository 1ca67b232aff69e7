#pragma once
// Cohomology of the Grassmannian of 2-planes in C^(d+1): Schubert classes
// indexed by partitions in a 2 x (d-1) box, Pieri products by special
// classes, and the top intersection number that bounds the class count.

#include <map>
#include <utility>

#include "wronski/numeric.hpp"
#include "wronski/problem.hpp"

namespace wronski::schubert {

// Row pair (a1, a2) with 0 <= a2 <= a1 <= d-1, indexing sigma_{a1,a2} in the
// Grassmannian attached to degree-d problems.
struct BoxPartition {
  int a1;
  int a2;
  int box_d;

  BoxPartition(int a1, int a2, int box_d);
  int codim() const { return a1 + a2; }
};

// Z-linear combination of Schubert classes of one fixed Grassmannian. Zero
// coefficients are never stored, so is_zero() means the zero element.
class CohomologyElement {
 public:
  explicit CohomologyElement(int box_d);
  static CohomologyElement identity(int box_d);  // sigma_{0,0}

  int box_d() const { return box_d_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }
  BigInt coefficient(int a1, int a2) const;  // 0 when the term is absent
  void add_term(const BoxPartition& p, const BigInt& coeff);

 private:
  int box_d_;
  std::map<std::pair<int, int>, BigInt> terms_;
};

// sigma_q = sigma_{q,0} as a one-term element; q must fit the box.
CohomologyElement special_class(int q, int box_d);

// Pieri rule: multiplying sigma_{a1,a2} by sigma_q adds sigma_{c1,c2} for
// every c1 + c2 = a1 + a2 + q with c1 >= a1 >= c2 >= a2 and c1 <= d-1.
// Terms pushed past the top grading vanish, so the result can be zero.
CohomologyElement pieri_multiply(const CohomologyElement& x, int q);

// Coefficient of the top class sigma_{d-1,d-1} in
// sigma_{m_1} ... sigma_{m_n} sigma_{m_inf}. Returns 0 when some factor does
// not exist in the box (exactly the specs whose count vanishes). The total
// codimension is then 2d-2, so any non-top term in the product is an internal
// error.
BigInt intersection_number(const ProblemSpec& spec);

}  // namespace wronski::schubert
