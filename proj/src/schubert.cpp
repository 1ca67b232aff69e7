#include "wronski/schubert.hpp"

#include <stdexcept>
#include <string>

namespace wronski::schubert {

BoxPartition::BoxPartition(int a1, int a2, int box_d)
    : a1(a1), a2(a2), box_d(box_d) {
  if (box_d < 1) {
    throw std::invalid_argument("BoxPartition: box_d must be >= 1");
  }
  if (!(0 <= a2 && a2 <= a1 && a1 <= box_d - 1)) {
    throw std::invalid_argument(
        "BoxPartition: need 0 <= a2 <= a1 <= d-1, got (" +
        std::to_string(a1) + ", " + std::to_string(a2) + ") with d = " +
        std::to_string(box_d));
  }
}

CohomologyElement::CohomologyElement(int box_d) : box_d_(box_d) {
  if (box_d < 1) {
    throw std::invalid_argument("CohomologyElement: box_d must be >= 1");
  }
}

CohomologyElement CohomologyElement::identity(int box_d) {
  CohomologyElement e(box_d);
  e.add_term(BoxPartition(0, 0, box_d), 1);
  return e;
}

BigInt CohomologyElement::coefficient(int a1, int a2) const {
  auto it = terms_.find({a1, a2});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void CohomologyElement::add_term(const BoxPartition& p, const BigInt& coeff) {
  if (p.box_d != box_d_) {
    throw std::invalid_argument("add_term: partition from a different box");
  }
  auto key = std::make_pair(p.a1, p.a2);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

CohomologyElement special_class(int q, int box_d) {
  if (q < 0 || q > box_d - 1) {
    throw std::invalid_argument("special_class: q = " + std::to_string(q) +
                                " outside [0, " + std::to_string(box_d - 1) +
                                "]");
  }
  CohomologyElement e(box_d);
  e.add_term(BoxPartition(q, 0, box_d), 1);
  return e;
}

CohomologyElement pieri_multiply(const CohomologyElement& x, int q) {
  int d = x.box_d();
  if (q < 0 || q > d - 1) {
    throw std::invalid_argument("pieri_multiply: q outside [0, d-1]");
  }
  CohomologyElement out(d);
  for (const auto& [key, coeff] : x.terms()) {
    auto [a1, a2] = key;
    // c2 ranges over [a2, a1]; c1 is forced by the codimension and must stay
    // weakly above a1 and inside the box.
    for (int c2 = a2; c2 <= a1; ++c2) {
      int c1 = a1 + a2 + q - c2;
      if (c1 < a1 || c1 > d - 1) continue;
      out.add_term(BoxPartition(c1, c2, d), coeff);
    }
  }
  return out;
}

BigInt intersection_number(const ProblemSpec& spec) {
  int d = spec.d;
  if (d == 1) {
    // The box is empty: the Grassmannian is a point and every admissible
    // factor is the identity. ProblemSpec guarantees m_j >= 1, so no factor
    // fits and the count is 0. (Unreachable via admissible specs: d = 1
    // forces M = 0.)
    return 0;
  }
  int m_inf = spec.infinity_multiplicity();
  if (m_inf < 0 || m_inf > d - 1) return 0;
  for (int mj : spec.m) {
    if (mj > d - 1) return 0;
  }

  CohomologyElement acc = CohomologyElement::identity(d);
  for (int mj : spec.m) acc = pieri_multiply(acc, mj);
  acc = pieri_multiply(acc, m_inf);

  BigInt top = 0;
  for (const auto& [key, coeff] : acc.terms()) {
    if (key.first == d - 1 && key.second == d - 1) {
      top = coeff;
    } else {
      throw std::logic_error(
          "intersection_number: product of total codimension 2d-2 contains a "
          "non-top term");
    }
  }
  return top;
}

}  // namespace wronski::schubert
