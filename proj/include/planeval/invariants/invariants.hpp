#pragma once
// Numerical invariants attached to an expansion: multiplicity sequence,
// characteristic exponents, characteristic sequence, maximal contact values
// with their divisibility ladder (e_j, n_j), and the inverse of the
// normalized volume.

#include <string>
#include <utility>
#include <vector>

#include "planeval/exact/val_elem.hpp"
#include "planeval/hn/expansion.hpp"
#include "planeval/hn/values.hpp"

namespace planeval {

struct Invariants {
  std::vector<ValElem> m;           // one entry per stored point
  std::vector<Alg> puiseux;         // 1, b'_1, ..., b'_{g+1}
  std::vector<ValElem> charseq;     // b_0, ..., b_{g+1}
  std::vector<ValElem> maxcontact;  // bbar_0, ..., plus the satellite-arrow entry when it exists
  std::vector<ValElem> eseq;        // e_0, ..., e_g
  std::vector<Int> nseq;            // n_0, ..., matching maxcontact's length minus one
  Alg vol_inv;                      // 1 / vol(nu), exact
  Alg vol_inv_normalized;           // 1 / vol^N(nu) = vol_inv / bbar_0^2
  long g = 0;                       // -1 for the maximal ideal
};

// Divisorial and irrational classes only; truncated curves are rejected.
Invariants invariants(const HNExpansion& hn);

// Maximal contact values bbar_0..bbar_g and e_0..e_g of a truncated curve
// (the recurrence never needs the quotient of the infinite row). Used by the
// affine volume family.
struct CurveContact {
  std::vector<Int> beta;
  std::vector<Int> e;
  long g = 0;
};
CurveContact curve_contact_data(const HNExpansion& hn);

// Recurrence cross-check: the characteristic exponents match the maximal
// contact ladder via b'_{j+1} = (bbar_{j+1} - n_j bbar_j)/e_j + 1.
bool eq_delta_check(const Invariants& inv);

// Value semigroup generators of a divisorial valuation: the distinct maximal
// contact values, appended entry included.
std::vector<Int> semigroup_generators(const HNExpansion& hn);

// Ordered "key: v1, v2, v3" material for reports.
std::vector<std::pair<std::string, std::string>> report_pairs(const Invariants& inv);

}  // namespace planeval
