#pragma once
// Vanishing sequences of the degree-bounded polynomial spaces along a
// valuation, the growth invariant mu_d with its per-degree report, and
// dimension counts for value-constrained subspaces.

#include <optional>
#include <vector>

#include "planeval/exact/quad_irr.hpp"
#include "planeval/exact/val_elem.hpp"
#include "planeval/hn/expansion.hpp"

namespace planeval {

struct VanishingSequence {
  long d = 0;
  std::vector<ValElem> values;  // ascending, (d+1)(d+2)/2 entries
};

// Orders of vanishing attained on {f : deg f <= d}: the monomial images under
// the parametric equations are row-reduced exactly, ordering monomials t^a z^b
// by (a, b); each pivot contributes its t-order. The truncation cap
// d * sum(m) + 1 exceeds every value attainable in degree d, so no pivot is
// lost (irrational images are finite and need no cap).
VanishingSequence vanishing_sequence(const HNExpansion& hn, long d);

// Largest value of a nonzero polynomial of degree <= d.
ValElem mu_d(const HNExpansion& hn, long d);

struct MuHatReport {
  Alg lower = Alg(Rat(0));    // max over 1 <= d <= d_max of mu_d / d
  long lower_d = 1;           // smallest d attaining the max
  std::optional<Alg> upper;   // bound valid for very general members of the graph's family
  std::optional<Alg> exact;
  bool squeezed = false;      // exact came from lower == upper and inherits upper's caveat
};

// lower is always certified for the given expansion; upper exists for
// divisorial input with bbar_1^2 >= bbar_{g+1} (refined to bbar_0 * min{a >= 1
// integer : a <= bbar_1/bbar_0, a^2 bbar_0^2 >= bbar_{g+1}} when that set is
// nonempty); exact is nu(v) when the valuation is non-positive at infinity,
// 1 for the m-adic valuation, and lower when the two bounds meet.
MuHatReport mu_hat_report(const HNExpansion& hn, long d_max);

// (d+1)(d+2)/2 - sum r_i (r_i + 1) / 2; may be negative
Int expected_dim(long d, const std::vector<Int>& r);

// dim {f : deg f <= d, nu(f) >= alpha} = number of vanishing-sequence entries >= alpha
long h0_unibranch(const HNExpansion& hn, long d, const ValElem& alpha);

}  // namespace planeval
