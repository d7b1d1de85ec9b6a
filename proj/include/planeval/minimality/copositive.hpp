#pragma once
// The quadratic form controlling P-sufficiency of a curve configuration:
// g_ij = 9*sum_k m_ik m_jk - (sum_k m_ik)(sum_k m_jk) over the branches'
// multiplicity rows. The form must be (strictly) positive on the closed
// non-negative orthant, an exact copositivity decision.

#include <vector>

#include "planeval/exact/rational.hpp"

namespace planeval {

struct GMatrix {
  std::vector<std::vector<Int>> a;  // symmetric, one row per branch
  long size() const { return static_cast<long>(a.size()); }
};

// Rows are the multiplicities of each branch at the shared cluster's points,
// all of equal length; zeros mark points a branch misses.
GMatrix g_matrix(const std::vector<std::vector<Int>>& value_rows);

enum class CopositiveMode { Strict, Almost };

// Exact copositivity on the non-negative orthant: Strict demands x G x^t > 0
// for every nonzero x >= 0, Almost demands >= 0. Decided face by face: the
// form's minimum over the standard simplex is attained on some face interior
// where G_S x = lambda*1, so each face reduces to a linear feasibility
// question, settled by Fourier-Motzkin elimination over the rationals.
// Sizes beyond 12 (or a blown-up elimination) raise a capability error.
bool p_sufficiency(const GMatrix& g, CopositiveMode mode);

}  // namespace planeval
