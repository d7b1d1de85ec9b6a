#pragma once
// Exact values nu(w_i) of the expansion variables and the multiplicity
// sequence of the cluster the expansion encodes. Divisorial values are
// integers; irrational ones live in Z + Z*gamma with gamma the limit of the
// quotient stream.

#include <optional>
#include <vector>

#include "planeval/exact/val_elem.hpp"
#include "planeval/hn/expansion.hpp"

namespace planeval {

struct ValueData {
  // w[i + 1] = nu(w_i) for i = -1 .. rows; w[0] = nu(v), w[1] = nu(u)
  std::vector<ValElem> w;
  // one entry per stored point, row values repeated h times
  std::vector<ValElem> m;
  // curve data for the zero branch v = 0: nu(v) is infinite
  bool v_infinite = false;
  // limit of the quotient stream (irrational class only)
  std::optional<QuadIrr> gamma;

  const ValElem& nu_u() const { return w[1]; }
  const ValElem& nu_v() const { return w[0]; }
};

ValueData value_data(const HNExpansion& hn);

// multiplicity sequence as plain integers; divisorial expansions only
std::vector<Int> integer_multiplicities(const HNExpansion& hn);

}  // namespace planeval
