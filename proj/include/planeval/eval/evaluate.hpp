#pragma once
// The value of a polynomial under a valuation, by two independent routes:
// series substitution (any divisorial or irrational data) and the
// multiplicity sum over the cluster (divisorial, integer output).

#include <optional>

#include "planeval/eval/bivar_poly.hpp"
#include "planeval/exact/quad_irr.hpp"
#include "planeval/exact/val_elem.hpp"
#include "planeval/hn/expansion.hpp"

namespace planeval {

// ord_t f(u(t,z), v(t,z)); a t-power counts when its z-polynomial is nonzero.
// The default truncation cap deg(f) * sum(m) + 1 already exceeds every
// attainable value; cap_override only widens it.
ValElem value_substitution(const HNExpansion& hn, const BivarPoly& f,
                           const std::optional<ValElem>& cap_override = std::nullopt);

// sum of m_i * mult_{p_i}(strict transform of f), walking the cluster
Int value_proximity(const HNExpansion& hn, const BivarPoly& f);

// value divided by the value of the maximal ideal
Alg value_normalized(const HNExpansion& hn, const BivarPoly& f);

}  // namespace planeval
