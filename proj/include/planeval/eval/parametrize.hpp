#pragma once
// Parametric equations of a valuation: u and v as finitely supported series
// in t and a unit direction z, obtained by backward substitution through the
// rows. Divisorial data gives integer t- and z-exponents; irrational data
// gives t-exponents p + q*gamma and no z.

#include <map>
#include <optional>

#include "planeval/eval/bivar_poly.hpp"
#include "planeval/exact/val_elem.hpp"
#include "planeval/hn/expansion.hpp"

namespace planeval {

struct TZKey {
  ValElem t;
  long z = 0;

  bool operator==(const TZKey& o) const { return z == o.z && t == o.t; }
};

struct TZKeyLess {
  bool operator()(const TZKey& a, const TZKey& b) const {
    int c = valelem_cmp(a.t, b.t);
    if (c != 0) return c < 0;
    return a.z < b.z;
  }
};

using TZSeries = std::map<TZKey, FieldElem, TZKeyLess>;

struct ParamEq {
  TZSeries u;
  TZSeries v;
};

ParamEq parametrize(const HNExpansion& hn, const std::optional<ValElem>& cap = std::nullopt);

// series helpers; cap drops monomials of t-order above it
void series_add_term(TZSeries& s, const TZKey& key, const FieldElem& c);
TZSeries series_mul(const TZSeries& a, const TZSeries& b,
                    const std::optional<ValElem>& cap = std::nullopt);
TZSeries series_pow(const TZSeries& a, long e, const std::optional<ValElem>& cap = std::nullopt);

// smallest t-exponent carrying a nonzero coefficient
ValElem series_order(const TZSeries& s);

}  // namespace planeval
