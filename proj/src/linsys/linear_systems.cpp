#include "planeval/linsys/linear_systems.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "planeval/errors.hpp"
#include "planeval/eval/parametrize.hpp"
#include "planeval/hn/values.hpp"
#include "planeval/invariants/invariants.hpp"

namespace planeval {

namespace {

// rational rows are kept integral with unit content, so every elimination
// step below is division-exact; prime-field rows need no scaling
void normalize_row(TZSeries& row) {
  if (row.empty()) return;
  const FieldSpec spec = row.begin()->second.spec();
  if (!spec.rational) return;
  Int den = 1, num = 0;
  for (const auto& [key, c] : row) {
    const Rat& q = c.rat();
    den = den / gcd_int(den, q.den()) * q.den();
    num = gcd_int(num, q.num());
  }
  Rat scale(den, num);
  if (scale.sign() < 0) scale = -scale;
  if (scale == Rat(1)) return;
  for (auto& [key, c] : row) c = FieldElem(spec, c.rat() * scale);
}

class Echelon {
 public:
  // reduce against the pivots found so far, then register the new pivot
  void insert(TZSeries row) {
    normalize_row(row);
    while (!row.empty()) {
      auto it = basis_.find(row.begin()->first);
      if (it == basis_.end()) break;
      const TZSeries& piv = it->second;
      FieldElem a = row.begin()->second;
      FieldElem b = piv.begin()->second;
      TZSeries next;
      for (const auto& [key, c] : row) series_add_term(next, key, c * b);
      for (const auto& [key, c] : piv) series_add_term(next, key, -(c * a));
      row = std::move(next);
      normalize_row(row);
    }
    if (row.empty())
      throw std::logic_error("independent monomial images collapsed during elimination");
    TZKey lead = row.begin()->first;
    basis_.emplace(lead, std::move(row));
  }

  // pivot t-orders, ascending (the basis map is ordered by (t, z) already)
  std::vector<ValElem> orders() const {
    std::vector<ValElem> out;
    out.reserve(basis_.size());
    for (const auto& [key, row] : basis_) out.push_back(key.t);
    return out;
  }

 private:
  std::map<TZKey, TZSeries, TZKeyLess> basis_;
};

}  // namespace

VanishingSequence vanishing_sequence(const HNExpansion& hn, long d) {
  if (d < 1) throw DomainError("vanishing sequence needs degree at least 1");
  std::optional<ValElem> cap;
  if (classify(hn) == ValClass::Divisorial) {
    Int msum = 0;
    for (const ValElem& mi : value_data(hn).m) msum += mi.as_int();
    cap = ValElem(Int(d) * msum + 1);
  }
  ParamEq pe = parametrize(hn, cap);

  const FieldSpec field = pe.u.begin()->second.spec();
  TZSeries one{{TZKey{ValElem(0), 0}, FieldElem::one(field)}};
  std::vector<TZSeries> up{one}, vp{one};
  for (long e = 1; e <= d; ++e) {
    up.push_back(series_mul(up.back(), pe.u, cap));
    vp.push_back(series_mul(vp.back(), pe.v, cap));
  }

  Echelon ech;
  for (long i = 0; i <= d; ++i)
    for (long j = 0; i + j <= d; ++j)
      ech.insert(series_mul(up[static_cast<std::size_t>(i)], vp[static_cast<std::size_t>(j)], cap));

  VanishingSequence out;
  out.d = d;
  out.values = ech.orders();
  if (out.values.size() != static_cast<std::size_t>((d + 1) * (d + 2) / 2))
    throw std::logic_error("vanishing sequence has the wrong length");
  return out;
}

ValElem mu_d(const HNExpansion& hn, long d) { return vanishing_sequence(hn, d).values.back(); }

MuHatReport mu_hat_report(const HNExpansion& hn, long d_max) {
  if (d_max < 1) throw DomainError("mu_hat report needs d_max at least 1");
  MuHatReport rep;
  for (long d = 1; d <= d_max; ++d) {
    Alg ratio = mu_d(hn, d).to_alg() / Alg(Rat(d));
    if (d == 1 || ratio > rep.lower) {
      rep.lower = ratio;
      rep.lower_d = d;
    }
  }

  if (hn.is_m_adic()) {
    rep.upper = Alg(Rat(1));
    rep.exact = Alg(Rat(1));
    return rep;
  }

  Invariants inv = invariants(hn);
  ValueData vd = value_data(hn);
  Alg b0 = inv.maxcontact[0].to_alg();
  Alg b1 = inv.maxcontact[1].to_alg();
  Alg blast = inv.maxcontact.back().to_alg();
  bool divisorial = classify(hn) == ValClass::Divisorial;

  if (divisorial && b1 * b1 >= blast) {
    rep.upper = b1;
    // smallest integer a with a^2 >= blast / b0^2, accepted when a <= b1/b0
    Alg x = blast / (b0 * b0);
    Int a = isqrt(x.floor());
    if (a < 1) a = 1;
    while (Alg(Rat(a)) * Alg(Rat(a)) < x) ++a;
    if (Alg(Rat(a)) <= b1 / b0) rep.upper = b0 * Alg(Rat(a));
  }

  Alg nu_u = vd.nu_u().to_alg(), nu_v = vd.nu_v().to_alg();
  if (divisorial && nu_v > nu_u && nu_v * nu_v >= blast) {
    rep.exact = nu_v;
  } else if (rep.upper && rep.lower == *rep.upper) {
    rep.exact = rep.lower;
    rep.squeezed = true;
  }
  return rep;
}

Int expected_dim(long d, const std::vector<Int>& r) {
  if (d < 0) throw DomainError("negative degree");
  Int out = Int(d + 1) * Int(d + 2) / 2;
  for (const Int& ri : r) {
    if (ri < 0) throw DomainError("negative multiplicity in expected dimension");
    out -= ri * (ri + 1) / 2;
  }
  return out;
}

long h0_unibranch(const HNExpansion& hn, long d, const ValElem& alpha) {
  VanishingSequence vs = vanishing_sequence(hn, d);
  long count = 0;
  for (const ValElem& v : vs.values)
    if (v >= alpha) ++count;
  return count;
}

}  // namespace planeval
