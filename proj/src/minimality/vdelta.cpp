#include "planeval/minimality/vdelta.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "planeval/errors.hpp"
#include "planeval/eval/evaluate.hpp"
#include "planeval/exact/cont_frac.hpp"
#include "planeval/invariants/invariants.hpp"
#include "planeval/minimality/minimality.hpp"

namespace planeval {

VDeltaParams vdelta_params(const HNExpansion& delta) {
  if (classify(delta) != ValClass::Curve)
    throw DomainError("the affine volume family is anchored at a curve branch");
  CurveContact cc = curve_contact_data(delta);
  Int b0 = cc.beta.front();
  VDeltaParams p;
  p.delta = delta;
  p.A = Rat(Int(1), Int(b0 * b0));
  p.B = cc.g == 0 ? Rat(1) : Rat(Int(cc.e[static_cast<std::size_t>(cc.g - 1)] * cc.beta[static_cast<std::size_t>(cc.g)]), Int(b0 * b0));
  p.interval_lo = p.B;
  return p;
}

HNExpansion vdelta(const VDeltaParams& params, const Alg& t) {
  if (t < Alg(params.B)) throw DomainError("parameter below the family interval");
  const HNExpansion& d = params.delta;
  if (classify(d) != ValClass::Curve)
    throw DomainError("the affine volume family is anchored at a curve branch");
  CurveContact cc = curve_contact_data(d);
  std::size_t lf = d.rows.size() - 1;  // curve rows end with the infinite free row
  HNExpansion out;
  out.field = d.field;
  out.terminal.kind = ValClass::Divisorial;
  Alg beta = (t - Alg(params.B)) / Alg(params.A) + Alg(Rat(1));
  if (beta == Alg(Rat(1))) {
    if (cc.g == 0) {
      out.rows = {free_row(1, 1, {FieldElem::zero(d.field)})};
    } else {
      out.rows.assign(d.rows.begin(), d.rows.begin() + static_cast<long>(lf));
      out.rows.push_back(power_row(d.rows[lf].k));
    }
    require_valid(out);
    return out;
  }
  ContFrac cf = beta.is_rational() ? cf_of_rat(beta.rat()) : cf_of_quad(beta.quad());
  std::vector<Int> pre = cf.preperiod();
  std::vector<Int> per = cf.period();
  Int first(0);
  if (!pre.empty()) {
    first = pre.front();
    pre.erase(pre.begin());
  } else {
    first = per.front();
    std::rotate(per.begin(), per.begin() + 1, per.end());
  }
  long c0 = first.get_si();
  long k = cc.g == 0 ? 1 : d.rows[lf].k;
  std::vector<FieldElem> coeffs(static_cast<std::size_t>(c0), FieldElem::zero(d.field));
  for (std::size_t i = 0; i < coeffs.size() && i < d.rows[lf].coeffs.size(); ++i)
    coeffs[i] = d.rows[lf].coeffs[i];
  out.rows.assign(d.rows.begin(), d.rows.begin() + static_cast<long>(lf));
  out.rows.push_back(free_row(k + c0 - 1, k, std::move(coeffs)));
  if (per.empty()) {
    for (const Int& q : pre) out.rows.push_back(power_row(q.get_si()));
  } else {
    out.terminal.kind = ValClass::Irrational;
    out.terminal.tail = ContFrac(std::move(pre), std::move(per));
  }
  require_valid(out);
  return out;
}

LipschitzReport lipschitz_probe(const VDeltaParams& params, const BivarPoly& f, const std::vector<Rat>& samples) {
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i] == samples[j]) throw DomainError("samples must be pairwise distinct");
  LipschitzReport rep;
  for (const Rat& t : samples) {
    HNExpansion hn = vdelta(params, Alg(t));
    rep.table.push_back({t, value_normalized(hn, f)});
  }
  for (std::size_t i = 0; i < rep.table.size(); ++i)
    for (std::size_t j = i + 1; j < rep.table.size(); ++j) {
      Alg dv = rep.table[i].value - rep.table[j].value;
      if (dv.sign() < 0) dv = -dv;
      Rat dt = rep.table[i].t - rep.table[j].t;
      if (dt.sign() < 0) dt = -dt;
      Alg ratio = dv / Alg(dt);
      if (ratio > rep.max_ratio) rep.max_ratio = ratio;
    }
  return rep;
}

std::vector<AsymptoticRow> asymptotic_experiment(const std::vector<Rat>& t_values) {
  std::vector<AsymptoticRow> out;
  out.reserve(t_values.size());
  for (const Rat& t : t_values) {
    if (t < Rat(2)) throw DomainError("the asymptotic family needs t >= 2");
    Int n = isqrt(t.floor());
    while (Rat(Int(n * n)) < t) ++n;
    HNExpansion hn = structure_from_exponents({Alg(Rat(1)), Alg(t)}, FieldSpec::rationals());
    if (hn.rows[0].h < n.get_si())
      throw std::logic_error("initial free segment shorter than ceil(sqrt(t))");
    hn.rows[0].coeffs[static_cast<std::size_t>(n.get_si() - 1)] = FieldElem::one(hn.field);
    std::optional<NPIWitness> w = npi_test(hn);
    if (!w) throw std::logic_error("quasi-monomial witness fails the non-positivity test");
    if (!(mu_hat_npi(*w) == ValElem(Int(n * t.den()))))
      throw std::logic_error("witness value disagrees with ceil(sqrt(t)) times the denominator");
    AsymptoticRow row;
    row.t = t;
    row.n = n;
    row.ratio = Alg(Rat(n)) / sqrt_rat(t);
    row.decimal = decimal_string(row.ratio, 12);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace planeval
