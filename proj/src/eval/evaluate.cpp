#include "planeval/eval/evaluate.hpp"

#include <map>
#include <stdexcept>

#include "planeval/errors.hpp"
#include "planeval/eval/parametrize.hpp"
#include "planeval/hn/values.hpp"

namespace planeval {

namespace {

void check_input(const BivarPoly& f) {
  if (f.chart != Chart::Local)
    throw DomainError("evaluation reads the local chart; convert affine input first");
  if (f.is_zero()) throw DomainError("the value of the zero polynomial is undefined");
}

const TZSeries& memo_pow(std::map<long, TZSeries>& memo, const TZSeries& base, long e,
                         const std::optional<ValElem>& cap) {
  auto it = memo.find(e);
  if (it != memo.end()) return it->second;
  return memo.emplace(e, series_pow(base, e, cap)).first->second;
}

}  // namespace

ValElem value_substitution(const HNExpansion& hn, const BivarPoly& f,
                           const std::optional<ValElem>& cap_override) {
  check_input(f);
  ValClass cls = classify(hn);

  // Divisorial values of degree-d polynomials stay below d * sum(m) + 1, so
  // higher t-orders can be dropped throughout the expansion. The irrational
  // case has no z direction and stays small without a cap.
  std::optional<ValElem> cap;
  if (cls == ValClass::Divisorial) {
    ValueData vd = value_data(hn);
    ValElem msum(0);
    for (const ValElem& mi : vd.m) msum = msum + mi;
    cap = msum * Int(f.degree()) + ValElem(1);
    if (cap_override && *cap_override > *cap) cap = cap_override;
  }
  ParamEq pe = parametrize(hn, cap);

  std::map<long, TZSeries> upow, vpow;
  TZSeries total;
  for (const auto& [ij, c] : f.terms) {
    TZSeries mono = series_mul(memo_pow(upow, pe.u, ij.first, cap),
                               memo_pow(vpow, pe.v, ij.second, cap), cap);
    for (const auto& [key, coef] : mono) series_add_term(total, key, coef * c);
  }
  if (total.empty())
    throw std::logic_error("series image vanished below the truncation cap");
  return series_order(total);
}

namespace {

long min_total_degree(const BivarPoly& f) {
  long mu = -1;
  for (const auto& [ij, c] : f.terms)
    if (mu < 0 || ij.first + ij.second < mu) mu = ij.first + ij.second;
  return mu;
}

// y -> x(y + a), exactly divided by x^mu
BivarPoly blowup_step(const BivarPoly& f, const FieldElem& a, long mu) {
  BivarPoly out;
  out.field = f.field;
  out.chart = f.chart;
  std::map<long, std::vector<FieldElem>> shift_pow;  // (y + a)^j coefficients
  shift_pow[0] = {FieldElem::one(f.field)};
  long maxj = 0;
  for (const auto& [ij, c] : f.terms) maxj = std::max(maxj, ij.second);
  for (long j = 1; j <= maxj; ++j) {
    const std::vector<FieldElem>& prev = shift_pow[j - 1];
    std::vector<FieldElem> cur(static_cast<std::size_t>(j) + 1, FieldElem::zero(f.field));
    for (std::size_t r = 0; r < prev.size(); ++r) {
      cur[r + 1] = cur[r + 1] + prev[r];
      cur[r] = cur[r] + prev[r] * a;
    }
    shift_pow[j] = std::move(cur);
  }
  for (const auto& [ij, c] : f.terms) {
    const std::vector<FieldElem>& exp = shift_pow[ij.second];
    for (std::size_t r = 0; r < exp.size(); ++r)
      if (!exp[r].is_zero())
        out.add_term(ij.first + ij.second - mu, static_cast<long>(r), c * exp[r]);
  }
  return out;
}

BivarPoly swap_vars(const BivarPoly& f) {
  BivarPoly out;
  out.field = f.field;
  out.chart = f.chart;
  for (const auto& [ij, c] : f.terms) out.add_term(ij.second, ij.first, c);
  return out;
}

}  // namespace

Int value_proximity(const HNExpansion& hn, const BivarPoly& f) {
  check_input(f);
  if (classify(hn) != ValClass::Divisorial)
    throw DomainError("the multiplicity sum runs over a finite cluster: divisorial data only");
  std::vector<Int> m = integer_multiplicities(hn);

  BivarPoly cur = f;
  Int total = 0;
  std::size_t idx = 0;
  for (const HNRow& row : hn.rows) {
    for (long j = 1; j <= row.h; ++j, ++idx) {
      if (cur.is_zero())
        throw std::logic_error("strict transform vanished along the cluster walk");
      long mu = min_total_degree(cur);
      total += m[idx] * mu;
      if (idx + 1 == m.size()) return total;
      FieldElem a = row.kind == RowKind::Free && j >= row.k
                        ? row.coeffs[static_cast<std::size_t>(j - row.k)]
                        : FieldElem::zero(hn.field);
      cur = blowup_step(cur, a, mu);
    }
    cur = swap_vars(cur);
  }
  return total;
}

Alg value_normalized(const HNExpansion& hn, const BivarPoly& f) {
  ValElem val = value_substitution(hn, f);
  ValElem unit = value_data(hn).nu_u();
  return val.to_alg() / unit.to_alg();
}

}  // namespace planeval
