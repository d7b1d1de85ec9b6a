#include "planeval/eval/parametrize.hpp"

#include "planeval/errors.hpp"
#include "planeval/hn/values.hpp"

namespace planeval {

void series_add_term(TZSeries& s, const TZKey& key, const FieldElem& c) {
  auto it = s.find(key);
  if (it == s.end()) {
    if (!c.is_zero()) s.emplace(key, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) s.erase(it);
}

TZSeries series_mul(const TZSeries& a, const TZSeries& b, const std::optional<ValElem>& cap) {
  TZSeries out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      TZKey key{ka.t + kb.t, ka.z + kb.z};
      if (cap && key.t > *cap) continue;
      series_add_term(out, key, ca * cb);
    }
  return out;
}

TZSeries series_pow(const TZSeries& a, long e, const std::optional<ValElem>& cap) {
  TZSeries out;
  out.emplace(TZKey{ValElem(0), 0}, FieldElem::one(a.empty() ? FieldSpec::rationals() : a.begin()->second.spec()));
  for (long i = 0; i < e; ++i) out = series_mul(out, a, cap);
  return out;
}

ValElem series_order(const TZSeries& s) {
  if (s.empty()) throw DomainError("order of the zero series");
  return s.begin()->first.t;
}

namespace {

// w_{i-1} from the row relation, given the series of w_i and w_{i+1}
TZSeries row_series(const HNRow& row, const TZSeries& wi, const TZSeries& wnext,
                    const std::optional<ValElem>& cap) {
  TZSeries out = series_mul(series_pow(wi, row.h, cap), wnext, cap);
  if (row.kind == RowKind::Free) {
    TZSeries power = series_pow(wi, row.k, cap);
    for (long j = row.k; j <= row.h; ++j) {
      const FieldElem& a = row.coeffs[static_cast<std::size_t>(j - row.k)];
      if (!a.is_zero())
        for (const auto& [key, c] : power) series_add_term(out, key, c * a);
      if (j < row.h) power = series_mul(power, wi, cap);
    }
  }
  return out;
}

}  // namespace

ParamEq parametrize(const HNExpansion& hn, const std::optional<ValElem>& cap) {
  require_valid(hn);
  ValClass cls = classify(hn);
  if (cls == ValClass::Curve)
    throw DomainError("curve data has no parametric equations; use vdelta to place it in its "
                      "affine volume family");

  FieldElem one = FieldElem::one(hn.field);
  // W[i + 1] holds the series of w_i, so W[0] = v and W[1] = u
  std::vector<TZSeries> W;
  if (cls == ValClass::Divisorial) {
    std::size_t R = hn.rows.size();
    W.resize(R + 2);
    W[R + 1].emplace(TZKey{ValElem(0), 1}, one);  // w_R = z
    W[R].emplace(TZKey{ValElem(1), 0}, one);      // w_{R-1} = t
    for (std::size_t i = R; i-- > 0;)
      W[i] = row_series(hn.rows[i], W[i + 1], W[i + 2], cap);
  } else {
    QuadIrr gamma = tail_stream(hn).eval().quad();
    std::size_t lf = hn.last_free_row();
    W.resize(lf + 3);
    W[lf + 2].emplace(TZKey{ValElem(1), 0}, one);              // w_{lf+1} = t
    W[lf + 1].emplace(TZKey{ValElem(0, 1, gamma), 0}, one);    // w_lf = t^gamma
    for (std::size_t i = lf + 1; i-- > 0;)
      W[i] = row_series(hn.rows[i], W[i + 1], W[i + 2], cap);
  }
  return ParamEq{W[1], W[0]};
}

}  // namespace planeval
