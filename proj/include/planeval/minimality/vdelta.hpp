#pragma once
// The one-parameter affine volume family anchored at a curve branch delta:
// for t in [B, infinity) the member valuation nu_t shares delta's rows up to
// the last free one and has [vol^N]^{-1} = t exactly, by the affine law
// t = A*(beta'_last - 1) + B with A, B read off delta's dual graph.

#include <string>
#include <vector>

#include "planeval/eval/bivar_poly.hpp"
#include "planeval/exact/quad_irr.hpp"
#include "planeval/exact/rational.hpp"
#include "planeval/hn/expansion.hpp"

namespace planeval {

struct VDeltaParams {
  HNExpansion delta;       // curve anchor
  Rat A{1};                // 1 / bbar_0^2
  Rat B{1};                // e_{g-1} * bbar_g / bbar_0^2, or 1 when g = 0
  Rat interval_lo{1};      // left end of the parameter interval (= B)
};

VDeltaParams vdelta_params(const HNExpansion& delta);

// Member of the family with [vol^N]^{-1} = t: solves for the last exponent
// beta' = (t - B)/A + 1, expands it as a continued fraction and grafts the
// quotients onto delta's shared prefix. Rational t gives a divisorial
// member, quadratic t an irrational one.
HNExpansion vdelta(const VDeltaParams& params, const Alg& t);

struct LipschitzRow {
  Rat t{0};
  Alg value{Rat(0)};  // nu_t^N(f)
};
struct LipschitzReport {
  Alg max_ratio{Rat(0)};  // max |delta nu^N| / |delta t| over all pairs
  std::vector<LipschitzRow> table;
};

// Samples t -> nu_t^N(f) across the family and reports the largest exact
// difference quotient; the samples must be pairwise distinct and >= B.
LipschitzReport lipschitz_probe(const VDeltaParams& params, const BivarPoly& f, const std::vector<Rat>& samples);

struct AsymptoticRow {
  Rat t{0};
  Int n{0};           // ceil(sqrt(t))
  Alg ratio{Rat(0)};  // n / sqrt(t), exact
  std::string decimal;
};

// For each t >= 2: builds the quasi-monomial valuation with exponent t,
// places the line at infinity through the first ceil(sqrt(t)) free points,
// checks the witness is non-positive at infinity, and reports the gap ratio
// mu_hat^N / sqrt([vol^N]^{-1}) = ceil(sqrt(t))/sqrt(t), which tends to 1.
std::vector<AsymptoticRow> asymptotic_experiment(const std::vector<Rat>& t_values);

}  // namespace planeval
