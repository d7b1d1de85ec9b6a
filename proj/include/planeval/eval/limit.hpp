#pragma once
// Normalized values of an irrational valuation as limits over its divisorial
// truncations, one blow-up per step.

#include "planeval/eval/bivar_poly.hpp"
#include "planeval/exact/rational.hpp"
#include "planeval/hn/expansion.hpp"

namespace planeval {

struct LimitOptions {
  long window = 4;                        // consecutive values examined
  Rat tolerance = Rat(Int(1), Int(1000000000));  // spread accepted as a bracket
  long max_steps = 400;
};

struct LimitResult {
  Rat lo;
  Rat hi;
  long steps = 0;  // truncation depth reached
};

// divisorial data whose stream is cut after extra_points blow-ups
HNExpansion divisorial_truncation(const HNExpansion& hn, long extra_points);

LimitResult value_normalized_by_limit(const HNExpansion& hn, const BivarPoly& f,
                                      const LimitOptions& opt = {});

}  // namespace planeval
