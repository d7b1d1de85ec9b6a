#include "planeval/eval/limit.hpp"

#include <algorithm>
#include <deque>

#include "planeval/errors.hpp"
#include "planeval/eval/evaluate.hpp"
#include "planeval/hn/values.hpp"

namespace planeval {

HNExpansion divisorial_truncation(const HNExpansion& hn, long extra_points) {
  if (classify(hn) != ValClass::Irrational)
    throw DomainError("truncations are cut from irrational data");
  if (extra_points < 1) throw DomainError("a truncation needs at least one extra blow-up");

  ContFrac stream = tail_stream(hn);
  std::vector<Int> quots(stream.preperiod());
  while (true) {
    long total = 0;
    bool enough = false;
    for (const Int& q : quots) {
      if (!q.fits_slong_p()) throw CapabilityError("stream quotient exceeds the supported range");
      total += q.get_si();
      if (total >= extra_points) {
        enough = true;
        break;
      }
    }
    if (enough) break;
    for (const Int& q : stream.period()) quots.push_back(q);
  }

  std::vector<Int> powers;
  long remaining = extra_points;
  for (const Int& q : quots) {
    if (remaining <= 0) break;
    long step = std::min(remaining, q.get_si());
    powers.push_back(Int(step));
    remaining -= step;
  }

  HNExpansion out;
  out.field = hn.field;
  out.rows.assign(hn.rows.begin(), hn.rows.begin() + static_cast<long>(hn.last_free_row()) + 1);
  out.terminal = Terminal{ValClass::Divisorial, std::nullopt};
  // a trailing unit power is the same blow-up as widening its predecessor
  if (powers.back() == 1) {
    powers.pop_back();
    if (powers.empty()) {
      HNRow& last = out.rows.back();
      last.h += 1;
      last.coeffs.push_back(FieldElem::zero(out.field));
    } else {
      powers.back() += 1;
    }
  }
  for (const Int& q : powers) out.rows.push_back(power_row(q.get_si()));
  require_valid(out);
  return out;
}

LimitResult value_normalized_by_limit(const HNExpansion& hn, const BivarPoly& f,
                                      const LimitOptions& opt) {
  if (classify(hn) != ValClass::Irrational)
    throw DomainError("the limit mode reads irrational data");
  if (opt.window < 2) throw DomainError("the stabilization window needs at least two values");

  std::deque<Rat> recent;
  for (long n = 1; n <= opt.max_steps; ++n) {
    HNExpansion cut = divisorial_truncation(hn, n);
    Int val = value_substitution(cut, f).as_int();
    Int unit = value_data(cut).nu_u().as_int();
    recent.push_back(Rat(val, unit));
    if (static_cast<long>(recent.size()) > opt.window) recent.pop_front();
    if (static_cast<long>(recent.size()) == opt.window) {
      Rat lo = recent.front(), hi = recent.front();
      for (const Rat& r : recent) {
        if (r < lo) lo = r;
        if (hi < r) hi = r;
      }
      if (hi - lo <= opt.tolerance) return LimitResult{lo, hi, n};
    }
  }
  Rat lo = recent.front(), hi = recent.front();
  for (const Rat& r : recent) {
    if (r < lo) lo = r;
    if (hi < r) hi = r;
  }
  return LimitResult{lo, hi, opt.max_steps};
}

}  // namespace planeval
