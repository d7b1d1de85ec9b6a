#include "planeval/hn/values.hpp"

namespace planeval {

namespace {

// nu(w_{i-1}) from row i and the values below it
ValElem row_value(const HNExpansion& hn, std::size_t i, const ValElem& vi, const ValElem& vnext) {
  const HNRow& r = hn.rows[i];
  ValElem best = vi * Int(r.h) + vnext;
  if (r.kind == RowKind::Free)
    for (long j = r.k; j <= r.h; ++j)
      if (!hn.coeff(i, j).is_zero()) {
        ValElem cand = vi * Int(j);
        if (cand < best) best = cand;
      }
  return best;
}

}  // namespace

ValueData value_data(const HNExpansion& hn) {
  require_valid(hn);
  const long R = static_cast<long>(hn.rows.size());
  ValueData out;
  out.w.assign(static_cast<std::size_t>(R) + 2, ValElem(0));
  auto nu = [&out](long i) -> ValElem& { return out.w[static_cast<std::size_t>(i + 1)]; };

  switch (hn.terminal.kind) {
    case ValClass::Divisorial: {
      nu(R) = ValElem(0);
      nu(R - 1) = ValElem(1);
      for (long i = R - 1; i >= 0; --i)
        nu(i - 1) = row_value(hn, static_cast<std::size_t>(i), nu(i), nu(i + 1));
      break;
    }
    case ValClass::Irrational: {
      QuadIrr gamma = tail_stream(hn).eval().quad();
      out.gamma = gamma;
      const long l = static_cast<long>(hn.last_free_row());
      nu(l) = ValElem(0, 1, gamma);
      nu(l + 1) = ValElem(1);
      for (long i = l + 1; i <= R - 1; ++i) nu(i + 1) = nu(i - 1) - nu(i) * Int(hn.rows[static_cast<std::size_t>(i)].h);
      for (long i = l; i >= 0; --i)
        nu(i - 1) = row_value(hn, static_cast<std::size_t>(i), nu(i), nu(i + 1));
      break;
    }
    case ValClass::Curve: {
      nu(R - 1) = ValElem(1);
      const HNRow& last = hn.rows.back();
      long lead = 0;
      for (long j = last.k; j <= last.h; ++j)
        if (!hn.coeff(static_cast<std::size_t>(R - 1), j).is_zero()) {
          lead = j;
          break;
        }
      if (R == 1) {
        if (lead == 0) {
          out.v_infinite = true;
          nu(-1) = ValElem(0);
        } else {
          nu(-1) = ValElem(lead);
        }
      } else {
        nu(R - 2) = ValElem(lead);
        for (long i = R - 2; i >= 0; --i)
          nu(i - 1) = row_value(hn, static_cast<std::size_t>(i), nu(i), nu(i + 1));
      }
      break;
    }
  }

  for (long i = 0; i < R; ++i)
    for (long c = 0; c < hn.rows[static_cast<std::size_t>(i)].h; ++c) out.m.push_back(nu(i));
  return out;
}

std::vector<Int> integer_multiplicities(const HNExpansion& hn) {
  if (hn.terminal.kind != ValClass::Divisorial)
    throw DomainError("integer multiplicity sequences exist for divisorial data only");
  ValueData vd = value_data(hn);
  std::vector<Int> out;
  out.reserve(vd.m.size());
  for (const ValElem& e : vd.m) out.push_back(e.as_int());
  return out;
}

}  // namespace planeval
