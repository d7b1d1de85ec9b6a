#include "planeval/hn/expansion.hpp"

#include <algorithm>

namespace planeval {

namespace {

std::string row_tag(std::size_t i) { return "row " + std::to_string(i + 1); }

}  // namespace

std::vector<std::string> validate(const HNExpansion& hn) {
  std::vector<std::string> out;
  if (hn.rows.empty()) {
    out.push_back("no rows: the expansion of v needs at least one division row");
    return out;
  }

  for (std::size_t i = 0; i < hn.rows.size(); ++i) {
    const HNRow& r = hn.rows[i];
    if (r.h < 1) out.push_back(row_tag(i) + ": quotient h must be at least 1");
    if (r.kind == RowKind::Power) {
      if (i == 0)
        out.push_back(
            "row 1: the first row must be free (it expands v in powers of u); "
            "if nu(u) > nu(v), swap u and v and re-encode");
      if (!r.coeffs.empty()) out.push_back(row_tag(i) + ": power rows carry no coefficients");
      continue;
    }
    if (i == 0) {
      if (r.k != 1) out.push_back("row 1: slots start at position 1");
      if (r.h >= 1 && r.k == 1 && static_cast<long>(r.coeffs.size()) != r.h)
        out.push_back("row 1: expected " + std::to_string(r.h) + " coefficient slots");
    } else {
      if (r.k < 2) out.push_back(row_tag(i) + ": a later free row starts at slot k >= 2");
      if (r.h < r.k) out.push_back(row_tag(i) + ": free row needs h >= k");
      if (r.h >= r.k && static_cast<long>(r.coeffs.size()) != r.h - r.k + 1)
        out.push_back(row_tag(i) + ": expected " + std::to_string(r.h - r.k + 1) + " coefficient slots");
      if (!r.coeffs.empty() && r.coeffs.front().is_zero())
        out.push_back(row_tag(i) + ": leading coefficient (slot k) must be nonzero");
    }
    for (const FieldElem& c : r.coeffs)
      if (c.spec() != hn.field) {
        out.push_back(row_tag(i) + ": coefficient field differs from the declared field");
        break;
      }
  }

  const HNRow& last = hn.rows.back();
  const std::size_t nlast = hn.rows.size() - 1;
  switch (hn.terminal.kind) {
    case ValClass::Divisorial:
      if (last.kind == RowKind::Power && last.h < 2)
        out.push_back(row_tag(nlast) +
                      ": a trailing power row with h = 1 names no divisor; merge it into the previous quotient");
      if (last.kind == RowKind::Free && nlast > 0 && last.h < last.k + 1)
        out.push_back(row_tag(nlast) +
                      ": a divisorial terminal needs a free point after slot k; encode the bare quotient as a power row");
      break;
    case ValClass::Irrational:
      if (!hn.terminal.tail) {
        out.push_back("terminal: irrational data needs the quotient stream");
      } else if (hn.terminal.tail->finite()) {
        out.push_back("terminal: the quotient stream must be eventually periodic (infinite)");
      }
      break;
    case ValClass::Curve:
      if (last.kind != RowKind::Free)
        out.push_back(row_tag(nlast) + ": truncated curve data ends in the free row holding the stored coefficients");
      break;
  }
  return out;
}

void require_valid(const HNExpansion& hn) {
  std::vector<std::string> d = validate(hn);
  if (d.empty()) return;
  std::string msg = d[0];
  for (std::size_t i = 1; i < d.size(); ++i) msg += "; " + d[i];
  throw ValidationError(msg);
}

ValClass classify(const HNExpansion& hn) {
  require_valid(hn);
  return hn.terminal.kind;
}

ContFrac tail_stream(const HNExpansion& hn) {
  if (hn.terminal.kind != ValClass::Irrational || !hn.terminal.tail)
    throw DomainError("quotient stream is only defined for irrational data");
  std::vector<Int> head;
  for (std::size_t i = hn.last_free_row() + 1; i < hn.rows.size(); ++i) head.push_back(Int(hn.rows[i].h));
  return cf_concat(head, *hn.terminal.tail).canonical();
}

std::vector<Alg> exponents_from_structure(const HNExpansion& hn) {
  require_valid(hn);
  if (hn.terminal.kind == ValClass::Curve)
    throw DomainError("unsupported class for exponent lists: truncated curve");
  if (hn.is_m_adic()) return {Alg(1)};

  std::vector<Alg> out{Alg(1)};
  std::vector<std::size_t> fr = hn.free_rows();
  for (std::size_t j = 0; j < fr.size(); ++j) {
    const HNRow& row = hn.rows[fr[j]];
    Int c0(row.h - row.k + 1);
    if (j + 1 < fr.size()) {
      std::vector<Int> cf{c0};
      for (std::size_t i = fr[j] + 1; i < fr[j + 1]; ++i) cf.push_back(Int(hn.rows[i].h));
      cf.push_back(Int(hn.rows[fr[j + 1]].k));
      out.push_back(ContFrac(cf).eval());
    } else if (hn.terminal.kind == ValClass::Divisorial) {
      std::vector<Int> cf{c0};
      for (std::size_t i = fr[j] + 1; i < hn.rows.size(); ++i) cf.push_back(Int(hn.rows[i].h));
      out.push_back(ContFrac(cf).eval());
    } else {
      out.push_back(cf_concat({c0}, tail_stream(hn)).eval());
    }
  }
  return out;
}

namespace {

// canonical quotients of a rational exponent, last entry >= 2 unless single
std::vector<Int> exponent_quotients(const Rat& r) {
  ContFrac cf = cf_of_rat(r);
  return cf.preperiod();
}

}  // namespace

HNExpansion structure_from_exponents(const std::vector<Alg>& exps, const FieldSpec& field) {
  if (exps.empty()) throw ValidationError("exponent list is empty");
  if (!(exps[0] == Alg(1))) throw ValidationError("exponent list must start with 1");

  HNExpansion hn;
  hn.field = field;
  if (exps.size() == 1) {
    hn.rows.push_back(free_row(1, 1, {FieldElem::zero(field)}));
    hn.terminal.kind = ValClass::Divisorial;
    return hn;
  }

  long k = 1;
  for (std::size_t j = 1; j < exps.size(); ++j) {
    const Alg& e = exps[j];
    const bool is_last = (j + 1 == exps.size());
    if (!(Alg(1) < e))
      throw ValidationError("exponent " + std::to_string(j) + " must exceed 1");
    if (!is_last && !e.is_rational())
      throw ValidationError("exponent " + std::to_string(j) + ": only the last entry may be irrational");
    if (!is_last && e.rat().is_integer())
      throw ValidationError("exponent " + std::to_string(j) + ": interior entries must be non-integer");

    if (e.is_rational()) {
      std::vector<Int> q = exponent_quotients(e.rat());
      long c0 = q[0].get_si();
      long h = k + c0 - 1;
      hn.rows.push_back(free_row(h, k, {}));
      if (is_last) {
        for (std::size_t i = 1; i < q.size(); ++i) hn.rows.push_back(power_row(q[i].get_si()));
        hn.terminal.kind = ValClass::Divisorial;
      } else {
        for (std::size_t i = 1; i + 1 < q.size(); ++i) hn.rows.push_back(power_row(q[i].get_si()));
        k = q.back().get_si();
      }
    } else {
      ContFrac cf = cf_of_quad(e.quad());
      std::vector<Int> pre = cf.preperiod(), per = cf.period();
      Int c0;
      std::vector<Int> tail_pre, tail_per = per;
      if (pre.empty()) {
        c0 = per[0];
        tail_per.assign(per.begin() + 1, per.end());
        tail_per.push_back(per[0]);
      } else {
        c0 = pre[0];
        tail_pre.assign(pre.begin() + 1, pre.end());
      }
      long h = k + c0.get_si() - 1;
      hn.rows.push_back(free_row(h, k, {}));
      hn.terminal.kind = ValClass::Irrational;
      hn.terminal.tail = ContFrac(tail_pre, tail_per);
    }
  }
  return with_canonical_coefficients(hn);
}

long coefficient_slot_count(const HNExpansion& hn) {
  std::vector<std::size_t> fr = hn.free_rows();
  std::size_t counted = fr.size();
  if (hn.terminal.kind == ValClass::Irrational) counted -= 1;
  long b = 0;
  for (std::size_t j = 0; j < counted; ++j) {
    const HNRow& r = hn.rows[fr[j]];
    b += r.h - r.k + 1;
  }
  return b;
}

HNExpansion with_canonical_coefficients(const HNExpansion& hn) {
  HNExpansion out = hn;
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    HNRow& r = out.rows[i];
    if (r.kind != RowKind::Free) {
      r.coeffs.clear();
      continue;
    }
    r.coeffs.assign(static_cast<std::size_t>(r.h - r.k + 1), FieldElem::zero(out.field));
    if (i > 0) r.coeffs[0] = FieldElem::one(out.field);
  }
  return out;
}

HNExpansion append_free_points(const HNExpansion& hn, long count) {
  require_valid(hn);
  if (hn.terminal.kind != ValClass::Divisorial)
    throw DomainError("free points are appended to divisorial data only");
  if (count < 0) throw DomainError("cannot append a negative number of points");
  HNExpansion out = hn;
  HNRow& last = out.rows.back();
  if (last.kind == RowKind::Free) {
    last.h += count;
  } else if (count > 0) {
    long c = last.h;
    out.rows.back() = free_row(c + count, c, {});
  }
  return with_canonical_coefficients(out);
}

HNExpansion prepend_free_points(const HNExpansion& hn, long count) {
  require_valid(hn);
  if (count < 0) throw DomainError("cannot prepend a negative number of points");
  HNExpansion out = hn;
  out.rows[0].h += count;
  return with_canonical_coefficients(out);
}

}  // namespace planeval
