#include "planeval/hn/sample.hpp"

namespace planeval {

namespace {

FieldElem uniform_elem(Rng& rng, const FieldSpec& field) {
  if (field.rational) return FieldElem(field, Rat(Int(rng.range(-999999, 999999))));
  return FieldElem(field, Fp(rng.below(field.p), field.p));
}

FieldElem nonzero_elem(Rng& rng, const FieldSpec& field) {
  while (true) {
    FieldElem e = uniform_elem(rng, field);
    if (!e.is_zero()) return e;
  }
}

}  // namespace

HNExpansion sample_very_general(const HNExpansion& structure, const FieldSpec& field, std::uint64_t seed) {
  Rng rng(seed);
  HNExpansion out = structure;
  out.field = field;
  std::vector<std::size_t> fr = out.free_rows();
  std::size_t sampled = fr.size();
  if (out.terminal.kind == ValClass::Irrational) sampled -= 1;

  for (std::size_t j = 0; j < fr.size(); ++j) {
    HNRow& r = out.rows[fr[j]];
    r.coeffs.assign(static_cast<std::size_t>(r.h - r.k + 1), FieldElem::zero(field));
    if (j >= sampled) {
      r.coeffs[0] = FieldElem::one(field);
      continue;
    }
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
      if (fr[j] > 0 && i == 0)
        r.coeffs[i] = nonzero_elem(rng, field);
      else
        r.coeffs[i] = uniform_elem(rng, field);
    }
  }
  require_valid(out);
  return out;
}

HNExpansion random_structure(Rng& rng, const StructureOptions& opt) {
  if (opt.max_h < 3) throw DomainError("structure sampling needs max_h >= 3");
  if (opt.max_rows < 1) throw DomainError("structure sampling needs max_rows >= 1");

  HNExpansion hn;
  hn.field = FieldSpec::rationals();
  long nrows = 1 + static_cast<long>(rng.below(static_cast<uint64_t>(opt.max_rows)));

  hn.rows.push_back(free_row(1 + static_cast<long>(rng.below(static_cast<uint64_t>(opt.max_h))), 1, {}));

  for (long i = 1; i + 1 < nrows; ++i) {
    if (rng.below(2) == 0) {
      hn.rows.push_back(power_row(static_cast<long>(rng.range(1, opt.max_h))));
    } else {
      long k = static_cast<long>(rng.range(2, opt.max_h));
      hn.rows.push_back(free_row(static_cast<long>(rng.range(k, opt.max_h)), k, {}));
    }
  }

  const bool tail_row = nrows >= 2;
  switch (opt.cls) {
    case ValClass::Divisorial:
      if (tail_row) {
        if (rng.below(2) == 0) {
          hn.rows.push_back(power_row(static_cast<long>(rng.range(2, opt.max_h))));
        } else {
          long k = static_cast<long>(rng.range(2, opt.max_h - 1));
          hn.rows.push_back(free_row(static_cast<long>(rng.range(k + 1, opt.max_h)), k, {}));
        }
      }
      hn.terminal.kind = ValClass::Divisorial;
      break;
    case ValClass::Irrational: {
      if (tail_row) {
        if (rng.below(2) == 0) {
          hn.rows.push_back(power_row(static_cast<long>(rng.range(1, opt.max_h))));
        } else {
          long k = static_cast<long>(rng.range(2, opt.max_h));
          hn.rows.push_back(free_row(static_cast<long>(rng.range(k, opt.max_h)), k, {}));
        }
      }
      std::vector<Int> pre, per;
      long npre = static_cast<long>(rng.below(3));
      long nper = 1 + static_cast<long>(rng.below(3));
      for (long i = 0; i < npre; ++i) pre.push_back(Int(rng.range(1, opt.max_h)));
      for (long i = 0; i < nper; ++i) per.push_back(Int(rng.range(1, opt.max_h)));
      hn.terminal.kind = ValClass::Irrational;
      hn.terminal.tail = ContFrac(pre, per).canonical();
      break;
    }
    case ValClass::Curve: {
      if (tail_row) {
        long k = static_cast<long>(rng.range(2, opt.max_h));
        hn.rows.push_back(free_row(static_cast<long>(rng.range(k, opt.max_h)), k, {}));
      }
      hn.terminal.kind = ValClass::Curve;
      break;
    }
  }

  HNExpansion out = with_canonical_coefficients(hn);
  require_valid(out);
  return out;
}

}  // namespace planeval
