#pragma once
// Hamburger-Noether data for plane valuations centered at a smooth point:
// a list of division rows plus a terminal marker. Rows expand
//   w_{i-1} = sum_j a_j w_i^j + w_i^{h} w_{i+1}        (free row, slots k..h)
//   w_{i-1} = w_i^{h} w_{i+1}                          (power row)
// with w_{-1} = v, w_0 = u. Each elementary division is one blow-up.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "planeval/errors.hpp"
#include "planeval/exact/cont_frac.hpp"
#include "planeval/exact/field.hpp"
#include "planeval/exact/quad_irr.hpp"

namespace planeval {

enum class RowKind { Free, Power };

// A free row stores the coefficient slots k..h, leading slot first. Power
// rows keep k = 1 and no slots.
struct HNRow {
  RowKind kind = RowKind::Power;
  long h = 1;
  long k = 1;
  std::vector<FieldElem> coeffs;

  bool operator==(const HNRow& o) const {
    return kind == o.kind && h == o.h && k == o.k && coeffs == o.coeffs;
  }
};

inline HNRow free_row(long h, long k, std::vector<FieldElem> coeffs) {
  HNRow r;
  r.kind = RowKind::Free;
  r.h = h;
  r.k = k;
  r.coeffs = std::move(coeffs);
  return r;
}

inline HNRow power_row(long h) {
  HNRow r;
  r.kind = RowKind::Power;
  r.h = h;
  return r;
}

enum class ValClass { Divisorial, Irrational, Curve };

struct Terminal {
  ValClass kind = ValClass::Divisorial;
  // Irrational only: the infinite quotient stream past the stored rows,
  // eventually periodic.
  std::optional<ContFrac> tail;

  bool operator==(const Terminal& o) const { return kind == o.kind && tail == o.tail; }
};

struct HNExpansion {
  FieldSpec field = FieldSpec::rationals();
  std::vector<HNRow> rows;
  Terminal terminal;

  // slot value at position j of a free row; zero outside the stored range
  FieldElem coeff(std::size_t row, long j) const {
    const HNRow& r = rows[row];
    if (r.kind != RowKind::Free || j < r.k || j > r.h) return FieldElem::zero(field);
    return r.coeffs[static_cast<std::size_t>(j - r.k)];
  }

  std::vector<std::size_t> free_rows() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].kind == RowKind::Free) out.push_back(i);
    return out;
  }
  std::size_t last_free_row() const { return free_rows().back(); }

  long total_points() const {
    long s = 0;
    for (const HNRow& r : rows) s += r.h;
    return s;
  }

  bool is_m_adic() const {
    return terminal.kind == ValClass::Divisorial && rows.size() == 1 && rows[0].h == 1;
  }

  bool operator==(const HNExpansion& o) const {
    return field == o.field && rows == o.rows && terminal == o.terminal;
  }
};

// Structural legality. One human-readable diagnostic per violation, each
// naming the offending row (1-based) and the rule; empty means legal.
std::vector<std::string> validate(const HNExpansion& hn);
void require_valid(const HNExpansion& hn);
ValClass classify(const HNExpansion& hn);

// Quotient stream past the last free row: kept power rows followed by the
// stored tail, as one continued fraction. Irrational expansions only.
ContFrac tail_stream(const HNExpansion& hn);

// Characteristic exponent list (1, b'_1, ..., b'_{g+1}); just (1) for the
// maximal-ideal valuation. Inverse rebuilds the canonical row structure with
// placeholder coefficients.
std::vector<Alg> exponents_from_structure(const HNExpansion& hn);
HNExpansion structure_from_exponents(const std::vector<Alg>& exps, const FieldSpec& field);

// Number of free coefficient slots that move in the equisingularity family.
long coefficient_slot_count(const HNExpansion& hn);

// Placeholder coefficients: first row all zero, later free rows leading slot
// one and zeros after. Used as the base point for sampling.
HNExpansion with_canonical_coefficients(const HNExpansion& hn);

// Cluster surgery on divisorial data. Appended free points extend the last
// row (a trailing power row of quotient c becomes a free row with k = c);
// prepended ones enlarge the first row. Coefficients are reset to the
// canonical placeholder pattern.
HNExpansion append_free_points(const HNExpansion& hn, long count);
HNExpansion prepend_free_points(const HNExpansion& hn, long count);

}  // namespace planeval
