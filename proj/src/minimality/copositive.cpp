#include "planeval/minimality/copositive.hpp"

#include <cstddef>
#include <utility>

#include "planeval/errors.hpp"

namespace planeval {

GMatrix g_matrix(const std::vector<std::vector<Int>>& value_rows) {
  if (value_rows.empty()) throw DomainError("at least one branch row is required");
  std::size_t s = value_rows.size();
  std::size_t n = value_rows.front().size();
  for (const auto& row : value_rows)
    if (row.size() != n) throw DomainError("branch rows must share the cluster's point count");
  std::vector<Int> sums(s, Int(0));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t p = 0; p < n; ++p) sums[i] += value_rows[i][p];
  GMatrix g;
  g.a.assign(s, std::vector<Int>(s, Int(0)));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      Int dot(0);
      for (std::size_t p = 0; p < n; ++p) dot += value_rows[i][p] * value_rows[j][p];
      g.a[i][j] = g.a[j][i] = Int(9 * dot - sums[i] * sums[j]);
    }
  return g;
}

namespace {

struct Ineq {
  std::vector<Rat> c;
  bool strict = false;
};

constexpr std::size_t kEliminationCap = 200000;

// Does { c . t > 0 (strict) / >= 0 } admit a real solution? Homogeneous
// Fourier-Motzkin; combining a strict row with anything stays strict.
bool feasible(std::vector<Ineq> sys, std::size_t vars) {
  for (std::size_t v = vars; v-- > 0;) {
    std::vector<Ineq> pos, neg, kept;
    for (Ineq& q : sys) {
      int sg = q.c[v].sign();
      if (sg > 0) pos.push_back(std::move(q));
      else if (sg < 0) neg.push_back(std::move(q));
      else kept.push_back(std::move(q));
    }
    if (kept.size() + pos.size() * neg.size() > kEliminationCap)
      throw CapabilityError("copositivity elimination outgrew the supported size");
    for (const Ineq& p : pos)
      for (const Ineq& m : neg) {
        Ineq q;
        q.strict = p.strict || m.strict;
        q.c.assign(v, Rat(0));
        for (std::size_t i = 0; i < v; ++i) q.c[i] = p.c[i] * (-m.c[v]) + m.c[i] * p.c[v];
        kept.push_back(std::move(q));
      }
    for (Ineq& q : kept) q.c.resize(v, Rat(0));
    sys = std::move(kept);
  }
  for (const Ineq& q : sys)
    if (q.strict) return false;  // reduced to 0 > 0
  return true;
}

// basis of the solution space of m . z = 0 (rows x cols, exact)
std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> m, std::size_t cols) {
  std::vector<long> pivot_row(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rat lead = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] / lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivot_row[c] = static_cast<long>(r);
    ++r;
  }
  std::vector<std::vector<Rat>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_row[c] >= 0) continue;
    std::vector<Rat> vec(cols, Rat(0));
    vec[c] = Rat(1);
    for (std::size_t c2 = 0; c2 < cols; ++c2)
      if (pivot_row[c2] >= 0) vec[c2] = -m[static_cast<std::size_t>(pivot_row[c2])][c];
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace

bool p_sufficiency(const GMatrix& g, CopositiveMode mode) {
  std::size_t s = g.a.size();
  if (s == 0) throw DomainError("empty form");
  for (std::size_t i = 0; i < s; ++i) {
    if (g.a[i].size() != s) throw DomainError("form matrix must be square");
    for (std::size_t j = 0; j < i; ++j)
      if (g.a[i][j] != g.a[j][i]) throw DomainError("form matrix must be symmetric");
  }
  if (s > 12) throw CapabilityError("copositivity decided exactly up to size 12");

  // The minimum of the form over the standard simplex sits on a face where
  // G_S x = lambda * 1 with x > 0; the form's value there is lambda. A
  // negative lambda kills copositivity, a non-positive one kills strictness.
  for (unsigned long mask = 1; mask < (1ul << s); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < s; ++i)
      if (mask & (1ul << i)) idx.push_back(i);
    std::size_t k = idx.size();
    std::vector<std::vector<Rat>> eqs(k, std::vector<Rat>(k + 1, Rat(0)));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) eqs[i][j] = Rat(g.a[idx[i]][idx[j]]);
      eqs[i][k] = Rat(-1);
    }
    std::vector<std::vector<Rat>> basis = kernel_basis(std::move(eqs), k + 1);
    if (basis.empty()) continue;  // no stationary direction on this face
    std::vector<Ineq> sys;
    for (std::size_t i = 0; i <= k; ++i) {
      Ineq q;
      q.c.reserve(basis.size());
      for (const auto& b : basis) q.c.push_back(i < k ? b[i] : -b[k]);
      q.strict = i < k || mode == CopositiveMode::Almost;  // x_i > 0; -lambda >(=) 0
      sys.push_back(std::move(q));
    }
    if (feasible(std::move(sys), basis.size())) return false;
  }
  return true;
}

}  // namespace planeval
