#pragma once
// Exact bivariate polynomials in either the local chart (u, v) or, after a
// chart conversion, the affine chart (x, y) at infinity with u = y/x and
// v = 1/x.

#include <map>
#include <string>
#include <utility>

#include "planeval/exact/field.hpp"

namespace planeval {

enum class Chart { Local, Affine };

struct BivarPoly {
  FieldSpec field = FieldSpec::rationals();
  Chart chart = Chart::Local;
  // (i, j) -> coefficient of u^i v^j (local) or x^i y^j (affine); no zeros
  std::map<std::pair<long, long>, FieldElem> terms;

  bool is_zero() const { return terms.empty(); }
  long degree() const {  // -1 for the zero polynomial
    long d = -1;
    for (const auto& [ij, c] : terms) d = std::max(d, ij.first + ij.second);
    return d;
  }
  void add_term(long i, long j, const FieldElem& c);
  bool operator==(const BivarPoly& o) const {
    return chart == o.chart && terms == o.terms;
  }
};

BivarPoly poly_add(const BivarPoly& a, const BivarPoly& b);
BivarPoly poly_mul(const BivarPoly& a, const BivarPoly& b);

// g(u,v) = g~(x,y)/x^d with u = y/x, v = 1/x; monomial x^i y^j becomes
// u^j v^{d-i-j}. The inverse sends u^a v^b to x^{d-a-b} y^a.
BivarPoly chart_to_local(const BivarPoly& affine, long d);
BivarPoly chart_to_affine(const BivarPoly& local, long d);

// Expression syntax: u, v (or x, y), integer and a/b literals, + - * ^ and
// parentheses. The variables fix the chart; constants default to local.
BivarPoly parse_poly_expr(const std::string& expr, const FieldSpec& field);

// File form: optional "chart: local|affine" line, then either one
// "expr: ..." line or "term: i j coeff" lines.
BivarPoly parse_poly_file(const std::string& text, const FieldSpec& field);
std::string serialize_poly(const BivarPoly& f);
std::string poly_expression(const BivarPoly& f);

}  // namespace planeval
