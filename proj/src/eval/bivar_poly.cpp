#include "planeval/eval/bivar_poly.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "planeval/errors.hpp"

namespace planeval {

void BivarPoly::add_term(long i, long j, const FieldElem& c) {
  if (i < 0 || j < 0) throw DomainError("negative exponent in polynomial");
  auto key = std::make_pair(i, j);
  auto it = terms.find(key);
  if (it == terms.end()) {
    if (!c.is_zero()) terms.emplace(key, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms.erase(it);
}

BivarPoly poly_add(const BivarPoly& a, const BivarPoly& b) {
  if (a.chart != b.chart) throw DomainError("polynomials live in different charts");
  BivarPoly out = a;
  for (const auto& [ij, c] : b.terms) out.add_term(ij.first, ij.second, c);
  return out;
}

BivarPoly poly_mul(const BivarPoly& a, const BivarPoly& b) {
  if (a.chart != b.chart) throw DomainError("polynomials live in different charts");
  BivarPoly out;
  out.field = a.field;
  out.chart = a.chart;
  for (const auto& [ij, c] : a.terms)
    for (const auto& [kl, d] : b.terms)
      out.add_term(ij.first + kl.first, ij.second + kl.second, c * d);
  return out;
}

BivarPoly chart_to_local(const BivarPoly& affine, long d) {
  if (affine.chart != Chart::Affine) throw DomainError("input is not in the affine chart");
  if (d < affine.degree()) throw DomainError("chart degree below the polynomial degree");
  BivarPoly out;
  out.field = affine.field;
  out.chart = Chart::Local;
  for (const auto& [ij, c] : affine.terms)
    out.add_term(ij.second, d - ij.first - ij.second, c);
  return out;
}

BivarPoly chart_to_affine(const BivarPoly& local, long d) {
  if (local.chart != Chart::Local) throw DomainError("input is not in the local chart");
  if (d < local.degree()) throw DomainError("chart degree below the polynomial degree");
  BivarPoly out;
  out.field = local.field;
  out.chart = Chart::Affine;
  for (const auto& [ij, c] : local.terms)
    out.add_term(d - ij.first - ij.second, ij.first, c);
  return out;
}

namespace {

struct ExprParser {
  const std::string& s;
  std::size_t pos = 0;
  const FieldSpec& field;
  std::optional<Chart> chart;

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("polynomial expression, column " + std::to_string(pos + 1) + ": " + msg);
  }

  bool take(char c) {
    ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long integer() {
    ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return std::stol(s.substr(start, pos - start));
  }

  FieldElem literal() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string num = s.substr(start, pos - start);
    if (pos < s.size() && s[pos] == '/') {
      std::size_t save = pos++;
      std::size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == dstart) {
        pos = save;
      } else {
        std::string den = s.substr(dstart, pos - dstart);
        FieldElem n = FieldElem::from_int(field, parse_int(num));
        FieldElem d = FieldElem::from_int(field, parse_int(den));
        if (d.is_zero()) fail("zero denominator");
        return n / d;
      }
    }
    return FieldElem::from_int(field, parse_int(num));
  }

  BivarPoly variable(char c) {
    Chart want = (c == 'u' || c == 'v') ? Chart::Local : Chart::Affine;
    if (chart && *chart != want) fail("mixes local (u, v) and affine (x, y) variables");
    chart = want;
    BivarPoly p;
    p.field = field;
    p.chart = want;
    bool first = (c == 'u' || c == 'x');
    p.add_term(first ? 1 : 0, first ? 0 : 1, FieldElem::one(field));
    return p;
  }

  BivarPoly primary() {
    ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      BivarPoly p = expr();
      if (!take(')')) fail("expected ')'");
      return p;
    }
    if (c == 'u' || c == 'v' || c == 'x' || c == 'y') {
      ++pos;
      return variable(c);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BivarPoly p;
      p.field = field;
      p.add_term(0, 0, literal());
      return p;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  BivarPoly factor() {
    ws();
    if (take('-')) {
      BivarPoly p = factor();
      BivarPoly neg;
      neg.field = field;
      neg.chart = p.chart;
      for (const auto& [ij, coef] : p.terms) neg.add_term(ij.first, ij.second, -coef);
      return neg;
    }
    if (take('+')) return factor();
    BivarPoly p = primary();
    while (take('^')) {
      long e = integer();
      BivarPoly acc;
      acc.field = field;
      acc.chart = p.chart;
      acc.add_term(0, 0, FieldElem::one(field));
      for (long i = 0; i < e; ++i) acc = poly_mul(acc, p);
      p = acc;
    }
    return p;
  }

  BivarPoly term() {
    BivarPoly p = factor();
    while (take('*')) {
      BivarPoly q = factor();
      if (p.chart != q.chart) {
        if (p.terms.empty() || p.degree() == 0) p.chart = q.chart;
        else if (q.terms.empty() || q.degree() == 0) q.chart = p.chart;
      }
      p = poly_mul(p, q);
    }
    return p;
  }

  BivarPoly expr() {
    BivarPoly p = term();
    for (;;) {
      ws();
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        char op = s[pos++];
        BivarPoly q = term();
        if (p.chart != q.chart) {
          if (p.terms.empty() || p.degree() == 0) p.chart = q.chart;
          else if (q.terms.empty() || q.degree() == 0) q.chart = p.chart;
        }
        if (op == '-') {
          BivarPoly neg;
          neg.field = field;
          neg.chart = q.chart;
          for (const auto& [ij, coef] : q.terms) neg.add_term(ij.first, ij.second, -coef);
          q = neg;
        }
        p = poly_add(p, q);
      } else {
        return p;
      }
    }
  }
};

std::string strip_line(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

BivarPoly parse_poly_expr(const std::string& expr, const FieldSpec& field) {
  ExprParser p{expr, 0, field, std::nullopt};
  BivarPoly out = p.expr();
  p.ws();
  if (p.pos != expr.size()) p.fail("trailing input");
  if (p.chart) out.chart = *p.chart;
  return out;
}

BivarPoly parse_poly_file(const std::string& text, const FieldSpec& field) {
  std::istringstream is(text);
  std::string raw;
  std::optional<Chart> chart;
  std::optional<BivarPoly> from_expr;
  BivarPoly acc;
  acc.field = field;
  bool any_term = false;
  long line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    std::string line = strip_line(raw);
    if (line.empty() || line[0] == '#') continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(line_no) + ": " + msg);
    };
    if (line.rfind("chart:", 0) == 0) {
      std::string v = strip_line(line.substr(6));
      if (v == "local") chart = Chart::Local;
      else if (v == "affine") chart = Chart::Affine;
      else fail("chart must be 'local' or 'affine'");
    } else if (line.rfind("expr:", 0) == 0) {
      if (from_expr || any_term) fail("more than one polynomial body");
      from_expr = parse_poly_expr(strip_line(line.substr(5)), field);
    } else if (line.rfind("term:", 0) == 0) {
      if (from_expr) fail("more than one polynomial body");
      std::istringstream ts(line.substr(5));
      long i = 0, j = 0;
      std::string coeff;
      if (!(ts >> i >> j >> coeff)) fail("term lines read 'term: i j coeff'");
      std::string extra;
      if (ts >> extra) fail("term lines read 'term: i j coeff'");
      acc.add_term(i, j, FieldElem::parse(field, coeff));
      any_term = true;
    } else {
      fail("unrecognized line '" + line + "'");
    }
  }
  BivarPoly out = from_expr ? *from_expr : acc;
  if (!from_expr && !any_term) throw ParseError("no polynomial body found");
  if (chart) out.chart = *chart;
  return out;
}

std::string serialize_poly(const BivarPoly& f) {
  std::ostringstream os;
  os << "chart: " << (f.chart == Chart::Local ? "local" : "affine") << "\n";
  for (const auto& [ij, c] : f.terms)
    os << "term: " << ij.first << " " << ij.second << " " << c.to_string() << "\n";
  return os.str();
}

std::string poly_expression(const BivarPoly& f) {
  if (f.terms.empty()) return "0";
  const char* vars = f.chart == Chart::Local ? "uv" : "xy";
  std::string out;
  for (const auto& [ij, c] : f.terms) {
    std::string coeff = c.to_string();
    bool neg = !coeff.empty() && coeff[0] == '-';
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mag = neg ? coeff.substr(1) : coeff;
    std::string mono;
    if (ij.first > 0) {
      mono += vars[0];
      if (ij.first > 1) mono += "^" + std::to_string(ij.first);
    }
    if (ij.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += vars[1];
      if (ij.second > 1) mono += "^" + std::to_string(ij.second);
    }
    if (mono.empty()) out += mag;
    else if (mag == "1") out += mono;
    else out += mag + "*" + mono;
  }
  return out;
}

}  // namespace planeval
