#include "planeval/hn/parse.hpp"

#include <fstream>
#include <sstream>

namespace planeval {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  long line_no;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_no) + ", column " + std::to_string(pos + 1) + ": " + what);
  }
  void ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool take(const std::string& lit) {
    if (s.compare(pos, lit.size(), lit) != 0) return false;
    pos += lit.size();
    return true;
  }
  void expect(const std::string& lit) {
    if (!take(lit)) fail("expected '" + lit + "'");
  }
  long number() {
    ws();
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) fail("expected a number");
    return std::stol(s.substr(start, pos - start));
  }
  std::string rest() { return s.substr(pos); }
  void end() {
    ws();
    if (pos != s.size()) fail("trailing characters");
  }
};

bool coeff_token_ok(const std::string& t) {
  std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
  std::size_t digits = 0;
  bool slash = false, digits_after = false;
  for (; i < t.size(); ++i) {
    char c = t[i];
    if (c >= '0' && c <= '9') {
      ++digits;
      if (slash) digits_after = true;
    } else if (c == '/' && !slash && digits > 0) {
      slash = true;
    } else {
      return false;
    }
  }
  return digits > 0 && (!slash || digits_after);
}

std::vector<FieldElem> coeff_list(Cursor& c, const FieldSpec& field, long expected) {
  std::vector<FieldElem> out;
  for (long i = 0; i < expected; ++i) {
    c.ws();
    if (i > 0) {
      c.expect(",");
      c.ws();
    }
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && c.s[c.pos] != ',' && c.s[c.pos] != ' ' && c.s[c.pos] != '\t') ++c.pos;
    std::string tok = c.s.substr(start, c.pos - start);
    if (!coeff_token_ok(tok)) {
      c.pos = start;
      c.fail("expected a coefficient (integer or p/q)");
    }
    out.push_back(FieldElem::parse(field, tok));
  }
  c.end();
  return out;
}

}  // namespace

HNExpansion parse_hn(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  long line_no = 0;
  HNExpansion hn;
  bool have_field = false, have_terminal = false;

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    Cursor c{raw, 0, line_no};
    c.ws();
    if (c.pos == raw.size() || raw[c.pos] == '#') continue;
    if (have_terminal) c.fail("content after the terminal line");

    if (!have_field) {
      c.expect("field:");
      c.ws();
      std::string spec = c.rest();
      while (!spec.empty() && (spec.back() == ' ' || spec.back() == '\t')) spec.pop_back();
      hn.field = FieldSpec::parse(spec);
      have_field = true;
      continue;
    }

    if (c.take("free")) {
      c.ws();
      c.expect("h=");
      long h = c.number();
      c.ws();
      c.expect("coeffs");
      c.ws();
      c.expect("k=");
      long k = c.number();
      c.ws();
      c.expect(":");
      if (h < k) c.fail("free row needs h >= k");
      hn.rows.push_back(free_row(h, k, coeff_list(c, hn.field, h - k + 1)));
      continue;
    }
    if (c.take("power")) {
      c.ws();
      c.expect("h=");
      long h = c.number();
      c.end();
      hn.rows.push_back(power_row(h));
      continue;
    }
    if (c.take("terminal:")) {
      c.ws();
      if (c.take("divisorial")) {
        c.end();
        hn.terminal.kind = ValClass::Divisorial;
      } else if (c.take("curve")) {
        c.end();
        hn.terminal.kind = ValClass::Curve;
      } else if (c.take("irrational")) {
        c.ws();
        c.expect("cf=");
        hn.terminal.kind = ValClass::Irrational;
        hn.terminal.tail = ContFrac::parse(c.rest()).canonical();
      } else {
        c.fail("expected divisorial, irrational or curve");
      }
      have_terminal = true;
      continue;
    }
    c.fail("expected a free row, a power row or the terminal line");
  }
  if (!have_field) throw ParseError("line 1, column 1: missing 'field:' line");
  if (!have_terminal)
    throw ParseError("line " + std::to_string(line_no + 1) + ", column 1: missing 'terminal:' line");
  return hn;
}

HNExpansion load_hn(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path + ": cannot open");
  std::ostringstream body;
  body << f.rdbuf();
  return parse_hn(body.str());
}

std::string serialize_hn(const HNExpansion& hn) {
  std::string out = "field: " + hn.field.to_string() + "\n";
  for (const HNRow& r : hn.rows) {
    if (r.kind == RowKind::Power) {
      out += "power h=" + std::to_string(r.h) + "\n";
      continue;
    }
    out += "free h=" + std::to_string(r.h) + " coeffs k=" + std::to_string(r.k) + ":";
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) out += (i ? ", " : " ") + r.coeffs[i].to_string();
    out += "\n";
  }
  out += "terminal: ";
  switch (hn.terminal.kind) {
    case ValClass::Divisorial: out += "divisorial"; break;
    case ValClass::Curve: out += "curve"; break;
    case ValClass::Irrational: out += "irrational cf=" + hn.terminal.tail->to_string(); break;
  }
  out += "\n";
  return out;
}

}  // namespace planeval
