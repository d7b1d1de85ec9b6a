#pragma once

#include <optional>
#include <string>
#include <variant>

#include "planeval/errors.hpp"
#include "planeval/exact/rational.hpp"

namespace planeval {

// a + b*sqrt(d) with rational a, b, b != 0, d squarefree >= 2.
// All comparisons are exact (sign by squaring); no floating point.
class QuadIrr {
 public:
  QuadIrr(const Rat& a, const Rat& b, const Int& d) : a_(a), b_(b), d_(d) {
    if (b.is_zero()) throw DomainError("quadratic irrational with zero radical part");
    auto [s, df] = squarefree_decompose(d);
    if (df == 1) throw DomainError("radicand is a perfect square");
    b_ = b_ * Rat(s);
    d_ = df;
  }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Int& d() const { return d_; }

  bool operator==(const QuadIrr& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }
  bool operator!=(const QuadIrr& o) const { return !(*this == o); }

  // sign of a + b*sqrt(d)
  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2 d (equality impossible: d not a square)
    Rat lhs = a_ * a_, rhs = b_ * b_ * Rat(d_);
    return lhs > rhs ? sa : sb;
  }

  QuadIrr conjugate() const {
    QuadIrr r = *this;
    r.b_ = -r.b_;
    return r;
  }

  Int floor() const {
    // write as (A + sign(B) * sqrt(B^2 d)) / Q with integers A, B, Q > 0
    Int q = a_.den() * b_.den();
    Int A = a_.num() * b_.den();
    Int B = b_.num() * a_.den();
    Int n = B * B * d_;
    Int root = isqrt(n);  // n is never a perfect square
    Int m = (B >= 0) ? Int(A + root) : Int(A - root - 1);
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t());
    return out;
  }

  std::string to_string() const {
    std::string root = "sqrt(" + d_.get_str() + ")";
    Rat ab = planeval::abs(b_);
    std::string bpart = (ab == Rat(1)) ? root : ab.to_string() + "*" + root;
    if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + bpart;
    return a_.to_string() + (b_.sign() < 0 ? " - " : " + ") + bpart;
  }

 private:
  Rat a_, b_;
  Int d_;
};

// Exact real that is either rational or a quadratic irrational.
class Alg {
 public:
  Alg() : v_(Rat(0)) {}
  Alg(const Rat& r) : v_(r) {}  // NOLINT: implicit by design
  Alg(long n) : v_(Rat(n)) {}   // NOLINT
  Alg(const QuadIrr& q) : v_(q) {}  // NOLINT

  bool is_rational() const { return std::holds_alternative<Rat>(v_); }
  const Rat& rat() const {
    if (!is_rational()) throw DomainError("value is irrational: " + to_string());
    return std::get<Rat>(v_);
  }
  const QuadIrr& quad() const {
    if (is_rational()) throw DomainError("value is rational");
    return std::get<QuadIrr>(v_);
  }

  static Alg make(const Rat& a, const Rat& b, const Int& d) {
    if (b.is_zero()) return Alg(a);
    QuadIrr q(a, b, d);  // may collapse scale, never to rational
    return Alg(q);
  }

  int sign() const { return is_rational() ? rat().sign() : quad().sign(); }
  bool is_zero() const { return is_rational() && rat().is_zero(); }

  Alg operator-() const {
    if (is_rational()) return Alg(-rat());
    const QuadIrr& q = quad();
    return make(-q.a(), -q.b(), q.d());
  }

  Alg operator+(const Alg& o) const {
    if (is_rational() && o.is_rational()) return Alg(rat() + o.rat());
    if (is_rational()) return make(rat() + o.quad().a(), o.quad().b(), o.quad().d());
    if (o.is_rational()) return make(quad().a() + o.rat(), quad().b(), quad().d());
    const QuadIrr &x = quad(), &y = o.quad();
    if (x.d() != y.d()) throw DomainError("mixed radicands " + x.d().get_str() + " and " + y.d().get_str());
    return make(x.a() + y.a(), x.b() + y.b(), x.d());
  }
  Alg operator-(const Alg& o) const { return *this + (-o); }
  Alg operator*(const Alg& o) const {
    if (is_rational() && o.is_rational()) return Alg(rat() * o.rat());
    if (is_rational() || o.is_rational()) {
      const Rat& r = is_rational() ? rat() : o.rat();
      const QuadIrr& q = is_rational() ? o.quad() : quad();
      if (r.is_zero()) return Alg(Rat(0));
      return make(q.a() * r, q.b() * r, q.d());
    }
    const QuadIrr &x = quad(), &y = o.quad();
    if (x.d() != y.d()) throw DomainError("mixed radicands " + x.d().get_str() + " and " + y.d().get_str());
    return make(x.a() * y.a() + x.b() * y.b() * Rat(x.d()), x.a() * y.b() + x.b() * y.a(), x.d());
  }
  Alg operator/(const Alg& o) const {
    if (o.is_zero()) throw DomainError("division by zero");
    if (o.is_rational()) return *this * Alg(Rat(1) / o.rat());
    const QuadIrr& y = o.quad();
    Rat norm = y.a() * y.a() - y.b() * y.b() * Rat(y.d());  // nonzero: d not a square
    return *this * make(y.a() / norm, -y.b() / norm, y.d());
  }

  // exact comparison; mixed radicands are rejected
  int cmp(const Alg& o) const { return (*this - o).sign(); }
  bool operator==(const Alg& o) const { return cmp(o) == 0; }
  bool operator!=(const Alg& o) const { return cmp(o) != 0; }
  bool operator<(const Alg& o) const { return cmp(o) < 0; }
  bool operator<=(const Alg& o) const { return cmp(o) <= 0; }
  bool operator>(const Alg& o) const { return cmp(o) > 0; }
  bool operator>=(const Alg& o) const { return cmp(o) >= 0; }

  Int floor() const { return is_rational() ? rat().floor() : quad().floor(); }

  std::string to_string() const { return is_rational() ? rat().to_string() : quad().to_string(); }

  // "3/2", "sqrt(2)", "1 + 1/2*sqrt(5)", "-3 - 2*sqrt(7)", "2*sqrt(3)"
  static Alg parse(const std::string& in) {
    std::string s;
    for (char c : in)
      if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw ParseError("empty number");
    if (s.find("sqrt") == std::string::npos) return Alg(Rat::parse(s));
    for (size_t i = 1; i < s.size(); ++i) {
      if (s[i] != '+' && s[i] != '-') continue;
      if (s.substr(0, i).find("sqrt") != std::string::npos) break;
      Rat a = Rat::parse(s.substr(0, i));
      auto [b, d] = parse_sqrt_term(s.substr(i + 1));
      if (s[i] == '-') b = -b;
      return make(a, b, d);
    }
    auto [b, d] = parse_sqrt_term(s);
    return make(Rat(0), b, d);
  }

 private:
  // ["-"]["<rat>*"]"sqrt(<int>)" -> (coefficient, radicand)
  static std::pair<Rat, Int> parse_sqrt_term(const std::string& in) {
    std::string s = in;
    Rat sign(1);
    if (!s.empty() && s[0] == '-') {
      sign = Rat(-1);
      s = s.substr(1);
    }
    Rat coef(1);
    auto star = s.find('*');
    if (star != std::string::npos) {
      coef = Rat::parse(s.substr(0, star));
      s = s.substr(star + 1);
    }
    if (s.rfind("sqrt(", 0) != 0 || s.back() != ')') throw ParseError("bad radical term: '" + in + "'");
    std::string body = s.substr(5, s.size() - 6);
    if (!is_digits(body)) throw ParseError("bad radicand: '" + body + "'");
    return {sign * coef, Int(body)};
  }

  std::variant<Rat, QuadIrr> v_;
};

// sqrt of a nonnegative rational, exact
inline Alg sqrt_rat(const Rat& r) {
  if (r.sign() < 0) throw DomainError("square root of negative value");
  if (r.is_zero()) return Alg(Rat(0));
  auto [sn, dn] = squarefree_decompose(r.num());
  auto [sd, dd] = squarefree_decompose(r.den());
  // sqrt(p/q) = sqrt(p q)/q
  Int d = dn * dd;
  Rat coef = Rat(sn, sd * dd);
  if (d == 1) return Alg(coef);
  return Alg::make(Rat(0), coef, d);
}

// first `digits` digits after the decimal point, truncated toward zero
inline std::string decimal_string(const Alg& x, int digits = 12) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  bool neg = x.sign() < 0;
  Alg mag = neg ? -x : x;
  Int m = (mag * Alg(Rat(scale))).floor();
  Int ip = m / scale, fp = m % scale;
  std::string frac = fp.get_str();
  frac.insert(0, digits - frac.size(), '0');
  return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

}  // namespace planeval
