#pragma once

#include <string>

#include "planeval/errors.hpp"
#include "planeval/exact/fp.hpp"
#include "planeval/exact/rational.hpp"

namespace planeval {

// Coefficient field: Q or F_p.
struct FieldSpec {
  bool rational = true;
  uint64_t p = 0;

  static FieldSpec rationals() { return FieldSpec{true, 0}; }
  static FieldSpec prime_field(uint64_t p) {
    Fp::check_prime(p);
    return FieldSpec{false, p};
  }

  // "Q" or "Fp:<prime>"
  static FieldSpec parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s.rfind("Fp:", 0) == 0) {
      std::string body = s.substr(3);
      if (!is_digits(body) || body.size() > 10) throw ParseError("bad field: '" + s + "'");
      return prime_field(std::stoull(body));
    }
    throw ParseError("bad field: '" + s + "' (expected Q or Fp:<prime>)");
  }

  std::string to_string() const { return rational ? "Q" : "Fp:" + std::to_string(p); }
  bool operator==(const FieldSpec& o) const { return rational == o.rational && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

// Element of the coefficient field chosen at runtime.
class FieldElem {
 public:
  FieldElem() : spec_(FieldSpec::rationals()) {}
  explicit FieldElem(const FieldSpec& spec) : spec_(spec) {
    if (!spec.rational) f_ = Fp(0, spec.p);
  }
  FieldElem(const FieldSpec& spec, const Rat& q) : spec_(spec), q_(q) {
    if (!spec.rational) throw DomainError("rational literal in a prime field");
  }
  FieldElem(const FieldSpec& spec, Fp f) : spec_(spec), f_(f) {
    if (spec.rational || f.prime() != spec.p) throw DomainError("prime field element mismatch");
  }

  static FieldElem zero(const FieldSpec& spec) { return FieldElem(spec); }
  static FieldElem one(const FieldSpec& spec) { return from_int(spec, 1); }
  static FieldElem from_int(const FieldSpec& spec, const Int& n) {
    if (spec.rational) return FieldElem(spec, Rat(n));
    Int r = n % Int(static_cast<unsigned long>(spec.p));
    if (r < 0) r += Int(static_cast<unsigned long>(spec.p));
    return FieldElem(spec, Fp(r.get_ui(), spec.p));
  }
  static FieldElem parse(const FieldSpec& spec, const std::string& s) {
    if (spec.rational) return FieldElem(spec, Rat::parse(s));
    return from_int(spec, parse_int(s));
  }

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const { return spec_.rational ? q_.is_zero() : f_.is_zero(); }
  const Rat& rat() const {
    if (!spec_.rational) throw DomainError("not a rational coefficient");
    return q_;
  }
  Fp fp() const {
    if (spec_.rational) throw DomainError("not a prime field coefficient");
    return f_;
  }

  FieldElem operator+(const FieldElem& o) const {
    check(o);
    return spec_.rational ? FieldElem(spec_, q_ + o.q_) : FieldElem(spec_, f_ + o.f_);
  }
  FieldElem operator-(const FieldElem& o) const {
    check(o);
    return spec_.rational ? FieldElem(spec_, q_ - o.q_) : FieldElem(spec_, f_ - o.f_);
  }
  FieldElem operator*(const FieldElem& o) const {
    check(o);
    return spec_.rational ? FieldElem(spec_, q_ * o.q_) : FieldElem(spec_, f_ * o.f_);
  }
  FieldElem operator/(const FieldElem& o) const {
    check(o);
    return spec_.rational ? FieldElem(spec_, q_ / o.q_) : FieldElem(spec_, f_ / o.f_);
  }
  FieldElem operator-() const { return spec_.rational ? FieldElem(spec_, -q_) : FieldElem(spec_, -f_); }
  bool operator==(const FieldElem& o) const {
    check(o);
    return spec_.rational ? q_ == o.q_ : f_ == o.f_;
  }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  std::string to_string() const { return spec_.rational ? q_.to_string() : f_.to_string(); }

 private:
  void check(const FieldElem& o) const {
    if (spec_ != o.spec_) throw DomainError("mixed coefficient fields");
  }
  FieldSpec spec_;
  Rat q_;
  Fp f_;
};

}  // namespace planeval
