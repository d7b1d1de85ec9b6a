#pragma once

#include <optional>
#include <string>

#include "planeval/errors.hpp"
#include "planeval/exact/quad_irr.hpp"
#include "planeval/exact/rational.hpp"

namespace planeval {

// Value p + q*gamma with integer p, q. gamma is absent for plain integers
// (then q = 0); values attached to different gammas never mix.
class ValElem {
 public:
  ValElem() : p_(0), q_(0) {}
  ValElem(const Int& p) : p_(p), q_(0) {}  // NOLINT: implicit by design
  ValElem(long p) : p_(p), q_(0) {}        // NOLINT
  ValElem(const Int& p, const Int& q, const QuadIrr& gamma) : p_(p), q_(q) {
    if (q_ != 0) gamma_ = gamma;
  }

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  bool is_integer() const { return q_ == 0; }
  const QuadIrr& gamma() const {
    if (!gamma_) throw DomainError("value is a plain integer");
    return *gamma_;
  }
  Int as_int() const {
    if (!is_integer()) throw DomainError("value is not an integer: " + to_string());
    return p_;
  }

  Alg to_alg() const {
    if (is_integer()) return Alg(Rat(p_));
    return Alg(Rat(p_)) + Alg(Rat(q_)) * Alg(*gamma_);
  }

  ValElem operator+(const ValElem& o) const {
    auto g = merged_gamma(o);
    return ValElem(p_ + o.p_, q_ + o.q_, g ? *g : dummy());
  }
  ValElem operator-(const ValElem& o) const {
    auto g = merged_gamma(o);
    return ValElem(p_ - o.p_, q_ - o.q_, g ? *g : dummy());
  }
  ValElem operator*(const Int& n) const { return ValElem(p_ * n, q_ * n, gamma_ ? *gamma_ : dummy()); }

  int sign() const { return is_integer() ? (p_ < 0 ? -1 : p_ > 0 ? 1 : 0) : to_alg().sign(); }
  bool is_zero() const { return p_ == 0 && q_ == 0; }

  std::string to_string() const {
    if (is_integer()) return p_.get_str();
    std::string g = (q_ == 1) ? "gamma" : (q_ == -1) ? "-gamma" : q_.get_str() + "*gamma";
    if (p_ == 0) return g;
    return p_.get_str() + (q_ > 0 ? "+" : "") + g;
  }

 private:
  static QuadIrr dummy() { return QuadIrr(Rat(0), Rat(1), Int(2)); }
  // gammas must agree where both sides actually use one
  std::optional<QuadIrr> merged_gamma(const ValElem& o) const {
    if (gamma_ && o.gamma_ && !(*gamma_ == *o.gamma_))
      throw DomainError("values attached to different gammas: " + gamma_->to_string() + " vs " + o.gamma_->to_string());
    return gamma_ ? gamma_ : o.gamma_;
  }

  Int p_, q_;
  std::optional<QuadIrr> gamma_;

  friend int valelem_cmp(const ValElem& a, const ValElem& b);
};

// exact three-way comparison; mixing two different gammas is an error
inline int valelem_cmp(const ValElem& a, const ValElem& b) {
  auto g = a.merged_gamma(b);
  Int dp = a.p() - b.p(), dq = a.q() - b.q();
  if (dq == 0) return dp < 0 ? -1 : dp > 0 ? 1 : 0;
  return (Alg(Rat(dp)) + Alg(Rat(dq)) * Alg(*g)).sign();
}

inline bool operator==(const ValElem& a, const ValElem& b) { return valelem_cmp(a, b) == 0; }
inline bool operator!=(const ValElem& a, const ValElem& b) { return valelem_cmp(a, b) != 0; }
inline bool operator<(const ValElem& a, const ValElem& b) { return valelem_cmp(a, b) < 0; }
inline bool operator<=(const ValElem& a, const ValElem& b) { return valelem_cmp(a, b) <= 0; }
inline bool operator>(const ValElem& a, const ValElem& b) { return valelem_cmp(a, b) > 0; }
inline bool operator>=(const ValElem& a, const ValElem& b) { return valelem_cmp(a, b) >= 0; }

// exact ratio of two values (used for multiplicity quotients and volumes)
inline Alg valelem_ratio(const ValElem& a, const ValElem& b) {
  if (b.is_zero()) throw DomainError("division by zero value");
  return a.to_alg() / b.to_alg();
}

}  // namespace planeval
