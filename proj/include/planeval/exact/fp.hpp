#pragma once

#include <cstdint>
#include <string>

#include "planeval/errors.hpp"
#include "planeval/exact/rational.hpp"

namespace planeval {

// Element of F_p. p <= 2^31 - 1 so products fit in uint64 without overflow.
class Fp {
 public:
  static constexpr uint64_t max_prime = 2147483647ULL;

  static void check_prime(uint64_t p) {
    if (p < 2 || p > max_prime) throw ValidationError("field characteristic out of range: " + std::to_string(p));
    Int pp(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(pp.get_mpz_t(), 40) == 0)
      throw ValidationError("field characteristic is not prime: " + std::to_string(p));
  }

  Fp() : v_(0), p_(0) {}
  Fp(uint64_t v, uint64_t p) : v_(0), p_(p) {
    if (p < 2) throw DomainError("invalid field characteristic");
    v_ = v % p;
  }

  uint64_t value() const { return v_; }
  uint64_t prime() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const { return Fp((v_ + o.with(p_)) % p_, p_); }
  Fp operator-(const Fp& o) const { return Fp((v_ + p_ - o.with(p_)) % p_, p_); }
  Fp operator*(const Fp& o) const { return Fp((v_ * o.with(p_)) % p_, p_); }
  Fp operator/(const Fp& o) const {
    uint64_t w = o.with(p_);
    if (w == 0) throw DomainError("division by zero");
    return *this * Fp(inverse(w, p_), p_);
  }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  bool operator==(const Fp& o) const { return v_ == o.with(p_); }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  std::string to_string() const { return std::to_string(v_); }

  static uint64_t inverse(uint64_t a, uint64_t p) {
    // extended Euclid in signed 64-bit; values stay below 2^31
    int64_t t = 0, nt = 1, r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a);
    while (nr != 0) {
      int64_t q = r / nr;
      int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw DomainError("not invertible mod p");
    return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(p) : t);
  }

 private:
  uint64_t with(uint64_t p) const {
    if (p_ != p) throw DomainError("mixed prime fields");
    return v_;
  }
  uint64_t v_, p_;
};

}  // namespace planeval
