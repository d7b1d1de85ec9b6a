#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "planeval/errors.hpp"

namespace planeval {

using Int = mpz_class;

inline bool is_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline Int parse_int(const std::string& s) {
  std::string body = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? s.substr(1) : s;
  if (!is_digits(body)) throw ParseError("bad integer: '" + s + "'");
  Int v(body);
  return (!s.empty() && s[0] == '-') ? Int(-v) : v;
}

// floor(sqrt(n)), n >= 0
inline Int isqrt(const Int& n) {
  if (n < 0) throw DomainError("isqrt of negative integer");
  return sqrt(n);
}

inline bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// n = s^2 * d with d squarefree; n > 0. Trial division up to 10^6, then the
// remaining cofactor is certified square, prime, or a product of two distinct
// primes; anything bigger is refused rather than guessed.
inline std::pair<Int, Int> squarefree_decompose(Int n) {
  if (n <= 0) throw DomainError("squarefree decomposition needs n > 0");
  Int s = 1, d = 1;
  const long bound = 1000000;
  for (long p = 2; p <= bound && n > 1; p == 2 ? p = 3 : p += 2) {
    Int pp(p);
    if (n % pp != 0) continue;
    int e = 0;
    while (n % pp == 0) {
      n /= pp;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= pp;
    if (e % 2) d *= pp;
  }
  if (n > 1) {
    if (is_perfect_square(n)) {
      s *= isqrt(n);
    } else if (Int(bound) * bound > n || mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
      // below bound^2 a non-square cofactor with no small factor is
      // squarefree (prime or product of two distinct primes)
      d *= n;
    } else {
      throw CapabilityError("cannot certify squarefree part of " + n.get_str());
    }
  }
  return {s, d};
}

// Rational number, always in lowest terms with positive denominator.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design
  Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) {
    if (v_.get_den() == 0) throw DomainError("zero denominator");
    v_.canonicalize();
  }

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw DomainError("division by zero");
    return Rat(mpq_class(v_ / o.v_));
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  Int floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
  }
  Int ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
  }

  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    std::string d = s.substr(slash + 1);
    if (!is_digits(d)) throw ParseError("bad rational: '" + s + "'");
    return Rat(parse_int(s.substr(0, slash)), Int(d));
  }

  std::string to_string() const {
    return is_integer() ? num().get_str() : num().get_str() + "/" + den().get_str();
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

inline Rat pow_int(const Rat& r, long e) {
  if (e < 0) return Rat(1) / pow_int(r, -e);
  Rat acc(1), base = r;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

inline Int gcd_int(const Int& a, const Int& b) { return gcd(a, b); }

}  // namespace planeval
