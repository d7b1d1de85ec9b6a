#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "planeval/errors.hpp"
#include "planeval/exact/quad_irr.hpp"
#include "planeval/exact/rational.hpp"

namespace planeval {

// Continued fraction [a0; a1, ..., (b1, ..., bk)] with partial quotients >= 1
// and an optional repeating block. Finite expansions are kept canonical (last
// quotient >= 2 unless the expansion is a single entry). A purely periodic
// expansion has an empty preperiod and prints as [(b1, ..., bk)].
class ContFrac {
 public:
  explicit ContFrac(std::vector<Int> pre, std::vector<Int> per = {}) : pre_(std::move(pre)), per_(std::move(per)) {
    if (pre_.empty() && per_.empty()) throw ValidationError("continued fraction needs at least one quotient");
    for (const Int& a : pre_)
      if (a < 1) throw ValidationError("partial quotient below 1: " + a.get_str());
    for (const Int& b : per_)
      if (b < 1) throw ValidationError("periodic quotient below 1: " + b.get_str());
    if (per_.empty() && pre_.size() > 1 && pre_.back() < 2)
      throw ValidationError("finite continued fraction must end with a quotient >= 2");
  }

  const std::vector<Int>& preperiod() const { return pre_; }
  const std::vector<Int>& period() const { return per_; }
  bool finite() const { return per_.empty(); }

  bool operator==(const ContFrac& o) const { return pre_ == o.pre_ && per_ == o.per_; }
  bool operator!=(const ContFrac& o) const { return !(*this == o); }

  // "[a0; a1, a2, (b1, b2)]"; "[a0]"; "[(b1)]"
  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < pre_.size(); ++i) {
      s += pre_[i].get_str();
      if (i == 0 && (pre_.size() > 1 || !per_.empty())) s += "; ";
      else if (i + 1 < pre_.size()) s += ", ";
      else if (!per_.empty()) s += ", ";
    }
    if (!per_.empty()) {
      s += "(";
      for (size_t i = 0; i < per_.size(); ++i) s += (i ? ", " : "") + per_[i].get_str();
      s += ")";
    }
    return s + "]";
  }

  static ContFrac parse(const std::string& in) {
    std::vector<Int> pre, per;
    size_t pos = 0;
    auto ws = [&] {
      while (pos < in.size() && (in[pos] == ' ' || in[pos] == '\t')) ++pos;
    };
    auto fail = [&] { return ParseError("bad continued fraction: '" + in + "'"); };
    ws();
    if (pos == in.size() || in[pos] != '[') throw fail();
    ++pos;
    bool in_period = false, closed = false, need_item = true;
    while (true) {
      ws();
      if (pos == in.size()) throw fail();
      char c = in[pos];
      if (c == ']') {
        if (in_period || need_item) throw fail();
        ++pos;
        break;
      }
      if (need_item) {
        if (c == '(') {
          if (in_period || closed) throw fail();
          in_period = true;
          ++pos;
          continue;
        }
        if (c < '0' || c > '9') throw fail();
        size_t start = pos;
        while (pos < in.size() && in[pos] >= '0' && in[pos] <= '9') ++pos;
        (in_period ? per : pre).push_back(Int(in.substr(start, pos - start)));
        need_item = false;
        continue;
      }
      if (c == ',' || c == ';') {
        if (closed) throw fail();
        need_item = true;
        ++pos;
        continue;
      }
      if (c == ')') {
        if (!in_period) throw fail();
        in_period = false;
        closed = true;
        ++pos;
        continue;
      }
      throw fail();
    }
    ws();
    if (pos != in.size()) throw fail();
    return ContFrac(std::move(pre), std::move(per));
  }

  // exact value; finite -> rational, periodic -> quadratic irrational
  Alg eval() const {
    Alg x(Rat(0));
    if (!per_.empty()) {
      // fixed point y of one period: y = (A y + B) / (C y + D), positive root
      Int A = 1, B = 0, C = 0, D = 1;
      for (size_t i = per_.size(); i-- > 0;) {
        const Int& b = per_[i];
        Int nA = b * A + C, nB = b * B + D;
        C = A;
        D = B;
        A = nA;
        B = nB;
      }
      Rat half(Int(1), Int(2));
      Alg disc = sqrt_rat(Rat(Int((A - D) * (A - D) + 4 * B * C)));
      x = (Alg(Rat(Int(A - D))) + disc) * Alg(half) / Alg(Rat(C));
      if (!(x > Alg(Rat(1)))) throw DomainError("periodic part does not exceed 1");
    } else {
      x = Alg(Rat(pre_.back()));
    }
    size_t skip_last = per_.empty() ? 1 : 0;
    for (size_t i = pre_.size() - skip_last; i-- > 0;) x = Alg(Rat(pre_[i])) + Alg(Rat(1)) / x;
    return x;
  }

  // same quotient stream with the shortest preperiod and a primitive period
  ContFrac canonical() const {
    if (per_.empty()) return *this;
    std::vector<Int> pre = pre_, per = per_;
    for (size_t len = 1; len * 2 <= per.size(); ++len) {
      if (per.size() % len != 0) continue;
      bool repeats = true;
      for (size_t i = len; i < per.size() && repeats; ++i) repeats = per[i] == per[i - len];
      if (repeats) {
        per.resize(len);
        break;
      }
    }
    while (!pre.empty() && pre.back() == per.back()) {
      per.insert(per.begin(), per.back());
      per.pop_back();
      pre.pop_back();
    }
    return ContFrac(std::move(pre), std::move(per));
  }

 private:
  std::vector<Int> pre_, per_;
};

// canonical continued fraction of a rational >= 1
inline ContFrac cf_of_rat(const Rat& r) {
  if (r < Rat(1)) throw DomainError("continued fraction domain is x >= 1 here");
  std::vector<Int> q;
  Int n = r.num(), d = r.den();
  while (d != 0) {
    Int a, rem;
    mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    q.push_back(a);
    n = d;
    d = rem;
  }
  if (q.size() > 1 && q.back() == 1) {
    q.pop_back();
    q.back() += 1;
  }
  return ContFrac(std::move(q));
}

// continued fraction of a quadratic irrational > 1; the periodic part is
// detected through the (P, Q) state of x_i = (P_i + sqrt(N)) / Q_i
inline ContFrac cf_of_quad(const QuadIrr& x) {
  if (!(Alg(x) > Alg(Rat(1)))) throw DomainError("continued fraction domain is x > 1 here");
  Int L = x.a().den() * x.b().den() / gcd_int(x.a().den(), x.b().den());
  Int A = x.a().num() * (L / x.a().den());
  Int B = x.b().num() * (L / x.b().den());
  int s = B < 0 ? -1 : 1;
  Int P = s * A, N = B * B * x.d(), Q = s * L;
  if ((N - P * P) % Q != 0) {
    Int a = abs(Q);
    P *= a;
    N *= a * a;
    Q *= a;
  }
  std::vector<Int> quotients;
  std::map<std::pair<std::string, std::string>, size_t> seen;
  const size_t cap = 100000;
  while (quotients.size() < cap) {
    auto key = std::make_pair(P.get_str(), Q.get_str());
    auto it = seen.find(key);
    if (it != seen.end()) {
      std::vector<Int> pre(quotients.begin(), quotients.begin() + it->second);
      std::vector<Int> per(quotients.begin() + it->second, quotients.end());
      return ContFrac(std::move(pre), std::move(per));
    }
    seen[key] = quotients.size();
    // floor((P + sqrt(N)) / Q); for Q < 0 round the irrational numerator up
    Int num = P + isqrt(N) + (Q < 0 ? 1 : 0);
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
    quotients.push_back(a);
    P = a * Q - P;
    Q = (N - P * P) / Q;
  }
  throw CapabilityError("period not found within " + std::to_string(cap) + " quotients");
}

inline ContFrac cf_of_alg(const Alg& x) {
  return x.is_rational() ? cf_of_rat(x.rat()) : cf_of_quad(x.quad());
}

// head quotients prepended to an existing expansion
inline ContFrac cf_concat(const std::vector<Int>& head, const ContFrac& tail) {
  std::vector<Int> pre = head;
  pre.insert(pre.end(), tail.preperiod().begin(), tail.preperiod().end());
  return ContFrac(std::move(pre), tail.period());
}

}  // namespace planeval
