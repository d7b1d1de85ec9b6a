#include "planeval/invariants/invariants.hpp"

#include <algorithm>

namespace planeval {

namespace {

// a / b for proportional values (a = n b with n a plain integer)
Int exact_ratio(const ValElem& a, const ValElem& b) {
  if (b.is_zero()) throw DomainError("division by zero in the multiplicity ladder");
  Int n;
  if (b.q() == 0) {
    if (a.q() != 0 || a.p() % b.p() != 0) throw DomainError("non-integer quotient in the multiplicity ladder");
    n = a.p() / b.p();
  } else {
    if (a.q() % b.q() != 0) throw DomainError("non-integer quotient in the multiplicity ladder");
    n = a.q() / b.q();
    if (a.p() != n * b.p()) throw DomainError("non-integer quotient in the multiplicity ladder");
  }
  return n;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

}  // namespace

Invariants invariants(const HNExpansion& hn) {
  ValClass cls = classify(hn);
  if (cls == ValClass::Curve)
    throw ValidationError(
        "unsupported class for invariants: truncated curve data defines a semivaluation; "
        "use vdelta to place it in its affine volume family");

  Invariants inv;
  ValueData vd = value_data(hn);
  inv.m = vd.m;
  inv.puiseux = exponents_from_structure(hn);

  if (hn.is_m_adic()) {
    inv.g = -1;
    inv.charseq = {ValElem(1)};
    inv.maxcontact = {ValElem(1)};
    inv.eseq = {ValElem(1)};
    inv.nseq = {Int(1)};
    inv.vol_inv = Alg(1);
    inv.vol_inv_normalized = Alg(1);
    return inv;
  }

  const std::vector<std::size_t> fr = hn.free_rows();
  inv.g = static_cast<long>(fr.size()) - 1;
  auto nu = [&vd](std::size_t i) { return vd.w[i + 1]; };

  for (std::size_t j = 0; j < fr.size(); ++j) inv.eseq.push_back(nu(fr[j]));

  inv.nseq.push_back(Int(1));
  for (std::size_t j = 1; j < fr.size(); ++j)
    inv.nseq.push_back(exact_ratio(inv.eseq[j - 1], inv.eseq[j]));

  inv.maxcontact.push_back(inv.eseq[0]);
  inv.charseq.push_back(inv.eseq[0]);
  for (std::size_t j = 0; j < fr.size(); ++j) {
    const HNRow& row = hn.rows[fr[j]];
    ValElem step = inv.eseq[j] * Int(row.h - row.k) + nu(fr[j] + 1);
    inv.maxcontact.push_back(inv.maxcontact[j] * inv.nseq[j] + step);
    inv.charseq.push_back(inv.charseq[j] + step);
  }

  if (cls == ValClass::Divisorial) {
    // e_j is the running gcd of the contact values
    Int acc = 0;
    for (std::size_t j = 0; j < fr.size(); ++j) {
      acc = gcd_int(acc, inv.maxcontact[j].as_int());
      if (acc != inv.eseq[j].as_int())
        throw DomainError("internal: contact value gcd ladder mismatch");
    }
    if (hn.rows.back().kind == RowKind::Power) {
      // satellite arrow: one more semigroup generator, with quotient e_g
      Int eg = inv.eseq.back().as_int();
      if (gcd_int(eg, inv.maxcontact.back().as_int()) != 1)
        throw DomainError("internal: terminal contact value not coprime to e_g");
      inv.nseq.push_back(eg);
      inv.maxcontact.push_back(inv.maxcontact.back() * eg);
    }
    inv.vol_inv = inv.maxcontact.back().to_alg();
  } else {
    inv.vol_inv = inv.maxcontact.back().to_alg() * inv.eseq.back().to_alg();
  }
  inv.vol_inv_normalized = inv.vol_inv / (inv.maxcontact[0].to_alg() * inv.maxcontact[0].to_alg());
  return inv;
}

CurveContact curve_contact_data(const HNExpansion& hn) {
  if (classify(hn) != ValClass::Curve)
    throw DomainError("curve contact data needs truncated curve input");
  ValueData vd = value_data(hn);
  auto nu = [&vd](std::size_t i) { return vd.w[i + 1]; };
  const std::vector<std::size_t> fr = hn.free_rows();

  CurveContact out;
  out.g = static_cast<long>(fr.size()) - 1;
  for (std::size_t j = 0; j < fr.size(); ++j) out.e.push_back(nu(fr[j]).as_int());
  out.beta.push_back(out.e[0]);
  for (std::size_t j = 0; j + 1 < fr.size(); ++j) {
    const HNRow& row = hn.rows[fr[j]];
    Int n = (j == 0) ? Int(1) : out.e[j - 1] / out.e[j];
    out.beta.push_back(n * out.beta[j] + Int(row.h - row.k) * out.e[j] + nu(fr[j] + 1).as_int());
  }
  return out;
}

bool eq_delta_check(const Invariants& inv) {
  if (inv.g < 0) return inv.puiseux == std::vector<Alg>{Alg(1)};
  if (inv.puiseux.size() != static_cast<std::size_t>(inv.g) + 2) return false;
  for (long j = 0; j <= inv.g; ++j) {
    std::size_t i = static_cast<std::size_t>(j);
    Alg lhs = inv.puiseux[i + 1];
    Alg rhs = (inv.maxcontact[i + 1].to_alg() - inv.maxcontact[i].to_alg() * Alg(Rat(inv.nseq[i]))) /
                  inv.eseq[i].to_alg() +
              Alg(1);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::vector<Int> semigroup_generators(const HNExpansion& hn) {
  if (classify(hn) != ValClass::Divisorial)
    throw DomainError("semigroup generators are computed for divisorial valuations only");
  Invariants inv = invariants(hn);
  std::vector<Int> out;
  for (const ValElem& b : inv.maxcontact) out.push_back(b.as_int());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<std::string, std::string>> report_pairs(const Invariants& inv) {
  auto vals = [](const std::vector<ValElem>& v) {
    std::vector<std::string> s;
    for (const ValElem& x : v) s.push_back(x.to_string());
    return join(s);
  };
  std::vector<std::string> pu, ns;
  for (const Alg& a : inv.puiseux) pu.push_back(a.to_string());
  for (const Int& n : inv.nseq) ns.push_back(n.get_str());

  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("m", vals(inv.m));
  out.emplace_back("puiseux", join(pu));
  out.emplace_back("charseq", vals(inv.charseq));
  out.emplace_back("maxcontact", vals(inv.maxcontact));
  out.emplace_back("eseq", vals(inv.eseq));
  out.emplace_back("nseq", join(ns));
  out.emplace_back("vol_inv", inv.vol_inv.to_string());
  out.emplace_back("vol_inv_normalized", inv.vol_inv_normalized.to_string());
  return out;
}

}  // namespace planeval
