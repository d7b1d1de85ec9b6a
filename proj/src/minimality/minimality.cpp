#include "planeval/minimality/minimality.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "planeval/errors.hpp"
#include "planeval/hn/values.hpp"
#include "planeval/invariants/invariants.hpp"

namespace planeval {

namespace {

std::vector<Int> contact_ints(const Invariants& inv) {
  std::vector<Int> out;
  out.reserve(inv.maxcontact.size());
  for (const ValElem& v : inv.maxcontact) out.push_back(v.as_int());
  return out;
}

// smallest integer at or above sqrt(x), for x >= 0
Int ceil_sqrt(const Rat& x) {
  Int a = isqrt(x.floor());
  while (Rat(Int(a * a)) < x) ++a;
  return a;
}

// the first `keep` points of the cluster, arrow at the last one
DualGraph strip_trailing(const Configuration& conf, long keep) {
  Configuration prefix;
  prefix.s = keep;
  prefix.prox.assign(conf.prox.begin(), conf.prox.begin() + keep);
  DualGraph out;
  out.s = keep;
  out.edges = edges_from_configuration(prefix);
  out.arrow = keep;
  return out;
}

}  // namespace

std::optional<NPIWitness> npi_test(const HNExpansion& hn) {
  if (classify(hn) != ValClass::Divisorial)
    throw DomainError("non-positivity at infinity is a divisorial notion");
  ValueData vd = value_data(hn);
  if (hn.is_m_adic()) return NPIWitness{hn, vd.nu_v(), vd.nu_u(), ValElem(Int(1)), ValElem(Int(0))};
  Invariants inv = invariants(hn);
  Int nv = vd.nu_v().as_int();
  Int nu = vd.nu_u().as_int();
  Int last = inv.maxcontact.back().as_int();
  if (!(nv > nu)) return std::nullopt;
  Int slack = Int(nv * nv - last);
  if (slack < 0) return std::nullopt;
  return NPIWitness{hn, vd.nu_v(), vd.nu_u(), inv.maxcontact.back(), ValElem(slack)};
}

ValElem mu_hat_npi(const NPIWitness& w) { return w.nu_v; }

DualGraph enlarge_to_minimal(const NPIWitness& w) {
  Int slack = w.slack.as_int();
  Int nv = w.nu_v.as_int();
  if (slack < 0 || !slack.fits_slong_p())
    throw std::logic_error("witness slack must be a modest non-negative integer");
  DualGraph g = graph_from_structure(w.hn);
  DualGraph out = slack == 0 ? g : append_free_vertices(g, slack.get_si());
  Invariants check = invariants(structure_from_graph(out, w.hn.field));
  Int b0 = check.maxcontact.front().as_int();
  if (!(check.maxcontact.back().as_int() == Int(nv * nv)) ||
      !(check.vol_inv_normalized == Alg(Rat(Int(nv * nv), Int(b0 * b0)))))
    throw std::logic_error("enlarged graph misses nu(v)^2 as its last contact value");
  return out;
}

Iota iota(const std::vector<Int>& mcv) {
  if (mcv.size() < 2) throw DomainError("iota needs a base other than the maximal ideal");
  const Int& b0 = mcv.front();
  const Int& b1 = mcv[1];
  const Int& bl = mcv.back();
  Int disc = Int(b0 * b0 - 4 * b0 * b1 + 4 * bl);
  if (disc < 0) return Iota{true, Alg(Rat(0))};
  Iota out;
  out.value = (Alg(Rat(Int(b0 - 2 * b1))) + sqrt_rat(Rat(disc))) / Alg(Rat(Int(2 * b0)));
  return out;
}

std::vector<Rat> family_B(const std::vector<Int>& mcv, long k) {
  if (k < 0) throw DomainError("shift k must be non-negative");
  Iota io = iota(mcv);
  if (!io.minus_infinity && Alg(Rat(k)) < io.value) throw DomainError("shift k below iota of the base");
  const Int& b0 = mcv.front();
  const Int& b1 = mcv[1];
  const Int& bl = mcv.back();
  Rat upper = Rat(b1, b0) + Rat(k);
  std::vector<Rat> out;
  for (Int a = ceil_sqrt(Rat(bl, Int(b0 * b0)) + Rat(k)); Rat(a) < upper; ++a) out.push_back(Rat(a));
  out.push_back(upper);
  return out;
}

DualGraph build_gamma_k(const DualGraph& g, long k) {
  if (!g.arrow) throw DomainError("family construction needs a divisorial graph");
  if (k < 0) throw DomainError("shift k must be non-negative");
  FieldSpec F = FieldSpec::rationals();
  HNExpansion base = structure_from_graph(g, F);
  if (base.is_m_adic()) throw DomainError("family base must not be the maximal ideal");
  if (k == 0) return g;
  DualGraph out = prepend_free_vertices(g, k);
  Invariants bi = invariants(base);
  Invariants si = invariants(structure_from_graph(out, F));
  Int b0 = bi.maxcontact.front().as_int();
  bool ok = si.maxcontact.size() == bi.maxcontact.size() &&
            si.maxcontact.front().as_int() == b0;
  Int e = b0;  // gcd of the contact values before index i
  for (std::size_t i = 1; ok && i < bi.maxcontact.size(); ++i) {
    ok = Int(Int(k) * b0 * b0) % e == 0 &&
         si.maxcontact[i].as_int() == Int(bi.maxcontact[i].as_int() + Int(k) * b0 * b0 / e);
    e = Int(gcd(e, bi.maxcontact[i].as_int()));
  }
  if (!ok) throw std::logic_error("prepended contact values deviate from the closed form");
  return out;
}

DualGraph build_gamma_k_a(const DualGraph& g, long k, const Rat& a) {
  if (!g.arrow) throw DomainError("family construction needs a divisorial graph");
  FieldSpec F = FieldSpec::rationals();
  Invariants bi = invariants(structure_from_graph(g, F));
  std::vector<Int> mcv = contact_ints(bi);
  std::vector<Rat> B = family_B(mcv, k);
  if (std::find(B.begin(), B.end(), a) == B.end())
    throw DomainError("slope a is outside the admissible set for this base and shift");
  DualGraph out = build_gamma_k(g, k);
  Rat count = (a * a - Rat(k)) * Rat(Int(mcv.front() * mcv.front())) - Rat(mcv.back());
  if (!count.is_integer() || count < Rat(0))
    throw std::logic_error("appended chain length must be a non-negative integer");
  long n = count.num().get_si();
  return n == 0 ? out : append_free_vertices(out, n);
}

FamilyDecision certify_minimal_family(const DualGraph& g) {
  if (!g.arrow) throw DomainError("minimality certification needs a divisorial graph");
  require_valid(g);
  FieldSpec F = FieldSpec::rationals();
  Configuration conf = configuration_from_graph(g);
  long run = 0;
  while (run < g.s - 1 && conf.is_free(g.s - run)) ++run;

  FamilyDecision out;
  bool saw_candidate = false;
  Int best_gap(0);
  for (long L = 0; L <= run; ++L) {
    DualGraph gl = L == 0 ? g : strip_trailing(conf, g.s - L);
    HNExpansion base = structure_from_graph(gl, F);
    if (base.is_m_adic()) continue;
    Invariants inv = invariants(base);
    Int b0 = inv.maxcontact.front().as_int();
    Int b1 = inv.maxcontact[1].as_int();
    Int blast = inv.maxcontact.back().as_int();
    std::vector<long> placements;
    for (long j = 2; j <= base.rows[0].h; ++j) placements.push_back(j);
    placements.push_back(0);
    for (long j : placements) {
      Int nv = j == 0 ? b1 : Int(Int(j) * b0);
      if (!(nv > b0)) continue;
      Int slack = Int(nv * nv - blast);
      if (slack < 0) continue;
      saw_candidate = true;
      if (slack == Int(L)) {
        HNExpansion member = base;
        if (j > 0) member.rows[0].coeffs[static_cast<std::size_t>(j - 1)] = FieldElem::one(F);
        std::optional<NPIWitness> w = npi_test(member);
        if (!w || !(w->slack == ValElem(slack)))
          throw std::logic_error("placement arithmetic disagrees with the witness");
        if (!(enlarge_to_minimal(*w) == g))
          throw std::logic_error("certificate does not rebuild the input graph");
        FamilyCertificate cert;
        cert.omega = std::move(gl);
        cert.k = 0;
        cert.a = Rat(nv, b0);
        cert.placement = j;
        cert.appended = L;
        cert.mu_hat_normalized = sqrt_rat(Rat(Int(nv * nv), Int(b0 * b0)));
        out.certificate = std::move(cert);
        return out;
      }
      Int gap = slack > Int(L) ? Int(slack - L) : Int(Int(L) - slack);
      if (out.rejection.empty() || gap < best_gap) {
        best_gap = gap;
        out.rejection = "slack " + slack.get_str() + " != trailing free chain " + std::to_string(L);
      }
    }
  }
  if (!saw_candidate)
    out.rejection = "no placement with nu(v) > nu(u) and nu(v)^2 >= the last contact value";
  return out;
}

bool satellite_nonminimality_check(const NPIWitness& w) {
  Configuration conf = configuration_from_graph(graph_from_structure(w.hn));
  if (conf.is_free(conf.s)) throw DomainError("audit needs a satellite arrow divisor");
  return w.slack.sign() > 0;
}

}  // namespace planeval
