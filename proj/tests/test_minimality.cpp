#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "planeval/errors.hpp"
#include "planeval/eval/bivar_poly.hpp"
#include "planeval/graph/dual_graph.hpp"
#include "planeval/hn/expansion.hpp"
#include "planeval/hn/sample.hpp"
#include "planeval/invariants/invariants.hpp"
#include "planeval/linsys/linear_systems.hpp"
#include "planeval/minimality/copositive.hpp"
#include "planeval/minimality/minimality.hpp"
#include "planeval/minimality/vdelta.hpp"
#include "planeval/rng.hpp"

using namespace planeval;

namespace {

const FieldSpec Q = FieldSpec::rationals();

FieldElem q(long n) { return FieldElem(Q, Rat(Int(n))); }

HNExpansion w1(long a01) {
  HNExpansion hn;
  hn.rows = {free_row(1, 1, {q(a01)}), power_row(2)};
  return hn;
}

HNExpansion m_adic() {
  HNExpansion hn;
  hn.rows = {free_row(1, 1, {q(0)})};
  return hn;
}

HNExpansion w3_line() {
  HNExpansion hn;
  hn.rows = {free_row(4, 1, {q(0), q(9), q(0), q(0)})};
  return hn;
}

HNExpansion two_row(long c) {
  HNExpansion hn;
  hn.rows = {free_row(2, 1, {q(0), q(c)}), power_row(2)};
  return hn;
}

HNExpansion flagship() {
  HNExpansion hn;
  hn.rows = {free_row(2, 1, {q(0), q(7)}),
             free_row(8, 2, {q(1), q(0), q(0), q(0), q(0), q(0), q(0)})};
  return hn;
}

HNExpansion w1_irr() {
  HNExpansion hn;
  hn.rows = {free_row(1, 1, {q(0)}), free_row(2, 2, {q(1)})};
  hn.terminal.kind = ValClass::Irrational;
  hn.terminal.tail = ContFrac({}, {Int(2)});
  return hn;
}

HNExpansion smooth_curve() {
  HNExpansion hn;
  hn.rows = {free_row(2, 1, {q(0), q(0)})};
  hn.terminal.kind = ValClass::Curve;
  return hn;
}

HNExpansion cusp_curve() {
  HNExpansion hn;
  hn.rows = {free_row(1, 1, {q(0)}), free_row(2, 2, {q(1)})};
  hn.terminal.kind = ValClass::Curve;
  return hn;
}

DualGraph chain(long n) {
  DualGraph g;
  g.s = n;
  for (long i = 1; i < n; ++i) g.edges.push_back({i, i + 1});
  g.arrow = n;
  return g;
}

std::vector<Int> contacts(const HNExpansion& hn) {
  std::vector<Int> out;
  for (const ValElem& v : invariants(hn).maxcontact) out.push_back(v.as_int());
  return out;
}

std::vector<Int> mseq(const HNExpansion& hn) {
  std::vector<Int> out;
  for (const ValElem& v : invariants(hn).m) out.push_back(v.as_int());
  return out;
}

std::vector<Int> mults(const DualGraph& g) {
  return multiplicities_from_configuration(configuration_from_graph(g));
}

GMatrix gm(const std::vector<std::vector<long>>& rows) {
  GMatrix g;
  for (const auto& r : rows) {
    std::vector<Int> row;
    for (long x : r) row.push_back(Int(x));
    g.a.push_back(row);
  }
  return g;
}

Rat qform(const GMatrix& g, const std::vector<Rat>& x) {
  Rat s(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) s += Rat(g.a[i][j]) * x[i] * x[j];
  return s;
}

BivarPoly poly(const std::string& expr) { return parse_poly_expr(expr, Q); }

}  // namespace

TEST_CASE("witnesses for non-positivity at infinity") {
  auto w = npi_test(w3_line());
  REQUIRE(w.has_value());
  CHECK(w->nu_v == ValElem(Int(2)));
  CHECK(w->nu_u == ValElem(Int(1)));
  CHECK(w->last_mcv == ValElem(Int(4)));
  CHECK(w->slack == ValElem(Int(0)));
  CHECK(mu_hat_npi(*w) == ValElem(Int(2)));

  CHECK_FALSE(npi_test(w1(5)).has_value());

  auto w1w = npi_test(w1(0));
  REQUIRE(w1w.has_value());
  CHECK(w1w->nu_v == ValElem(Int(3)));
  CHECK(w1w->nu_u == ValElem(Int(2)));
  CHECK(w1w->slack == ValElem(Int(3)));

  auto wm = npi_test(m_adic());
  REQUIRE(wm.has_value());
  CHECK(wm->nu_v == ValElem(Int(1)));
  CHECK(wm->slack == ValElem(Int(0)));
  CHECK(mu_hat_npi(*wm) == ValElem(Int(1)));

  auto wt = npi_test(two_row(3));
  REQUIRE(wt.has_value());
  CHECK(wt->nu_v == ValElem(Int(4)));
  CHECK(wt->last_mcv == ValElem(Int(10)));
  CHECK(wt->slack == ValElem(Int(6)));

  auto wf = npi_test(flagship());
  REQUIRE(wf.has_value());
  CHECK(wf->nu_v == ValElem(Int(4)));
  CHECK(wf->slack == ValElem(Int(0)));

  CHECK_THROWS_AS(npi_test(w1_irr()), DomainError);
  CHECK_THROWS_AS(npi_test(cusp_curve()), DomainError);
}

TEST_CASE("witnessed valuations grow linearly in the degree") {
  HNExpansion deep;
  deep.rows = {free_row(7, 1, {q(0), q(0), q(3), q(0), q(0), q(0), q(0)})};
  auto wd = npi_test(deep);
  REQUIRE(wd.has_value());
  CHECK(wd->slack == ValElem(Int(2)));

  std::vector<HNExpansion> npi_cases = {w3_line(), w1(0), two_row(3), deep};
  for (const HNExpansion& hn : npi_cases) {
    auto w = npi_test(hn);
    REQUIRE(w.has_value());
    Int nv = w->nu_v.as_int();
    for (long d = 1; d <= 3; ++d) CHECK(mu_d(hn, d) == ValElem(Int(d * nv)));
  }
  auto wf = npi_test(flagship());
  REQUIRE(wf.has_value());
  for (long d = 1; d <= 2; ++d) CHECK(mu_d(flagship(), d) == ValElem(Int(d * 4)));
}

TEST_CASE("enlarging a witness cluster to a minimal family") {
  auto w3 = npi_test(w3_line());
  REQUIRE(w3.has_value());
  CHECK(enlarge_to_minimal(*w3) == graph_from_structure(w3_line()));

  auto wm = npi_test(m_adic());
  REQUIRE(wm.has_value());
  DualGraph point;
  point.arrow = 1;
  CHECK(enlarge_to_minimal(*wm) == point);

  auto ww = npi_test(w1(0));
  REQUIRE(ww.has_value());
  DualGraph g1 = enlarge_to_minimal(*ww);
  CHECK(g1.s == 6);
  CHECK(g1 == append_free_vertices(graph_from_structure(w1(0)), 3));
  CHECK(mults(g1) == std::vector<Int>{Int(2), Int(1), Int(1), Int(1), Int(1), Int(1)});
  CHECK(contacts(structure_from_graph(g1, Q)).back() == 9);

  auto wt = npi_test(two_row(3));
  REQUIRE(wt.has_value());
  CHECK(enlarge_to_minimal(*wt) == graph_from_structure(flagship()));

  NPIWitness bad = *wt;
  bad.slack = ValElem(Int(2));
  CHECK_THROWS_AS(enlarge_to_minimal(bad), std::logic_error);
}

TEST_CASE("iota of a base cluster") {
  Iota i1 = iota(contacts(w1(0)));
  CHECK_FALSE(i1.minus_infinity);
  CHECK(i1.value == Alg(Rat(-1, 2)));

  Iota i3 = iota(contacts(w3_line()));
  CHECK_FALSE(i3.minus_infinity);
  CHECK(i3.value == Alg(Rat(-3)));

  Iota ifl = iota({Int(2), Int(5), Int(16)});
  CHECK_FALSE(ifl.minus_infinity);
  CHECK(ifl.value == Alg::make(Rat(-2), Rat(1, 2), Int(7)));

  CHECK(iota({Int(2), Int(5), Int(8)}).minus_infinity);
  CHECK_THROWS_AS(iota({Int(1)}), DomainError);
}

TEST_CASE("admissible slopes of the shifted families") {
  CHECK(family_B(contacts(w1(0)), 1) == std::vector<Rat>{Rat(2), Rat(5, 2)});
  CHECK(family_B(contacts(w1(0)), 0) == std::vector<Rat>{Rat(3, 2)});
  CHECK(family_B(contacts(w3_line()), 0) == std::vector<Rat>{Rat(2), Rat(3), Rat(4)});
  CHECK(family_B({Int(2), Int(5), Int(8)}, 0) == std::vector<Rat>{Rat(2), Rat(5, 2)});

  CHECK_THROWS_AS(family_B(contacts(w1(0)), -1), DomainError);
  CHECK_THROWS_AS(family_B({Int(1), Int(2), Int(9)}, 0), DomainError);
  CHECK_THROWS_AS(family_B({Int(1), Int(2), Int(9)}, 1), DomainError);
  CHECK(family_B({Int(1), Int(2), Int(9)}, 2) == std::vector<Rat>{Rat(4)});
}

TEST_CASE("prepending free points shifts the contact values") {
  DualGraph w1g = graph_from_structure(w1(0));
  DualGraph shifted = build_gamma_k(w1g, 1);
  CHECK(shifted == graph_from_structure(two_row(3)));
  CHECK(contacts(structure_from_graph(shifted, Q)) == std::vector<Int>{Int(2), Int(5), Int(10)});

  DualGraph w3g = graph_from_structure(w3_line());
  CHECK(build_gamma_k(w3g, 2) == chain(6));
  CHECK(contacts(structure_from_graph(chain(6), Q)) == std::vector<Int>{Int(1), Int(6)});

  CHECK(build_gamma_k(w1g, 0) == w1g);

  DualGraph point;
  point.arrow = 1;
  CHECK_THROWS_AS(build_gamma_k(point, 1), DomainError);
  CHECK_THROWS_AS(build_gamma_k(w1g, -1), DomainError);
  CHECK_THROWS_AS(build_gamma_k(graph_from_structure(w1_irr()), 1), DomainError);

  Int sq(0);
  for (const Int& m : mults(shifted)) sq += m * m;
  CHECK(contacts(structure_from_graph(shifted, Q)).back() == sq);
}

TEST_CASE("appending the slope correction yields the family graph") {
  DualGraph w1g = graph_from_structure(w1(0));
  DualGraph fam = build_gamma_k_a(w1g, 1, Rat(2));
  CHECK(fam == graph_from_structure(flagship()));
  CHECK(mults(fam) == std::vector<Int>{Int(2), Int(2), Int(1), Int(1), Int(1), Int(1), Int(1),
                                       Int(1), Int(1), Int(1)});

  DualGraph w3g = graph_from_structure(w3_line());
  CHECK(build_gamma_k_a(w3g, 0, Rat(2)) == w3g);

  DualGraph wide = build_gamma_k_a(w1g, 1, Rat(5, 2));
  CHECK(wide.s == 19);
  CHECK(contacts(structure_from_graph(wide, Q)) == std::vector<Int>{Int(2), Int(5), Int(25)});

  CHECK_THROWS_AS(build_gamma_k_a(w1g, 1, Rat(3)), DomainError);
}

TEST_CASE("random bases append non-negative corrections") {
  Rng rng(20260815u);
  StructureOptions opt;
  long built = 0;
  for (int it = 0; it < 40; ++it) {
    HNExpansion hn = random_structure(rng, opt);
    if (hn.is_m_adic()) continue;
    DualGraph g = graph_from_structure(hn);
    std::vector<Int> mcv = contacts(hn);
    Rat b0sq(Int(mcv.front() * mcv.front()));
    for (long k = 0; k <= 2; ++k) {
      std::vector<Rat> slopes;
      try {
        slopes = family_B(mcv, k);
      } catch (const DomainError&) {
        continue;
      }
      DualGraph shifted = build_gamma_k(g, k);
      for (const Rat& a : slopes) {
        if ((a * a - Rat(Int(k))) * b0sq - Rat(mcv.back()) > Rat(800)) continue;
        DualGraph ga = build_gamma_k_a(g, k, a);
        CHECK(ga.s >= shifted.s);
        CHECK(Rat(contacts(structure_from_graph(ga, Q)).back()) == a * a * b0sq);
        ++built;
      }
    }
  }
  CHECK(built > 10);
}

TEST_CASE("certifying minimality of very general members") {
  FamilyDecision fd = certify_minimal_family(graph_from_structure(flagship()));
  REQUIRE(fd.certificate.has_value());
  CHECK(fd.certificate->omega == graph_from_structure(flagship()));
  CHECK(fd.certificate->k == 0);
  CHECK(fd.certificate->a == Rat(2));
  CHECK(fd.certificate->placement == 2);
  CHECK(fd.certificate->appended == 0);
  CHECK(fd.certificate->mu_hat_normalized == Alg(Rat(2)));

  FamilyDecision c9 = certify_minimal_family(chain(9));
  REQUIRE(c9.certificate.has_value());
  CHECK(c9.certificate->a == Rat(3));
  CHECK(c9.certificate->placement == 3);
  CHECK(c9.certificate->appended == 0);
  CHECK(c9.certificate->mu_hat_normalized == Alg(Rat(3)));

  FamilyDecision c4 = certify_minimal_family(chain(4));
  REQUIRE(c4.certificate.has_value());
  CHECK(c4.certificate->a == Rat(2));
  CHECK(c4.certificate->placement == 2);

  DualGraph w1p3 = append_free_vertices(graph_from_structure(w1(0)), 3);
  FamilyDecision fw = certify_minimal_family(w1p3);
  REQUIRE(fw.certificate.has_value());
  CHECK(fw.certificate->omega == w1p3);
  CHECK(fw.certificate->placement == 0);
  CHECK(fw.certificate->appended == 0);
  CHECK(fw.certificate->a == Rat(3, 2));
  CHECK(fw.certificate->mu_hat_normalized == Alg(Rat(3, 2)));

  FamilyDecision r1 = certify_minimal_family(graph_from_structure(w1(0)));
  CHECK_FALSE(r1.certificate.has_value());
  CHECK(r1.rejection == "slack 3 != trailing free chain 0");

  FamilyDecision r10 = certify_minimal_family(chain(10));
  CHECK_FALSE(r10.certificate.has_value());
  CHECK(r10.rejection == "slack 0 != trailing free chain 1");

  DualGraph point;
  point.arrow = 1;
  FamilyDecision rm = certify_minimal_family(point);
  CHECK_FALSE(rm.certificate.has_value());
  CHECK(rm.rejection == "no placement with nu(v) > nu(u) and nu(v)^2 >= the last contact value");

  CHECK_THROWS_AS(certify_minimal_family(graph_from_structure(w1_irr())), DomainError);
}

TEST_CASE("satellite arrows force positive slack") {
  auto ww = npi_test(w1(0));
  REQUIRE(ww.has_value());
  CHECK(satellite_nonminimality_check(*ww));

  auto wt = npi_test(two_row(3));
  REQUIRE(wt.has_value());
  CHECK(satellite_nonminimality_check(*wt));

  auto w3 = npi_test(w3_line());
  REQUIRE(w3.has_value());
  CHECK_THROWS_AS(satellite_nonminimality_check(*w3), DomainError);
}

TEST_CASE("branch pairing matrix") {
  GMatrix a = g_matrix({{Int(2), Int(1), Int(1)}});
  REQUIRE(a.size() == 1);
  CHECK(a.a[0][0] == 38);

  GMatrix b = g_matrix({std::vector<Int>(9, Int(1))});
  CHECK(b.a[0][0] == 0);
  GMatrix c = g_matrix({std::vector<Int>(10, Int(1))});
  CHECK(c.a[0][0] == -10);

  GMatrix d = g_matrix({{Int(1), Int(1)}, {Int(1), Int(0)}});
  CHECK(d.a[0][0] == 14);
  CHECK(d.a[0][1] == 7);
  CHECK(d.a[1][0] == 7);
  CHECK(d.a[1][1] == 8);

  CHECK_THROWS_AS(g_matrix({{Int(1), Int(1)}, {Int(1)}}), DomainError);
}

TEST_CASE("copositivity of the pairing form") {
  CHECK(p_sufficiency(gm({{38}}), CopositiveMode::Strict));
  CHECK(p_sufficiency(gm({{38}}), CopositiveMode::Almost));
  CHECK_FALSE(p_sufficiency(gm({{0}}), CopositiveMode::Strict));
  CHECK(p_sufficiency(gm({{0}}), CopositiveMode::Almost));
  CHECK_FALSE(p_sufficiency(gm({{-10}}), CopositiveMode::Strict));
  CHECK_FALSE(p_sufficiency(gm({{-10}}), CopositiveMode::Almost));

  CHECK_FALSE(p_sufficiency(gm({{1, -2}, {-2, 1}}), CopositiveMode::Strict));
  CHECK_FALSE(p_sufficiency(gm({{1, -2}, {-2, 1}}), CopositiveMode::Almost));
  CHECK_FALSE(p_sufficiency(gm({{1, -1}, {-1, 1}}), CopositiveMode::Strict));
  CHECK(p_sufficiency(gm({{1, -1}, {-1, 1}}), CopositiveMode::Almost));
  CHECK_FALSE(p_sufficiency(gm({{0, 1}, {1, 0}}), CopositiveMode::Strict));
  CHECK(p_sufficiency(gm({{0, 1}, {1, 0}}), CopositiveMode::Almost));
  CHECK(p_sufficiency(gm({{1, 0}, {0, 1}}), CopositiveMode::Strict));

  CHECK_THROWS_AS(p_sufficiency(gm({{1, 2}, {3, 4}}), CopositiveMode::Strict), DomainError);
  CHECK_THROWS_AS(p_sufficiency(gm({{1, 2}}), CopositiveMode::Strict), DomainError);

  GMatrix big;
  big.a.assign(13, std::vector<Int>(13, Int(0)));
  for (int i = 0; i < 13; ++i) big.a[i][i] = Int(1);
  CHECK_THROWS_AS(p_sufficiency(big, CopositiveMode::Strict), CapabilityError);
}

TEST_CASE("two by two copositivity matches the closed form") {
  Rng rng(7u);
  for (int it = 0; it < 200; ++it) {
    long a = rng.range(-6, 6), b = rng.range(-6, 6), c = rng.range(-6, 6);
    GMatrix g = gm({{a, b}, {b, c}});
    bool strict = a > 0 && c > 0 && (b >= 0 || a * c > b * b);
    bool almost = a >= 0 && c >= 0 && (b >= 0 || a * c >= b * b);
    CHECK(p_sufficiency(g, CopositiveMode::Strict) == strict);
    CHECK(p_sufficiency(g, CopositiveMode::Almost) == almost);
  }
}

TEST_CASE("copositivity agrees with a simplex grid probe") {
  Rng rng(11u);
  for (int it = 0; it < 60; ++it) {
    GMatrix g;
    g.a.assign(3, std::vector<Int>(3, Int(0)));
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        Int e(rng.range(-5, 5));
        g.a[i][j] = e;
        g.a[j][i] = e;
      }
    bool strict = p_sufficiency(g, CopositiveMode::Strict);
    bool almost = p_sufficiency(g, CopositiveMode::Almost);
    if (strict) CHECK(almost);
    for (long den = 1; den <= 4; ++den)
      for (long p = 0; p <= den; ++p)
        for (long r = 0; p + r <= den; ++r) {
          std::vector<Rat> x = {Rat(p, den), Rat(r, den), Rat(den - p - r, den)};
          Rat v = qform(g, x);
          if (strict) CHECK(v > Rat(0));
          if (almost) CHECK(v >= Rat(0));
        }
  }
}

TEST_CASE("curve families trace the affine volume line") {
  VDeltaParams sm = vdelta_params(smooth_curve());
  CHECK(sm.A == Rat(1));
  CHECK(sm.B == Rat(1));
  VDeltaParams cu = vdelta_params(cusp_curve());
  CHECK(cu.A == Rat(1, 4));
  CHECK(cu.B == Rat(3, 2));
  CHECK_THROWS_AS(vdelta_params(w1(0)), DomainError);

  CHECK(vdelta(sm, Alg(Rat(3, 2))).rows == w1(0).rows);
  CHECK(vdelta(sm, Alg(Rat(4))).rows ==
        std::vector<HNRow>{free_row(4, 1, {q(0), q(0), q(0), q(0)})});
  CHECK(vdelta(sm, Alg(Rat(1))).rows == m_adic().rows);

  Alg golden_sq = Alg::make(Rat(3, 2), Rat(1, 2), Int(5));
  HNExpansion irr = vdelta(sm, golden_sq);
  CHECK(classify(irr) == ValClass::Irrational);
  CHECK(irr.rows == std::vector<HNRow>{free_row(2, 1, {q(0), q(0)})});
  CHECK(irr.terminal.tail == ContFrac({}, {Int(1)}));
  CHECK(invariants(irr).vol_inv_normalized == golden_sq);

  CHECK(vdelta(cu, Alg(Rat(3, 2))).rows == w1(0).rows);
  HNExpansion c74 = vdelta(cu, Alg(Rat(7, 4)));
  CHECK(c74.rows == std::vector<HNRow>{free_row(1, 1, {q(0)}), free_row(3, 2, {q(1), q(0)})});
  CHECK(contacts(c74) == std::vector<Int>{Int(2), Int(3), Int(7)});
  HNExpansion c138 = vdelta(cu, Alg(Rat(13, 8)));
  CHECK(mseq(c138) == std::vector<Int>{Int(4), Int(2), Int(2), Int(1), Int(1)});

  HNExpansion cq = vdelta(cu, Alg::make(Rat(3, 2), Rat(1), Int(2)));
  CHECK(classify(cq) == ValClass::Irrational);
  CHECK(invariants(cq).vol_inv_normalized == Alg::make(Rat(3, 2), Rat(1), Int(2)));

  CHECK_THROWS_AS(vdelta(cu, Alg(Rat(1))), DomainError);

  for (const HNExpansion& delta : {smooth_curve(), cusp_curve()}) {
    VDeltaParams p = vdelta_params(delta);
    for (const Rat& step : {Rat(0), Rat(1, 4), Rat(1), Rat(7, 3), Rat(4)}) {
      Alg t = Alg(p.B + step);
      CHECK(invariants(vdelta(p, t)).vol_inv_normalized == t);
    }
  }
}

TEST_CASE("normalized values vary slowly along the family") {
  VDeltaParams sm = vdelta_params(smooth_curve());
  LipschitzReport rep = lipschitz_probe(sm, poly("v^2 - u^3"), {Rat(1), Rat(3, 2), Rat(2), Rat(3)});
  REQUIRE(rep.table.size() == 4);
  CHECK(rep.table[0].value == Alg(Rat(2)));
  CHECK(rep.table[1].value == Alg(Rat(3)));
  CHECK(rep.table[2].value == Alg(Rat(3)));
  CHECK(rep.table[3].value == Alg(Rat(3)));
  CHECK(rep.max_ratio == Alg(Rat(2)));

  CHECK(lipschitz_probe(sm, poly("u"), {Rat(1), Rat(2), Rat(3)}).max_ratio == Alg(Rat(0)));
  CHECK(lipschitz_probe(sm, poly("v"), {Rat(1), Rat(3, 2), Rat(2), Rat(3)}).max_ratio ==
        Alg(Rat(1)));

  VDeltaParams cu = vdelta_params(cusp_curve());
  LipschitzReport cv = lipschitz_probe(cu, poly("v"), {Rat(3, 2), Rat(7, 4), Rat(2)});
  for (const LipschitzRow& row : cv.table) CHECK(row.value == Alg(Rat(3, 2)));
  CHECK(cv.max_ratio == Alg(Rat(0)));

  CHECK_THROWS_AS(lipschitz_probe(sm, poly("v"), {Rat(1), Rat(1)}), DomainError);
}

TEST_CASE("witness families at prescribed normalized volume") {
  std::vector<Rat> ts = {Rat(2), Rat(10), Rat(99), Rat(100), Rat(2500), Rat(9999), Rat(10000)};
  std::vector<AsymptoticRow> rows = asymptotic_experiment(ts);
  REQUIRE(rows.size() == 7);

  std::vector<long> ns = {2, 4, 10, 10, 50, 100, 100};
  std::vector<std::string> decimals = {"1.414213562373", "1.264911064067", "1.005037815259",
                                       "1.000000000000", "1.000000000000", "1.000050003750",
                                       "1.000000000000"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].t == ts[i]);
    CHECK(rows[i].n == ns[i]);
    CHECK(rows[i].decimal == decimals[i]);
    CHECK(rows[i].ratio * rows[i].ratio * Alg(ts[i]) == Alg(Rat(Int(rows[i].n * rows[i].n))));
    CHECK(rows[i].ratio >= Alg(Rat(1)));
  }
  CHECK(rows[0].ratio == sqrt_rat(Rat(2)));
  std::vector<Rat> sq;
  for (const AsymptoticRow& r : rows) sq.push_back((r.ratio * r.ratio).rat());
  CHECK(sq[1] < sq[0]);
  CHECK(sq[2] < sq[1]);
  CHECK(rows[3].ratio == Alg(Rat(1)));

  std::vector<AsymptoticRow> five = asymptotic_experiment({Rat(5)});
  REQUIRE(five.size() == 1);
  CHECK(five[0].n == 3);
  CHECK(five[0].decimal == "1.341640786499");

  std::vector<AsymptoticRow> half = asymptotic_experiment({Rat(5, 2)});
  REQUIRE(half.size() == 1);
  CHECK(half[0].n == 2);
  CHECK(half[0].ratio * half[0].ratio == Alg(Rat(8, 5)));
  CHECK(half[0].decimal == "1.264911064067");

  CHECK_THROWS_AS(asymptotic_experiment({Rat(3, 2)}), DomainError);
}
