#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "planeval/graph/dual_graph.hpp"
#include "planeval/hn/expansion.hpp"
#include "planeval/hn/parse.hpp"

using namespace planeval;

namespace {

const FieldSpec Q = FieldSpec::rationals();

FieldElem q(long n) { return FieldElem(Q, Rat(Int(n))); }

HNExpansion w1() {
  HNExpansion hn;
  hn.rows = {free_row(1, 1, {q(0)}), power_row(2)};
  return hn;
}

HNExpansion w1_irr() {
  HNExpansion hn;
  hn.rows = {free_row(1, 1, {q(0)}), free_row(2, 2, {q(1)})};
  hn.terminal.kind = ValClass::Irrational;
  hn.terminal.tail = ContFrac({}, {Int(2)});
  return hn;
}

HNExpansion flagship() {
  HNExpansion hn;
  hn.rows = {free_row(2, 1, {q(0), q(7)}),
             free_row(8, 2, {q(1), q(0), q(0), q(0), q(0), q(0), q(0)})};
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

struct RunResult {
  int code = -1;
  std::string out;
};

const std::string& bin_path() {
  static std::string p = [] {
    const char* b = std::getenv("PLANEVAL_BIN");
    return std::string(b ? b : "");
  }();
  return p;
}

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = bin_path() + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool has(const RunResult& r, const std::string& needle) {
  return r.out.find(needle) != std::string::npos;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

// fixture files shared by the cases, rebuilt once per test run
const std::filesystem::path& fx() {
  static std::filesystem::path dir = [] {
    std::filesystem::path d = std::filesystem::temp_directory_path() / "planeval_cli_fixtures";
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    write_file(d / "w1.hn", serialize_hn(w1()));
    write_file(d / "w1irr.hn", serialize_hn(w1_irr()));
    write_file(d / "smooth.hn", serialize_hn(smooth_curve()));
    write_file(d / "cusp.hn", serialize_hn(cusp_curve()));
    write_file(d / "bad.hn", "garbage\n");
    write_file(d / "w1.graph", serialize_graph(graph_from_structure(w1())));
    write_file(d / "flag.graph", serialize_graph(graph_from_structure(flagship())));
    write_file(d / "irr.graph", serialize_graph(graph_from_structure(w1_irr())));
    write_file(d / "ts.txt", "2\n10\n100\n");
    write_file(d / "ts_bad.txt", "3/2\n");
    write_file(d / "nine.mat", "1 1 1 1 1 1 1 1 1\n");
    write_file(d / "ten.mat", "1 1 1 1 1 1 1 1 1 1\n");
    write_file(d / "cusp.mat", "2 1 1\n");
    return d;
  }();
  return dir;
}

std::string p(const std::string& name) { return (fx() / name).string(); }

}  // namespace

TEST_CASE("binary path is provided") {
  REQUIRE_FALSE(bin_path().empty());
  REQUIRE(std::filesystem::exists(bin_path()));
}

TEST_CASE("invariants report") {
  RunResult r = run("invariants " + p("w1.hn"));
  CHECK(r.code == 0);
  CHECK(has(r, "maxcontact: 2, 3, 6"));
  CHECK(has(r, "maxcontact=2, 3, 6"));
  CHECK(has(r, "vol_inv_normalized=3/2"));
  CHECK(has(r, "m=2, 1, 1"));

  RunResult m = run("invariants " + p("w1.hn") + " --output machine");
  CHECK(m.code == 0);
  CHECK(has(m, "maxcontact=2, 3, 6"));
  CHECK_FALSE(has(m, "maxcontact: "));

  RunResult j = run("invariants " + p("w1.hn") + " --output json-lines");
  CHECK(j.code == 0);
  CHECK(has(j, "{\"key\":\"maxcontact\",\"value\":\"2, 3, 6\"}"));

  CHECK(run("invariants " + p("w1.hn")).out == r.out);
}

TEST_CASE("invariants error paths") {
  RunResult bad = run("invariants " + p("bad.hn"));
  CHECK(bad.code == 2);
  CHECK(has(bad, "line 1"));

  RunResult curve = run("invariants " + p("smooth.hn"));
  CHECK(curve.code == 3);
  CHECK(has(curve, "vdelta"));

  CHECK(run("invariants " + p("missing.hn")).code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("eval values and methods") {
  RunResult r = run("eval " + p("w1.hn") + " 'v^2 - u^3'");
  CHECK(r.code == 0);
  CHECK(has(r, "value: 6, normalized: 3"));

  CHECK(run("eval " + p("w1.hn") + " '0'").code == 4);

  RunResult g = run("eval " + p("w1irr.hn") + " v");
  CHECK(g.code == 0);
  CHECK(has(g, "value: 3*gamma, normalized: 3/2"));

  RunResult b = run("eval " + p("w1.hn") + " 'v^2 - u^3' --both-methods --output machine");
  CHECK(b.code == 0);
  CHECK(has(b, "value_substitution=6"));
  CHECK(has(b, "value_proximity=6"));
  CHECK(has(b, "methods_agree=yes"));

  RunResult lim = run("eval " + p("w1irr.hn") + " v --limit-window 3 --output machine");
  CHECK(lim.code == 0);
  CHECK(has(lim, "limit_lo=3/2"));
  CHECK(has(lim, "limit_hi=3/2"));
}

TEST_CASE("mu table") {
  RunResult r = run("mu " + p("w1.hn") + " --degree-max 3 --output machine");
  CHECK(r.code == 0);
  CHECK(has(r, "mu_1=3"));
  CHECK(has(r, "mu_3=9"));
  CHECK(has(r, "ratio_3=3"));
  CHECK(has(r, "muhat_exact=3"));

  RunResult s = run("mu " + p("w1.hn") + " --degree-max 1 --emit-sequence --output machine");
  CHECK(s.code == 0);
  CHECK(has(s, "seq_1=0, 2, 3"));

  RunResult a = run("mu " + p("w1.hn") + " --degree-max 2 --seed 5 --output machine");
  RunResult b = run("mu " + p("w1.hn") + " --degree-max 2 --seed 5 --output machine");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  RunResult f = run("mu " + p("w1.hn") + " --degree-max 2 --seed 5 --field Fp:2147483647 --output machine");
  CHECK(f.code == 0);
  CHECK(has(f, "mu_1="));
}

TEST_CASE("npi witness report") {
  RunResult r = run("npi " + p("w1.hn") + " --output machine");
  CHECK(r.code == 0);
  CHECK(has(r, "witness=yes"));
  CHECK(has(r, "slack=3"));
  CHECK(has(r, "mu_hat=3"));

  RunResult j = run("npi " + p("w1.hn") + " --output json-lines");
  CHECK(has(j, "{\"key\":\"witness\",\"value\":\"yes\"}"));

  CHECK(run("npi " + p("w1irr.hn")).code == 4);
}

TEST_CASE("certify decisions") {
  RunResult ok = run("certify " + p("flag.graph") + " --output machine");
  CHECK(ok.code == 0);
  CHECK(has(ok, "certified=yes"));
  CHECK(has(ok, "a=2"));
  CHECK(has(ok, "placement=2"));
  CHECK(has(ok, "mu_hat_normalized=2"));
  CHECK(has(ok, "omega=s=10"));

  RunResult no = run("certify " + p("w1.graph") + " --output machine");
  CHECK(no.code == 0);
  CHECK(has(no, "certified=no"));
  CHECK(has(no, "rejection=slack 3 != trailing free chain 0"));

  CHECK(run("certify " + p("irr.graph")).code == 4);
}

TEST_CASE("family construction") {
  RunResult r = run("family --omega " + p("w1.graph") + " --k 1 --a 2 --output machine");
  CHECK(r.code == 0);
  CHECK(has(r, "s=10"));
  CHECK(has(r, "maxcontact=2, 5, 16"));
  CHECK(has(r, "vol_inv_normalized=4"));
  CHECK(has(r, "mu_hat_normalized=2"));

  CHECK(run("family --omega " + p("w1.graph") + " --k 1 --a 3").code == 4);
  CHECK(run("family --omega " + p("w1.graph") + " --k 1 --a x").code == 2);
}

TEST_CASE("vdelta members") {
  RunResult r = run("vdelta --delta " + p("cusp.hn") + " --t 7/4 --output machine");
  CHECK(r.code == 0);
  CHECK(has(r, "A=1/4"));
  CHECK(has(r, "B=3/2"));
  CHECK(has(r, "class=divisorial"));
  CHECK(has(r, "vol_inv_normalized=7/4"));
  CHECK(has(r, "free h=3 coeffs k=2: 1, 0"));

  RunResult g = run("vdelta --delta " + p("smooth.hn") + " --t '3/2+1/2*sqrt(5)' --output machine");
  CHECK(g.code == 0);
  CHECK(has(g, "class=irrational"));
  CHECK(has(g, "vol_inv_normalized_approx=2.618033988749"));

  CHECK(run("vdelta --delta " + p("cusp.hn") + " --t 1").code == 4);
  CHECK(run("vdelta --delta " + p("w1.hn") + " --t 2").code == 4);
}

TEST_CASE("asymptotic table") {
  RunResult r = run("asymptotic --t-list " + p("ts.txt") + " --output machine");
  CHECK(r.code == 0);
  CHECK(has(r, "approx_0=1.414213562373"));
  CHECK(has(r, "n_1=4"));
  CHECK(has(r, "approx_1=1.264911064067"));
  CHECK(has(r, "ratio_2=1"));

  CHECK(run("asymptotic --t-list " + p("ts_bad.txt")).code == 4);
}

TEST_CASE("psuff decisions") {
  RunResult nine = run("psuff --matrix " + p("nine.mat") + " --output machine");
  CHECK(nine.code == 0);
  CHECK(has(nine, "g=[[0]]"));
  CHECK(has(nine, "p_sufficient=no"));
  CHECK(has(nine, "almost_p_sufficient=yes"));

  RunResult ten = run("psuff --matrix " + p("ten.mat") + " --output machine");
  CHECK(has(ten, "p_sufficient=no"));
  CHECK(has(ten, "almost_p_sufficient=no"));

  RunResult w = run("psuff --matrix " + p("cusp.mat") + " --mode strict --output machine");
  CHECK(has(w, "g=[[38]]"));
  CHECK(has(w, "p_sufficient=yes"));
  CHECK_FALSE(has(w, "almost_p_sufficient"));
}

TEST_CASE("corpus generation is deterministic") {
  std::string dir_a = (fx() / "corpus_a").string();
  std::string dir_b = (fx() / "corpus_b").string();
  RunResult a = run("corpus --count 6 --seed 9 --out " + dir_a);
  CHECK(a.code == 0);
  RunResult b = run("corpus --count 6 --seed 9 --out " + dir_b);
  CHECK(b.code == 0);

  std::vector<std::string> names;
  for (const auto& e : std::filesystem::directory_iterator(dir_a))
    names.push_back(e.path().filename().string());
  CHECK(names.size() == 6);
  for (const std::string& n : names) {
    std::ifstream fa(std::filesystem::path(dir_a) / n), fb(std::filesystem::path(dir_b) / n);
    std::string ta((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    std::string tb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    CHECK(ta == tb);
    CHECK_NOTHROW(parse_hn(ta));
  }
}

TEST_CASE("graph conversions") {
  RunResult g = run("graph --hn " + p("w1.hn") + " --output machine");
  CHECK(g.code == 0);
  CHECK(has(g, "s=3"));
  CHECK(has(g, "edges=1-3, 2-3"));
  CHECK(has(g, "arrow=3"));

  RunResult back = run("graph --graph " + p("w1.graph") + " --output machine");
  CHECK(back.code == 0);
  CHECK(has(back, "power h=2"));
  CHECK(has(back, "class=divisorial"));

  RunResult dot = run("graph --hn " + p("w1.hn") + " --dot");
  CHECK(dot.code == 0);
  CHECK(has(dot, "graph dual_graph {"));
  CHECK(has(dot, "peripheries=2"));

  CHECK(run("graph --hn " + p("w1.hn") + " --graph " + p("w1.graph")).code == 2);
  CHECK(run("graph").code == 2);
}
