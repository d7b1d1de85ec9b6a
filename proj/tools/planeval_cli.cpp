// planeval: exact invariants of plane valuations given by Hamburger-Noether
// data. Every subcommand prints a human-readable block followed by key=value
// lines; --output narrows to one encoding. All output is byte-deterministic
// given (inputs, flags, seed).
//
// Exit codes: 0 ok, 2 parse, 3 validation, 4 domain, 5 capability.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "planeval/errors.hpp"
#include "planeval/eval/bivar_poly.hpp"
#include "planeval/eval/evaluate.hpp"
#include "planeval/eval/limit.hpp"
#include "planeval/graph/dual_graph.hpp"
#include "planeval/hn/expansion.hpp"
#include "planeval/hn/parse.hpp"
#include "planeval/hn/sample.hpp"
#include "planeval/invariants/invariants.hpp"
#include "planeval/linsys/linear_systems.hpp"
#include "planeval/minimality/copositive.hpp"
#include "planeval/minimality/minimality.hpp"
#include "planeval/minimality/vdelta.hpp"
#include "planeval/rng.hpp"

using namespace planeval;

namespace {

struct Report {
  std::vector<std::string> human;
  std::vector<std::pair<std::string, std::string>> kv;

  void line(const std::string& s) { human.push_back(s); }
  void pair(const std::string& k, const std::string& v, bool echo = true) {
    kv.emplace_back(k, v);
    if (echo) human.push_back(k + ": " + v);
  }
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", c);
      out += buf;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

void emit(const Report& r, const std::string& format) {
  if (format == "default" || format == "human")
    for (const std::string& l : r.human) std::cout << l << "\n";
  if (format == "default" && !r.human.empty() && !r.kv.empty()) std::cout << "\n";
  if (format == "default" || format == "machine")
    for (const auto& [k, v] : r.kv) std::cout << k << "=" << v << "\n";
  if (format == "json-lines")
    for (const auto& [k, v] : r.kv)
      std::cout << "{\"key\":\"" << json_escape(k) << "\",\"value\":\"" << json_escape(v)
                << "\"}\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// meaningful lines: trimmed, blank and full-line # comments dropped
std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::string single_line(const std::string& block) {
  std::string out;
  std::istringstream in(block);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!out.empty()) out += "; ";
    out += line;
  }
  return out;
}

std::string class_name(ValClass c) {
  switch (c) {
    case ValClass::Divisorial: return "divisorial";
    case ValClass::Irrational: return "irrational";
    default: return "curve";
  }
}

std::string edges_text(const DualGraph& g) {
  std::string out;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(g.edges[i].first) + "-" + std::to_string(g.edges[i].second);
  }
  return out;
}

void graph_pairs(Report& r, const DualGraph& g, bool echo) {
  r.pair("s", std::to_string(g.s), echo);
  r.pair("edges", edges_text(g), echo);
  if (g.arrow) r.pair("arrow", std::to_string(*g.arrow), echo);
  if (g.tail) r.pair("tail", g.tail->to_string(), echo);
}

Report report_invariants(const std::string& path) {
  HNExpansion hn = load_hn(path);
  Invariants inv = invariants(hn);
  Report r;
  r.pair("class", class_name(classify(hn)));
  for (const auto& [k, v] : report_pairs(inv)) r.pair(k, v);
  if (!inv.vol_inv.is_rational()) {
    r.pair("vol_inv_approx", decimal_string(inv.vol_inv));
    r.pair("vol_inv_normalized_approx", decimal_string(inv.vol_inv_normalized));
  }
  r.pair("g", std::to_string(inv.g));
  return r;
}

Report report_eval(const std::string& path, const std::string& expr, bool both,
                   long limit_window) {
  HNExpansion hn = load_hn(path);
  BivarPoly f = parse_poly_expr(expr, hn.field);
  ValElem value = value_substitution(hn, f);
  Alg norm = value_normalized(hn, f);
  Report r;
  r.line("value: " + value.to_string() + ", normalized: " + norm.to_string());
  r.pair("value", value.to_string(), false);
  r.pair("normalized", norm.to_string(), false);
  if (!norm.is_rational()) r.pair("normalized_approx", decimal_string(norm));
  if (both) {
    Int prox = value_proximity(hn, f);
    if (ValElem(prox) != value)
      throw std::logic_error("evaluation methods disagree: substitution " + value.to_string() +
                             ", proximity " + prox.get_str());
    r.line("both methods agree: substitution " + value.to_string() + ", proximity " +
           prox.get_str());
    r.pair("value_substitution", value.to_string(), false);
    r.pair("value_proximity", prox.get_str(), false);
    r.pair("methods_agree", "yes", false);
  }
  if (limit_window > 0) {
    LimitOptions opt;
    opt.window = limit_window;
    LimitResult lr = value_normalized_by_limit(hn, f, opt);
    r.line("limit bracket: [" + lr.lo.to_string() + ", " + lr.hi.to_string() + "] after " +
           std::to_string(lr.steps) + " steps");
    r.pair("limit_lo", lr.lo.to_string(), false);
    r.pair("limit_hi", lr.hi.to_string(), false);
    r.pair("limit_steps", std::to_string(lr.steps), false);
  }
  return r;
}

Report report_mu(const std::string& path, long dmax, const std::string& field_str,
                 std::uint64_t seed, bool resample, bool emit_seq) {
  HNExpansion hn = load_hn(path);
  if (resample) hn = sample_very_general(hn, FieldSpec::parse(field_str), seed);
  if (dmax < 1) throw DomainError("--degree-max must be at least 1");
  Report r;
  for (long d = 1; d <= dmax; ++d) {
    ValElem m = mu_d(hn, d);
    Alg ratio = m.to_alg() / Alg(Rat(d));
    r.line("d " + std::to_string(d) + ": mu " + m.to_string() + ", ratio " + ratio.to_string());
    r.pair("mu_" + std::to_string(d), m.to_string(), false);
    r.pair("ratio_" + std::to_string(d), ratio.to_string(), false);
    if (!ratio.is_rational())
      r.pair("ratio_" + std::to_string(d) + "_approx", decimal_string(ratio), false);
    if (emit_seq) {
      VanishingSequence vs = vanishing_sequence(hn, d);
      std::string seq;
      for (std::size_t i = 0; i < vs.values.size(); ++i)
        seq += (i ? ", " : "") + vs.values[i].to_string();
      r.pair("seq_" + std::to_string(d), seq, false);
    }
  }
  MuHatReport mh = mu_hat_report(hn, dmax);
  r.line("mu_hat lower: " + mh.lower.to_string() + " (at d=" + std::to_string(mh.lower_d) + ")");
  r.pair("muhat_lower", mh.lower.to_string(), false);
  r.pair("muhat_lower_d", std::to_string(mh.lower_d), false);
  if (!mh.lower.is_rational()) r.pair("muhat_lower_approx", decimal_string(mh.lower), false);
  if (mh.upper) {
    r.line("mu_hat upper (very general members): " + mh.upper->to_string());
    r.pair("muhat_upper", mh.upper->to_string(), false);
  }
  if (mh.exact) {
    r.line(std::string("mu_hat exact: ") + mh.exact->to_string() +
           (mh.squeezed ? " (squeezed, very general members)" : ""));
    r.pair("muhat_exact", mh.exact->to_string(), false);
    r.pair("muhat_squeezed", mh.squeezed ? "yes" : "no", false);
  }
  return r;
}

Report report_npi(const std::string& path) {
  HNExpansion hn = load_hn(path);
  auto w = npi_test(hn);
  Report r;
  if (!w) {
    r.pair("witness", "no");
    r.pair("reason", "nu(v) <= nu(u) or nu(v)^2 below the last maximal contact value");
    return r;
  }
  r.pair("witness", "yes");
  r.pair("nu_u", w->nu_u.to_string());
  r.pair("nu_v", w->nu_v.to_string());
  r.pair("last_contact", w->last_mcv.to_string());
  r.pair("slack", w->slack.to_string());
  r.pair("mu_hat", mu_hat_npi(*w).to_string());
  return r;
}

Report report_certify(const std::string& path) {
  DualGraph g = parse_graph(read_file(path));
  FamilyDecision fd = certify_minimal_family(g);
  Report r;
  if (!fd.certificate) {
    r.pair("certified", "no");
    r.pair("rejection", fd.rejection);
    return r;
  }
  const FamilyCertificate& c = *fd.certificate;
  r.pair("certified", "yes");
  r.pair("omega", single_line(serialize_graph(c.omega)));
  r.pair("k", std::to_string(c.k));
  r.pair("a", c.a.to_string());
  r.pair("placement", std::to_string(c.placement));
  r.pair("appended", std::to_string(c.appended));
  r.pair("mu_hat_normalized", c.mu_hat_normalized.to_string());
  return r;
}

Report report_family(const std::string& omega_path, long k, const std::string& a_str) {
  DualGraph omega = parse_graph(read_file(omega_path));
  Rat a = Rat::parse(a_str);
  DualGraph fam = build_gamma_k_a(omega, k, a);
  Invariants inv = invariants(structure_from_graph(fam, FieldSpec::rationals()));
  Report r;
  for (const std::string& l : data_lines(serialize_graph(fam))) r.line(l);
  graph_pairs(r, fam, false);
  std::string mc;
  for (std::size_t i = 0; i < inv.maxcontact.size(); ++i)
    mc += (i ? ", " : "") + inv.maxcontact[i].to_string();
  r.pair("maxcontact", mc);
  r.pair("vol_inv_normalized", inv.vol_inv_normalized.to_string());
  r.pair("mu_hat_normalized", a.to_string());
  return r;
}

Report report_vdelta(const std::string& delta_path, const std::string& t_str) {
  HNExpansion delta = load_hn(delta_path);
  VDeltaParams p = vdelta_params(delta);
  Alg t = Alg::parse(t_str);
  HNExpansion member = vdelta(p, t);
  Invariants inv = invariants(member);
  Report r;
  r.pair("A", p.A.to_string());
  r.pair("B", p.B.to_string());
  r.pair("t", t.to_string());
  r.pair("class", class_name(classify(member)));
  r.pair("vol_inv_normalized", inv.vol_inv_normalized.to_string());
  if (!inv.vol_inv_normalized.is_rational())
    r.pair("vol_inv_normalized_approx", decimal_string(inv.vol_inv_normalized));
  r.line("member:");
  for (const std::string& l : data_lines(serialize_hn(member))) r.line("  " + l);
  r.pair("member", single_line(serialize_hn(member)), false);
  return r;
}

Report report_asymptotic(const std::string& list_path) {
  std::vector<Rat> ts;
  for (const std::string& l : data_lines(read_file(list_path))) ts.push_back(Rat::parse(l));
  std::vector<AsymptoticRow> rows = asymptotic_experiment(ts);
  Report r;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string tag = std::to_string(i);
    r.line("t=" + rows[i].t.to_string() + ": n=" + rows[i].n.get_str() + ", ratio=" +
           rows[i].ratio.to_string() + ", approx=" + rows[i].decimal);
    r.pair("t_" + tag, rows[i].t.to_string(), false);
    r.pair("n_" + tag, rows[i].n.get_str(), false);
    r.pair("ratio_" + tag, rows[i].ratio.to_string(), false);
    r.pair("approx_" + tag, rows[i].decimal, false);
  }
  return r;
}

Report report_psuff(const std::string& matrix_path, const std::string& mode) {
  std::vector<std::vector<Int>> rows;
  for (const std::string& l : data_lines(read_file(matrix_path))) {
    std::vector<Int> row;
    std::istringstream in(l);
    std::string tok;
    while (in >> tok) {
      try {
        row.push_back(Int(tok));
      } catch (const std::invalid_argument&) {
        throw ParseError("bad multiplicity '" + tok + "'");
      }
    }
    if (!row.empty()) rows.push_back(row);
  }
  GMatrix g = g_matrix(rows);
  Report r;
  std::string gtext = "[";
  for (long i = 0; i < g.size(); ++i) {
    gtext += i ? ", [" : "[";
    for (long j = 0; j < g.size(); ++j)
      gtext += (j ? ", " : "") + g.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_str();
    gtext += "]";
  }
  gtext += "]";
  r.pair("branches", std::to_string(g.size()));
  r.pair("g", gtext);
  if (mode.empty() || mode == "strict")
    r.pair("p_sufficient", p_sufficiency(g, CopositiveMode::Strict) ? "yes" : "no");
  if (mode.empty() || mode == "almost")
    r.pair("almost_p_sufficient", p_sufficiency(g, CopositiveMode::Almost) ? "yes" : "no");
  return r;
}

Report report_corpus(long count, std::uint64_t seed, const std::string& dir,
                     long max_rows, long max_h, const std::string& cls) {
  if (count < 0) throw DomainError("--count must be non-negative");
  std::filesystem::create_directories(dir);
  Rng rng(seed);
  std::vector<ValClass> mix;
  if (cls == "divisorial") mix = {ValClass::Divisorial};
  else if (cls == "irrational") mix = {ValClass::Irrational};
  else if (cls == "curve") mix = {ValClass::Curve};
  else mix = {ValClass::Divisorial, ValClass::Irrational, ValClass::Curve};
  for (long i = 0; i < count; ++i) {
    StructureOptions opt;
    opt.max_rows = max_rows;
    opt.max_h = max_h;
    opt.cls = mix[static_cast<std::size_t>(i) % mix.size()];
    HNExpansion st = random_structure(rng, opt);
    HNExpansion member = sample_very_general(st, FieldSpec::rationals(),
                                             seed + 1000003u * static_cast<std::uint64_t>(i + 1));
    char name[32];
    std::snprintf(name, sizeof name, "case_%05ld.hn", i);
    std::ofstream out(std::filesystem::path(dir) / name);
    if (!out) throw DomainError("cannot write into '" + dir + "'");
    out << serialize_hn(member);
  }
  Report r;
  r.line("wrote " + std::to_string(count) + " files to " + dir);
  r.pair("count", std::to_string(count), false);
  r.pair("seed", std::to_string(seed), false);
  r.pair("dir", dir, false);
  r.pair("class", cls, false);
  return r;
}

Report report_graph(const std::string& hn_path, const std::string& graph_path) {
  Report r;
  if (!hn_path.empty()) {
    DualGraph g = graph_from_structure(load_hn(hn_path));
    for (const std::string& l : data_lines(serialize_graph(g))) r.line(l);
    graph_pairs(r, g, false);
    return r;
  }
  DualGraph g = parse_graph(read_file(graph_path));
  HNExpansion member = structure_from_graph(g, FieldSpec::rationals());
  for (const std::string& l : data_lines(serialize_graph(g))) r.line(l);
  graph_pairs(r, g, false);
  r.line("canonical member:");
  for (const std::string& l : data_lines(serialize_hn(member))) r.line("  " + l);
  r.pair("member", single_line(serialize_hn(member)), false);
  r.pair("class", class_name(classify(member)), false);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of plane valuations from Hamburger-Noether data"};
  app.require_subcommand(1);
  std::string format = "default";
  app.add_option("--output", format, "output encoding")
      ->check(CLI::IsMember({"human", "machine", "json-lines"}));

  std::string inv_path;
  auto* c_inv = app.add_subcommand("invariants", "invariant sequences of an expansion");
  c_inv->add_option("file", inv_path, "expansion file")->required();

  std::string eval_path, eval_expr;
  bool eval_both = false;
  long eval_window = 0;
  auto* c_eval = app.add_subcommand("eval", "value of a polynomial along the valuation");
  c_eval->add_option("file", eval_path, "expansion file")->required();
  c_eval->add_option("poly", eval_expr, "polynomial in u, v")->required();
  c_eval->add_flag("--both-methods", eval_both, "run substitution and proximity, check equality");
  c_eval->add_option("--limit-window", eval_window,
                     "bracket the normalized value by divisorial truncations");

  std::string mu_path, mu_field = "Q";
  long mu_dmax = 6;
  std::uint64_t mu_seed = 0;
  bool mu_emit = false;
  auto* c_mu = app.add_subcommand("mu", "degree-constrained maxima mu_d");
  c_mu->add_option("file", mu_path, "expansion file")->required();
  c_mu->add_option("--degree-max", mu_dmax, "largest degree");
  auto* mu_field_opt = c_mu->add_option("--field", mu_field, "resample coefficients over Q or Fp:<p>");
  auto* mu_seed_opt = c_mu->add_option("--seed", mu_seed, "resampling seed");
  c_mu->add_flag("--emit-sequence", mu_emit, "emit the full vanishing sequences");

  std::string npi_path;
  auto* c_npi = app.add_subcommand("npi", "witness for non-positivity at infinity");
  c_npi->add_option("file", npi_path, "expansion file")->required();

  std::string cert_path;
  auto* c_cert = app.add_subcommand("certify", "minimality certificate for a family graph");
  c_cert->add_option("file", cert_path, "graph file")->required();

  std::string fam_omega, fam_a;
  long fam_k = 0;
  auto* c_fam = app.add_subcommand("family", "build the shifted family graph");
  c_fam->add_option("--omega", fam_omega, "base graph file")->required();
  c_fam->add_option("--k", fam_k, "shift")->required();
  c_fam->add_option("--a", fam_a, "admissible slope")->required();

  std::string vd_delta, vd_t;
  auto* c_vd = app.add_subcommand("vdelta", "family member at prescribed normalized volume");
  c_vd->add_option("--delta", vd_delta, "curve branch file")->required();
  c_vd->add_option("--t", vd_t, "parameter (rational or a+b*sqrt(d))")->required();

  std::string as_list;
  auto* c_as = app.add_subcommand("asymptotic", "witness ratios ceil(sqrt(t))/sqrt(t)");
  c_as->add_option("--t-list", as_list, "file with one rational t per line")->required();

  std::string ps_matrix, ps_mode;
  auto* c_ps = app.add_subcommand("psuff", "P-sufficiency of branch multiplicities");
  c_ps->add_option("--matrix", ps_matrix, "file with one multiplicity row per branch")->required();
  c_ps->add_option("--mode", ps_mode, "strict or almost (default both)")
      ->check(CLI::IsMember({"strict", "almost"}));

  std::string co_dir, co_class = "mixed";
  long co_count = 0, co_rows = 4, co_h = 5;
  std::uint64_t co_seed = 0;
  auto* c_co = app.add_subcommand("corpus", "deterministic corpus of expansion files");
  c_co->add_option("--count", co_count, "number of files")->required();
  c_co->add_option("--seed", co_seed, "corpus seed")->required();
  c_co->add_option("--out", co_dir, "output directory")->required();
  c_co->add_option("--max-rows", co_rows, "row budget per structure");
  c_co->add_option("--max-h", co_h, "largest row length");
  c_co->add_option("--class", co_class, "divisorial, irrational, curve, or mixed")
      ->check(CLI::IsMember({"divisorial", "irrational", "curve", "mixed"}));

  std::string gr_hn, gr_graph;
  bool gr_dot = false;
  auto* c_gr = app.add_subcommand("graph", "convert between expansions and dual graphs");
  auto* gr_hn_opt = c_gr->add_option("--hn", gr_hn, "expansion file to convert");
  auto* gr_graph_opt = c_gr->add_option("--graph", gr_graph, "graph file to convert");
  gr_hn_opt->excludes(gr_graph_opt);
  c_gr->add_flag("--dot", gr_dot, "emit GraphViz DOT instead of a report");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Report r;
    if (c_inv->parsed()) {
      r = report_invariants(inv_path);
    } else if (c_eval->parsed()) {
      r = report_eval(eval_path, eval_expr, eval_both, eval_window);
    } else if (c_mu->parsed()) {
      bool resample = mu_field_opt->count() > 0 || mu_seed_opt->count() > 0;
      r = report_mu(mu_path, mu_dmax, mu_field, mu_seed, resample, mu_emit);
    } else if (c_npi->parsed()) {
      r = report_npi(npi_path);
    } else if (c_cert->parsed()) {
      r = report_certify(cert_path);
    } else if (c_fam->parsed()) {
      r = report_family(fam_omega, fam_k, fam_a);
    } else if (c_vd->parsed()) {
      r = report_vdelta(vd_delta, vd_t);
    } else if (c_as->parsed()) {
      r = report_asymptotic(as_list);
    } else if (c_ps->parsed()) {
      r = report_psuff(ps_matrix, ps_mode);
    } else if (c_co->parsed()) {
      r = report_corpus(co_count, co_seed, co_dir, co_rows, co_h, co_class);
    } else if (c_gr->parsed()) {
      if (gr_hn_opt->count() == 0 && gr_graph_opt->count() == 0)
        throw ParseError("graph needs --hn or --graph");
      if (gr_dot) {
        DualGraph g = gr_hn.empty() ? parse_graph(read_file(gr_graph))
                                    : graph_from_structure(load_hn(gr_hn));
        std::cout << export_dot(g);
        return 0;
      }
      r = report_graph(gr_hn, gr_graph);
    }
    emit(r, format);
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
