#include <algorithm>
#include <set>

#include "planeval/errors.hpp"
#include "planeval/graph/dual_graph.hpp"
#include "planeval/hn/values.hpp"

namespace planeval {

namespace {

bool prox_contains(const std::vector<long>& pr, long i) {
  return std::binary_search(pr.begin(), pr.end(), i);
}

// p_j is proximate to p_{j-1}, and to an earlier p_i exactly when the points
// between them still fit on the exceptional divisor of p_i:
//   m_{i+1} + ... + m_j <= m_i
std::vector<std::vector<long>> proximity_from_multiplicities(const std::vector<ValElem>& m) {
  long s = static_cast<long>(m.size());
  std::vector<ValElem> pref(static_cast<std::size_t>(s) + 1, ValElem(0));
  for (long t = 1; t <= s; ++t)
    pref[static_cast<std::size_t>(t)] =
        pref[static_cast<std::size_t>(t - 1)] + m[static_cast<std::size_t>(t - 1)];
  std::vector<std::vector<long>> prox(static_cast<std::size_t>(s));
  for (long j = 2; j <= s; ++j) {
    auto& pr = prox[static_cast<std::size_t>(j - 1)];
    for (long i = 1; i < j; ++i) {
      ValElem between = pref[static_cast<std::size_t>(j)] - pref[static_cast<std::size_t>(i)];
      if (i == j - 1 || between <= m[static_cast<std::size_t>(i - 1)]) pr.push_back(i);
    }
    if (pr.size() > 2)
      throw ValidationError("point " + std::to_string(j) +
                            " would be proximate to more than two points");
  }
  return prox;
}

struct Run {
  long first = 0, last = 0;  // 1-based, inclusive
  long len() const { return last - first + 1; }
};

std::vector<Run> constant_runs(const std::vector<ValElem>& m) {
  std::vector<Run> runs;
  long s = static_cast<long>(m.size());
  long start = 1;
  for (long i = 2; i <= s + 1; ++i) {
    if (i == s + 1 || m[static_cast<std::size_t>(i - 1)] != m[static_cast<std::size_t>(start - 1)]) {
      runs.push_back({start, i - 1});
      start = i;
    }
  }
  return runs;
}

// Every run must read: leading point, then satellites, then free points.
struct RunShape {
  long sats = 0, frees = 0;
};

RunShape run_shape(const Configuration& c, const Run& r) {
  RunShape sh;
  long i = r.first + 1;
  while (i <= r.last && !c.is_free(i)) {
    ++sh.sats;
    ++i;
  }
  while (i <= r.last && c.is_free(i)) {
    ++sh.frees;
    ++i;
  }
  if (i <= r.last)
    throw ValidationError("multiplicity run starting at point " + std::to_string(r.first) +
                          " has a satellite point after a free one");
  return sh;
}

}  // namespace

Configuration configuration_from_graph(const DualGraph& g) {
  require_valid(g);
  std::vector<std::set<long>> adj(static_cast<std::size_t>(g.s) + 1);
  for (auto [a, b] : g.edges) {
    adj[static_cast<std::size_t>(a)].insert(b);
    adj[static_cast<std::size_t>(b)].insert(a);
  }
  Configuration c;
  c.s = g.s;
  c.prox.resize(static_cast<std::size_t>(g.s));
  for (long v = g.s; v >= 2; --v) {
    const std::set<long>& nb = adj[static_cast<std::size_t>(v)];
    if (nb.empty())
      throw ValidationError("vertex " + std::to_string(v) +
                            " has no earlier neighbor after blow-downs");
    if (nb.size() > 2)
      throw ValidationError("vertex " + std::to_string(v) +
                            " meets more than two earlier divisors after blow-downs");
    if (!nb.count(v - 1))
      throw ValidationError("vertex " + std::to_string(v) +
                            " does not meet the previous divisor after blow-downs");
    std::vector<long> pr(nb.begin(), nb.end());
    for (long u : pr) adj[static_cast<std::size_t>(u)].erase(v);
    if (pr.size() == 2) {
      long a = pr[0], b = pr[1];
      if (adj[static_cast<std::size_t>(a)].count(b))
        throw ValidationError("blowing down vertex " + std::to_string(v) +
                              " recreates the edge " + std::to_string(a) + "-" +
                              std::to_string(b));
      adj[static_cast<std::size_t>(a)].insert(b);
      adj[static_cast<std::size_t>(b)].insert(a);
    }
    c.prox[static_cast<std::size_t>(v - 1)] = std::move(pr);
  }
  return c;
}

std::vector<std::pair<long, long>> edges_from_configuration(const Configuration& c) {
  std::set<std::pair<long, long>> es;
  for (long v = 2; v <= c.s; ++v) {
    const auto& pr = c.prox[static_cast<std::size_t>(v - 1)];
    if (pr.size() == 2) {
      std::pair<long, long> cut{pr[0], pr[1]};
      if (!es.count(cut))
        throw ValidationError("satellite point " + std::to_string(v) +
                              " does not sit on an intersection of divisors");
      es.erase(cut);
    }
    for (long u : pr) es.insert({u, v});
  }
  return {es.begin(), es.end()};
}

std::vector<Int> multiplicities_from_configuration(const Configuration& c) {
  std::vector<Int> m(static_cast<std::size_t>(c.s), Int(0));
  m[static_cast<std::size_t>(c.s - 1)] = 1;
  for (long i = c.s - 1; i >= 1; --i) {
    Int total = 0;
    for (long j = i + 1; j <= c.s; ++j)
      if (prox_contains(c.prox[static_cast<std::size_t>(j - 1)], i))
        total += m[static_cast<std::size_t>(j - 1)];
    m[static_cast<std::size_t>(i - 1)] = total;
  }
  return m;
}

DualGraph graph_from_structure(const HNExpansion& hn) {
  require_valid(hn);
  ValClass cls = classify(hn);
  if (cls == ValClass::Curve)
    throw DomainError("curve data has no dual graph; use vdelta for its affine volume family");
  ValueData vd = value_data(hn);
  long s = 0;
  if (cls == ValClass::Divisorial) {
    s = hn.total_points();
  } else {
    std::size_t lf = hn.last_free_row();
    for (std::size_t i = 0; i <= lf; ++i) s += hn.rows[i].h;
  }
  std::vector<ValElem> m(vd.m.begin(), vd.m.begin() + s);
  Configuration c;
  c.s = s;
  c.prox = proximity_from_multiplicities(m);
  DualGraph g;
  g.s = s;
  g.edges = edges_from_configuration(c);
  if (cls == ValClass::Divisorial)
    g.arrow = s;
  else
    g.tail = tail_stream(hn);
  require_valid(g);
  return g;
}

HNExpansion structure_from_graph(const DualGraph& g, const FieldSpec& field) {
  require_valid(g);
  Configuration c = configuration_from_graph(g);
  bool irrational = g.tail.has_value();

  std::vector<ValElem> m;
  if (irrational) {
    QuadIrr gamma = g.tail->eval().quad();
    m.assign(static_cast<std::size_t>(c.s), ValElem(0));
    m[static_cast<std::size_t>(c.s - 1)] = ValElem(0, 1, gamma);
    for (long i = c.s - 1; i >= 1; --i) {
      ValElem total(0);
      for (long j = i + 1; j <= c.s; ++j)
        if (prox_contains(c.prox[static_cast<std::size_t>(j - 1)], i))
          total = total + m[static_cast<std::size_t>(j - 1)];
      m[static_cast<std::size_t>(i - 1)] = total;
    }
  } else {
    for (const Int& x : multiplicities_from_configuration(c)) m.push_back(ValElem(x));
  }

  std::vector<Run> runs = constant_runs(m);
  std::vector<HNRow> rows;
  for (std::size_t idx = 0; idx < runs.size(); ++idx) {
    const Run& r = runs[idx];
    RunShape sh = run_shape(c, r);
    bool last_run = idx + 1 == runs.size();
    if (idx == 0) {
      if (sh.sats > 0)
        throw ValidationError("the first multiplicity run cannot contain satellite points");
      rows.push_back(free_row(r.len(), 1, {}));
      continue;
    }
    bool leader_free = c.is_free(r.first);
    bool prev_free = rows.back().kind == RowKind::Free;
    if (leader_free != prev_free)
      throw ValidationError("point " + std::to_string(r.first) +
                            " breaks the row pattern: a run leader is free exactly when the "
                            "previous row is free");
    long k = sh.sats + 1;
    if (irrational && last_run) {
      rows.push_back(free_row(r.len(), k, {}));
    } else if (sh.frees > 0) {
      rows.push_back(free_row(r.len(), k, {}));
    } else if (!last_run) {
      if (c.is_free(runs[idx + 1].first))
        rows.push_back(free_row(r.len(), r.len(), {}));
      else
        rows.push_back(power_row(r.len()));
    } else {
      rows.push_back(power_row(r.len()));
    }
  }

  HNExpansion out;
  out.field = field;
  out.rows = std::move(rows);
  if (irrational)
    out.terminal = Terminal{ValClass::Irrational, g.tail};
  else
    out.terminal = Terminal{ValClass::Divisorial, std::nullopt};
  out = with_canonical_coefficients(out);
  require_valid(out);

  DualGraph back = graph_from_structure(out);
  if (back.s != g.s || back.edges != g.edges || back.tail != g.tail)
    throw ValidationError("the graph is not realized by any expansion");
  return out;
}

DualGraph graph_from_exponents(const std::vector<Alg>& exps) {
  return graph_from_structure(structure_from_exponents(exps, FieldSpec::rationals()));
}

DualGraph append_free_vertices(const DualGraph& g, long count) {
  require_valid(g);
  if (g.tail) throw DomainError("free vertices are appended to divisorial graphs only");
  if (count < 0) throw DomainError("cannot append a negative number of vertices");
  DualGraph out = g;
  for (long v = g.s + 1; v <= g.s + count; ++v) out.edges.emplace_back(v - 1, v);
  out.s = g.s + count;
  if (g.arrow) out.arrow = out.s;
  std::sort(out.edges.begin(), out.edges.end());
  require_valid(out);
  return out;
}

DualGraph prepend_free_vertices(const DualGraph& g, long count) {
  require_valid(g);
  if (count < 0) throw DomainError("cannot prepend a negative number of vertices");
  DualGraph out;
  out.s = g.s + count;
  for (long v = 2; v <= count + 1; ++v) out.edges.emplace_back(v - 1, v);
  for (auto [a, b] : g.edges) out.edges.emplace_back(a + count, b + count);
  std::sort(out.edges.begin(), out.edges.end());
  if (g.arrow) out.arrow = *g.arrow + count;
  out.tail = g.tail;
  require_valid(out);
  return out;
}

}  // namespace planeval
