#include "planeval/graph/dual_graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "planeval/errors.hpp"

namespace planeval {

std::vector<std::string> validate_graph(const DualGraph& g) {
  std::vector<std::string> out;
  if (g.s < 1) {
    out.push_back("vertex count must be at least 1");
    return out;
  }
  for (auto [a, b] : g.edges) {
    if (a < 1 || b > g.s || a >= b)
      out.push_back("edge " + std::to_string(a) + "-" + std::to_string(b) +
                    " is not an ordered pair of distinct vertices in range");
  }
  if (!out.empty()) return out;
  auto sorted = g.edges;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.edges) out.push_back("edges must be listed in sorted order");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    out.push_back("duplicate edge");
  if (static_cast<long>(g.edges.size()) != g.s - 1)
    out.push_back("a graph on " + std::to_string(g.s) + " vertices needs " +
                  std::to_string(g.s - 1) + " edges to be a tree, got " +
                  std::to_string(g.edges.size()));
  std::vector<int> deg(static_cast<std::size_t>(g.s), 0);
  for (auto [a, b] : g.edges) {
    ++deg[static_cast<std::size_t>(a - 1)];
    ++deg[static_cast<std::size_t>(b - 1)];
  }
  for (long v = 1; v <= g.s; ++v)
    if (deg[static_cast<std::size_t>(v - 1)] > 3)
      out.push_back("vertex " + std::to_string(v) +
                    " has degree " + std::to_string(deg[static_cast<std::size_t>(v - 1)]) +
                    ", exceeding 3");
  if (g.arrow && g.tail)
    out.push_back("a graph carries either an arrow or a quotient stream, not both");
  if (g.arrow && *g.arrow != g.s)
    out.push_back("the arrow must sit at the last vertex " + std::to_string(g.s) +
                  ", got " + std::to_string(*g.arrow));
  if (g.tail && g.tail->finite())
    out.push_back("the quotient stream marker must be infinite");
  return out;
}

void require_valid(const DualGraph& g) {
  auto diags = validate_graph(g);
  if (diags.empty()) return;
  std::string msg = "invalid dual graph:";
  for (const auto& d : diags) msg += "\n  " + d;
  throw ValidationError(msg);
}

std::string serialize_graph(const DualGraph& g) {
  std::ostringstream os;
  os << "s=" << g.s << "\n";
  os << "edges:";
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    os << (i ? ", " : " ") << g.edges[i].first << "-" << g.edges[i].second;
  os << "\n";
  if (g.arrow) os << "arrow=" << *g.arrow << "\n";
  if (g.tail) os << "tail=" << g.tail->to_string() << "\n";
  return os.str();
}

namespace {

void fail_at(long line_no, const std::string& msg) {
  throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

long parse_vertex(const std::string& tok, long line_no) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) fail_at(line_no, "bad vertex number '" + tok + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    fail_at(line_no, "bad vertex number '" + tok + "'");
  }
  return 0;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

DualGraph parse_graph(const std::string& text) {
  DualGraph g;
  bool have_s = false, have_edges = false;
  std::istringstream is(text);
  std::string raw;
  long line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("s=", 0) == 0) {
      if (have_s) fail_at(line_no, "duplicate vertex count");
      g.s = parse_vertex(strip(line.substr(2)), line_no);
      have_s = true;
    } else if (line.rfind("edges:", 0) == 0) {
      if (have_edges) fail_at(line_no, "duplicate edge list");
      have_edges = true;
      std::string rest = strip(line.substr(6));
      if (rest.empty()) continue;
      std::istringstream es(rest);
      std::string item;
      while (std::getline(es, item, ',')) {
        item = strip(item);
        auto dash = item.find('-');
        if (dash == std::string::npos)
          fail_at(line_no, "edge '" + item + "' is not of the form i-j");
        long a = parse_vertex(strip(item.substr(0, dash)), line_no);
        long b = parse_vertex(strip(item.substr(dash + 1)), line_no);
        g.edges.emplace_back(a, b);
      }
    } else if (line.rfind("arrow=", 0) == 0) {
      if (g.arrow) fail_at(line_no, "duplicate arrow");
      g.arrow = parse_vertex(strip(line.substr(6)), line_no);
    } else if (line.rfind("tail=", 0) == 0) {
      if (g.tail) fail_at(line_no, "duplicate tail");
      std::string body = strip(line.substr(5));
      if (!body.empty() && body[0] == '(') body = "[" + body + "]";
      g.tail = ContFrac::parse(body).canonical();
    } else {
      fail_at(line_no, "unrecognized line '" + line + "'");
    }
  }
  if (!have_s) throw ParseError("missing vertex count line 's=<n>'");
  if (!have_edges && g.s > 1) throw ParseError("missing edge list line 'edges: ...'");
  require_valid(g);
  return g;
}

DualGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_graph(os.str());
}

std::string export_dot(const DualGraph& g) {
  std::ostringstream os;
  os << "graph dual_graph {\n";
  os << "  node [shape=circle];\n";
  for (long v = 1; v <= g.s; ++v) {
    os << "  e" << v << " [label=\"" << v << "\"";
    if (g.arrow && *g.arrow == v) os << ", peripheries=2";
    os << "];\n";
  }
  if (g.tail)
    os << "  tail [label=\"" << g.tail->to_string() << "\", shape=box];\n";
  for (auto [a, b] : g.edges) os << "  e" << a << " -- e" << b << ";\n";
  if (g.tail) os << "  e" << g.s << " -- tail [style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace planeval
