#pragma once
// Dual graphs of the resolution clusters behind an expansion. Vertices are
// the blown-up points in creation order (1-based). A divisorial graph carries
// an arrow at its last vertex; an irrational graph stops at the last free row
// and carries the full quotient stream as a marker.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planeval/exact/cont_frac.hpp"
#include "planeval/exact/val_elem.hpp"
#include "planeval/hn/expansion.hpp"

namespace planeval {

struct DualGraph {
  long s = 1;
  std::vector<std::pair<long, long>> edges;  // i < j, sorted
  std::optional<long> arrow;                 // divisorial data: always the last vertex
  std::optional<ContFrac> tail;              // irrational data: quotient stream

  bool operator==(const DualGraph& o) const {
    return s == o.s && edges == o.edges && arrow == o.arrow && tail == o.tail;
  }
};

std::vector<std::string> validate_graph(const DualGraph& g);
void require_valid(const DualGraph& g);

// Result of blowing the graph down vertex by vertex: the proximity structure
// of the cluster. prox[j-1] lists the earlier points p_j is proximate to,
// sorted; a point is free when it has at most one target.
struct Configuration {
  long s = 1;
  std::vector<std::vector<long>> prox;
  bool is_free(long j) const { return prox[static_cast<std::size_t>(j - 1)].size() <= 1; }
};

Configuration configuration_from_graph(const DualGraph& g);
std::vector<std::pair<long, long>> edges_from_configuration(const Configuration& c);

// Multiplicity of each cluster point for the divisorial valuation at the last
// one: ones propagated backward through the proximity relations.
std::vector<Int> multiplicities_from_configuration(const Configuration& c);

DualGraph graph_from_structure(const HNExpansion& hn);
HNExpansion structure_from_graph(const DualGraph& g, const FieldSpec& field);
DualGraph graph_from_exponents(const std::vector<Alg>& exps);

DualGraph append_free_vertices(const DualGraph& g, long count);
DualGraph prepend_free_vertices(const DualGraph& g, long count);

std::string export_dot(const DualGraph& g);

// Text format:
//   s=3
//   edges: 1-3, 2-3
//   arrow=3              (or tail=[1; (2)]; bare tail=(2) is accepted)
DualGraph parse_graph(const std::string& text);
DualGraph load_graph(const std::string& path);
std::string serialize_graph(const DualGraph& g);

}  // namespace planeval
