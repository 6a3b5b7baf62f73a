#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatbox/boxes.hpp"
#include "flatbox/graph.hpp"

namespace flatbox {

// Witness that a graph is realizable by p-flat boxes in R^d: interval
// supergraphs F_1..F_d whose intersection is the graph, plus for every
// vertex a set J_v of exactly d-p axes on which that vertex is simplicial.
struct SlimDecomposition {
  int p = 0;
  int d = 0;
  std::vector<Graph> factors;
  std::vector<std::vector<int>> jv;  // jv[v-1]: sorted 1-based factor indices
};

struct SlimViolation {
  std::string rule;    // machine-readable tag
  std::string detail;  // human-readable
  int vertex = 0;      // 0 when not vertex-specific
  int factor = 0;      // 0 when not factor-specific
};

struct SlimCheck {
  bool ok = true;
  std::optional<SlimViolation> violation;  // first violation in rule order
};

SlimCheck check_slim(const Graph& g, const SlimDecomposition& dec);

// Factor i is the intersection graph of axis i; J_v picks the lowest d-p
// axes on which box v is degenerate. Requires every box to have dim <= p.
SlimDecomposition realization_to_decomposition(const BoxFamily& f, int p);

// Realizes each factor as integer intervals, then shrinks every vertex to a
// point on each of its J_v axes (possible exactly because the vertex is
// simplicial there). The result's intersection graph is g and every box has
// dim <= p.
BoxFamily decomposition_to_realization(const Graph& g, const SlimDecomposition& dec);

}  // namespace flatbox
