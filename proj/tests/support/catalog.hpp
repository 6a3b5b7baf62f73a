#pragma once

#include <vector>

#include "flatbox/graph.hpp"

namespace flatbox::testsupport {

// Exact isomorphism test by backtracking over degree-compatible mappings.
bool isomorphic(const Graph& a, const Graph& b);

// All non-isomorphic graphs on exactly n vertices (vertex augmentation with
// isomorphism rejection). Cached; cheap to call repeatedly.
const std::vector<Graph>& graph_catalog(int n);

}  // namespace flatbox::testsupport
