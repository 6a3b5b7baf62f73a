#pragma once

#include <cstdint>
#include <vector>

namespace flatbox::detail {

// All functions below work on adjacency masks adj[0..n-1] (bit v-1 set when
// v is adjacent), so hot search loops never materialize Graph objects.

// Maximal cliques as vertex masks, Bron-Kerbosch with pivoting, result
// sorted ascending for determinism.
std::vector<std::uint64_t> maximal_cliques(const std::uint64_t* adj, int n);

// Maximum cardinality search; chordal iff the reverse selection order is a
// perfect elimination order. When not chordal, *bad_vertex (1-based) is a
// vertex whose later neighbors are not a clique.
bool is_chordal_masks(const std::uint64_t* adj, int n, int* bad_vertex = nullptr);

struct CliqueOrdering {
  bool found = false;
  std::vector<int> order;  // indices into the clique list
  std::uint64_t nodes = 0;
};
// Backtracking search for an order of the maximal cliques in which every
// vertex's cliques are consecutive. Such an order exists iff the graph is
// interval (given chordality this is the full interval test).
CliqueOrdering consecutive_clique_ordering(const std::vector<std::uint64_t>& cliques, int n);

// Chordality prefilter plus ordering search.
bool is_interval_masks(const std::uint64_t* adj, int n);

// Bit v-1 set when N(v) is not a clique.
std::uint64_t nonsimplicial_mask(const std::uint64_t* adj, int n);

}  // namespace flatbox::detail
