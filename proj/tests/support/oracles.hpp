#pragma once

#include <optional>
#include <vector>

#include "flatbox/boxes.hpp"
#include "flatbox/graph.hpp"
#include "flatbox/slim.hpp"

namespace flatbox::testsupport {

// Deliberately naive reference implementations. They share no search code
// with the library paths they cross-check.

// Smallest k admitting a proper coloring, by plain backtracking.
int oracle_chromatic(const Graph& g);

// Every maximal clique, found by scanning all vertex subsets. n <= ~16.
std::vector<std::uint64_t> oracle_maximal_cliques(const Graph& g);

// Interval recognition by trying every permutation of the maximal cliques
// and checking per-vertex consecutiveness. Intended for n <= 6.
bool oracle_is_interval(const Graph& g);

// Same question answered over all clique orderings at once, as a subset DP
// (state: placed cliques + last placed). Handles n = 7 comfortably.
bool oracle_is_interval_dp(const Graph& g);

// n-pierceability by brute force over all n-subsets of the full grid of
// lower-endpoint combinations. Small families only.
bool oracle_pierceable(const BoxFamily& f, int n);

// Every interval supergraph of g except the complete graph, enumerated by
// filtering all edge supersets through oracle_is_interval. n <= 5.
std::vector<Graph> oracle_interval_supergraphs(const Graph& g);

// Whether g has a slim decomposition with exactly d factors, decided by a
// direct search over the oracle supergraph list; on success the witness was
// validated with check_slim before returning.
bool oracle_realizable_at_d(const Graph& g, int p, int d,
                            const std::vector<Graph>& supergraphs);

// First d in [p, d_max] admitting a decomposition, if any.
std::optional<int> oracle_p_boxicity(const Graph& g, int p, int d_max);

}  // namespace flatbox::testsupport
