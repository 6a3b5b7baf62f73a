#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "flatbox/budget.hpp"
#include "flatbox/graph.hpp"

namespace flatbox {

// Closed integer intervals [lo, hi], one per vertex.
struct IntervalRealization {
  std::vector<std::array<long long, 2>> intervals;

  Graph intersection_graph() const;
};

struct IntervalRecognition {
  bool is_interval = false;
  std::optional<IntervalRealization> realization;  // set when interval
  // Witness when not interval: an induced C4 in cyclic order if one exists,
  // otherwise a longer induced hole; plus the search digest either way.
  std::optional<std::array<int, 4>> induced_c4;
  std::optional<std::vector<int>> hole;
  std::size_t maximal_clique_count = 0;
  std::uint64_t order_search_nodes = 0;
};

// Exact interval graph recognition (clique ordering). The realization places
// each vertex on the span of its cliques' positions, so coordinates are
// integers in [0, #cliques).
IntervalRecognition recognize_interval(const Graph& g);

bool is_chordal(const Graph& g);

// Intersection of graphs on a common vertex set: edge iff present in all.
// The empty intersection is the complete graph, so an empty list needs an
// explicit vertex count.
Graph intersect_graphs(const std::vector<Graph>& gs, int n_if_empty = -1);

// Streams the interval supergraphs of g in canonical order: by number of
// added edges, then lexicographically by the added non-edge index set.
// Includes g itself (if interval) and always ends with the complete graph.
class IntervalSupergraphStream {
 public:
  explicit IntervalSupergraphStream(Graph g);

  // Also reports the added set as a mask over non_edges() indices.
  struct Item {
    Graph graph;
    std::uint64_t added_mask;
  };
  std::optional<Item> next(SearchBudget* budget = nullptr);

  const std::vector<std::pair<int, int>>& non_edges() const { return non_edges_; }
  std::uint64_t enumerated() const { return enumerated_; }

 private:
  Graph base_;
  std::vector<std::pair<int, int>> non_edges_;
  std::vector<int> picks_;  // current combination, ascending indices
  int take_ = 0;
  bool done_ = false;
  std::uint64_t enumerated_ = 0;
};

// Drains the stream, emitting at most `budget` supergraphs.
std::vector<Graph> interval_supergraphs(const Graph& g, std::size_t budget = 1 << 20);

}  // namespace flatbox
