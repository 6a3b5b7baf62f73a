#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace flatbox {

// Bit for vertex v in a vertex mask. Vertices are 1-based everywhere.
inline constexpr std::uint64_t vbit(int v) { return std::uint64_t{1} << (v - 1); }

// Finite simple graph on vertices 1..n, n <= 64. Adjacency is kept both as a
// sorted edge list (u < w, lexicographic) and as per-vertex bitmasks, which
// the search code leans on heavily.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int u, int w) const;
  void add_edge(int u, int w);  // rejects loops, out-of-range ends, duplicates

  std::uint64_t neighbors(int v) const { return adj_[v - 1]; }
  int degree(int v) const;
  std::uint64_t vertex_mask() const;
  const std::vector<std::uint64_t>& adjacency() const { return adj_; }

  bool is_complete() const;
  bool is_connected() const;  // vacuously true for n <= 1

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adj_;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph complete_minus(int n, const std::vector<std::pair<int, int>>& missing);
Graph make_cycle(int s);  // v1..vs in cyclic order, s >= 3
// Path along the given distinct labels; vertex count is the largest label.
Graph make_path(const std::vector<int>& labels);
Graph complement(const Graph& g);
std::vector<std::pair<int, int>> non_edges(const Graph& g);

// labels[i] is the original label of new vertex i+1.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> labels;
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& members);

// Edges of the subgraph induced on the closed neighborhood N[v].
std::vector<std::pair<int, int>> neighborhood_closure(const Graph& g, int v);

// True when N(v) is a clique.
bool is_simplicial(const Graph& g, int v);

// The path C_s - N[v_k], i.e. vertices v_{k+2},...,v_{k+s-2} in cyclic order.
InducedSubgraph outer_path(int s, int k);

struct Coloring {
  int chi = 0;
  std::vector<int> color;  // color[v-1] in 1..chi
};
Coloring chromatic_number(const Graph& g);  // exact
bool valid_coloring(const Graph& g, const std::vector<int>& color, int k);

bool is_bipartite(const Graph& g);
bool is_odd_cycle(const Graph& g);
// Chromatic number 3 and every proper subgraph 2-colorable.
bool is_3_critical(const Graph& g);

}  // namespace flatbox
