#include "flatbox/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace flatbox {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (const auto& [u, w] : edges) add_edge(u, w);
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
}

bool Graph::has_edge(int u, int w) const {
  check_vertex(u);
  check_vertex(w);
  return (adj_[u - 1] & vbit(w)) != 0;
}

void Graph::add_edge(int u, int w) {
  check_vertex(u);
  check_vertex(w);
  if (u == w) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (u > w) std::swap(u, w);
  if (adj_[u - 1] & vbit(w))
    throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(w) + ")");
  adj_[u - 1] |= vbit(w);
  adj_[w - 1] |= vbit(u);
  auto e = std::make_pair(u, w);
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v - 1]);
}

std::uint64_t Graph::vertex_mask() const {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

bool Graph::is_complete() const {
  return edge_count() == n_ * (n_ - 1) / 2;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::uint64_t seen = vbit(1), frontier = vbit(1);
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f) + 1;
      f &= f - 1;
      next |= adj_[v - 1];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == vertex_mask();
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int w = u + 1; w <= n; ++w) g.add_edge(u, w);
  return g;
}

Graph complete_minus(int n, const std::vector<std::pair<int, int>>& missing) {
  Graph skip(n, missing);
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int w = u + 1; w <= n; ++w)
      if (!skip.has_edge(u, w)) g.add_edge(u, w);
  return g;
}

Graph make_cycle(int s) {
  if (s < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(s);
  for (int v = 1; v < s; ++v) g.add_edge(v, v + 1);
  g.add_edge(s, 1);
  return g;
}

Graph make_path(const std::vector<int>& labels) {
  if (labels.empty()) throw std::invalid_argument("path needs at least one vertex");
  int n = 0;
  for (int v : labels) n = std::max(n, v);
  Graph g(n);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1) throw std::invalid_argument("vertex out of range: " + std::to_string(labels[i]));
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) throw std::invalid_argument("repeated path label");
  }
  for (std::size_t i = 1; i < labels.size(); ++i) g.add_edge(labels[i - 1], labels[i]);
  return g;
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph h(n);
  for (int u = 1; u <= n; ++u)
    for (int w = u + 1; w <= n; ++w)
      if (!g.has_edge(u, w)) h.add_edge(u, w);
  return h;
}

std::vector<std::pair<int, int>> non_edges(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  int n = g.vertex_count();
  for (int u = 1; u <= n; ++u)
    for (int w = u + 1; w <= n; ++w)
      if (!g.has_edge(u, w)) out.emplace_back(u, w);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& members) {
  std::vector<int> labels = members;
  for (int v : labels)
    if (v < 1 || v > g.vertex_count())
      throw std::invalid_argument("induced subgraph member out of range");
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) throw std::invalid_argument("repeated induced subgraph member");
  Graph h(static_cast<int>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (g.has_edge(labels[i], labels[j])) h.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return {std::move(h), std::move(labels)};
}

std::vector<std::pair<int, int>> neighborhood_closure(const Graph& g, int v) {
  // All pairs of distinct neighbors of v, whether or not they are edges of g.
  std::uint64_t nb = g.neighbors(v);
  std::vector<int> ns;
  while (nb) {
    ns.push_back(std::countr_zero(nb) + 1);
    nb &= nb - 1;
  }
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = i + 1; j < ns.size(); ++j) out.emplace_back(ns[i], ns[j]);
  return out;
}

bool is_simplicial(const Graph& g, int v) {
  std::uint64_t nb = g.neighbors(v);
  std::uint64_t rest = nb;
  while (rest) {
    int u = std::countr_zero(rest) + 1;
    rest &= rest - 1;
    if ((nb & ~g.neighbors(u) & ~vbit(u)) != 0) return false;
  }
  return true;
}

InducedSubgraph outer_path(int s, int k) {
  if (s < 5) throw std::invalid_argument("outer path needs s >= 5");
  if (k < 1 || k > s) throw std::invalid_argument("anchor out of range");
  Graph cycle = make_cycle(s);
  std::vector<int> members;
  for (int t = 2; t <= s - 2; ++t) members.push_back((k - 1 + t) % s + 1);
  return induced_subgraph(cycle, members);
}

namespace {

// Largest clique size, simple mask DFS. Used only as a lower bound here.
int max_clique_size(const std::vector<std::uint64_t>& adj, std::uint64_t cand, int depth) {
  int best = depth;
  while (cand) {
    if (depth + std::popcount(cand) <= best) break;
    int v = std::countr_zero(cand) + 1;
    cand &= cand - 1;
    best = std::max(best, max_clique_size(adj, cand & adj[v - 1], depth + 1));
  }
  return best;
}

bool color_with(const Graph& g, const std::vector<int>& order, int k, std::vector<int>& color) {
  int n = g.vertex_count();
  std::vector<int> used_max(static_cast<std::size_t>(n) + 1, 0);
  // Backtracking over the static order; vertex i may use colors 1..min(k, max used so far + 1),
  // which breaks color-permutation symmetry.
  std::vector<int> assigned(order.size(), 0);
  int i = 0;
  while (true) {
    if (i == static_cast<int>(order.size())) {
      for (std::size_t j = 0; j < order.size(); ++j) color[order[j] - 1] = assigned[j];
      return true;
    }
    int v = order[i];
    int cap = std::min(k, used_max[i] + 1);
    int c = assigned[i] + 1;
    bool placed = false;
    for (; c <= cap; ++c) {
      bool ok = true;
      std::uint64_t nb = g.neighbors(v);
      for (int j = 0; j < i; ++j)
        if ((nb & vbit(order[j])) && assigned[j] == c) {
          ok = false;
          break;
        }
      if (ok) {
        assigned[i] = c;
        used_max[i + 1] = std::max(used_max[i], c);
        placed = true;
        break;
      }
    }
    if (placed) {
      ++i;
      if (i < static_cast<int>(order.size())) assigned[i] = 0;
    } else {
      assigned[i] = 0;
      --i;
      if (i < 0) return false;
    }
  }
}

}  // namespace

Coloring chromatic_number(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return {0, {}};
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  // Greedy upper bound on the same order.
  std::vector<int> greedy(static_cast<std::size_t>(n), 0);
  int ub = 0;
  for (int v : order) {
    std::uint64_t nb = g.neighbors(v);
    int c = 1;
    while (true) {
      bool clash = false;
      for (int u = 1; u <= n; ++u)
        if ((nb & vbit(u)) && greedy[u - 1] == c) {
          clash = true;
          break;
        }
      if (!clash) break;
      ++c;
    }
    greedy[v - 1] = c;
    ub = std::max(ub, c);
  }
  int lb = max_clique_size(g.adjacency(), g.vertex_mask(), 0);

  std::vector<int> color(static_cast<std::size_t>(n), 0);
  for (int k = lb; k <= ub; ++k) {
    if (color_with(g, order, k, color)) return {k, color};
  }
  return {ub, greedy};  // unreachable: k = ub always succeeds
}

bool valid_coloring(const Graph& g, const std::vector<int>& color, int k) {
  if (static_cast<int>(color.size()) != g.vertex_count()) return false;
  for (int c : color)
    if (c < 1 || c > k) return false;
  for (const auto& [u, w] : g.edges())
    if (color[u - 1] == color[w - 1]) return false;
  return true;
}

bool is_bipartite(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  for (int s = 1; s <= n; ++s) {
    if (side[s - 1] != 0) continue;
    side[s - 1] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      std::uint64_t nb = g.neighbors(v);
      while (nb) {
        int u = std::countr_zero(nb) + 1;
        nb &= nb - 1;
        if (side[u - 1] == 0) {
          side[u - 1] = -side[v - 1];
          stack.push_back(u);
        } else if (side[u - 1] == side[v - 1]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_odd_cycle(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3 || n % 2 == 0) return false;
  for (int v = 1; v <= n; ++v)
    if (g.degree(v) != 2) return false;
  return g.is_connected();
}

bool is_3_critical(const Graph& g) {
  if (chromatic_number(g).chi != 3) return false;
  int n = g.vertex_count();
  for (int v = 1; v <= n; ++v) {
    std::vector<int> rest;
    for (int u = 1; u <= n; ++u)
      if (u != v) rest.push_back(u);
    Graph h = induced_subgraph(g, rest).graph;
    if (h.edge_count() == 0 || !is_bipartite(h)) return false;
  }
  return true;
}

}  // namespace flatbox
