#include "flatbox/interval.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "flatbox/detail/maskops.hpp"

namespace flatbox::detail {

namespace {

void bron_kerbosch(std::uint64_t r, std::uint64_t p, std::uint64_t x, const std::uint64_t* adj,
                   std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  std::uint64_t px = p | x;
  int pivot = 0, best = -1;
  std::uint64_t scan = px;
  while (scan) {
    int u = std::countr_zero(scan) + 1;
    scan &= scan - 1;
    int c = std::popcount(p & adj[u - 1]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  std::uint64_t cand = p & ~adj[pivot - 1];
  while (cand) {
    int v = std::countr_zero(cand) + 1;
    std::uint64_t vb = cand & (~cand + 1);
    cand &= cand - 1;
    bron_kerbosch(r | vb, p & adj[v - 1], x & adj[v - 1], adj, out);
    p &= ~vb;
    x |= vb;
  }
}

bool mask_is_clique(std::uint64_t m, const std::uint64_t* adj) {
  std::uint64_t rest = m;
  while (rest) {
    int u = std::countr_zero(rest) + 1;
    rest &= rest - 1;
    if ((m & ~adj[u - 1] & ~(std::uint64_t{1} << (u - 1))) != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> maximal_cliques(const std::uint64_t* adj, int n) {
  if (n == 0) return {};
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> out;
  bron_kerbosch(0, all, 0, adj, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_chordal_masks(const std::uint64_t* adj, int n, int* bad_vertex) {
  if (n <= 1) return true;
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<std::uint64_t> earlier(static_cast<std::size_t>(n), 0);
  std::uint64_t visited = 0;
  for (int step = 0; step < n; ++step) {
    int v = 0, best = -1;
    std::uint64_t scan = all & ~visited;
    while (scan) {
      int u = std::countr_zero(scan) + 1;
      scan &= scan - 1;
      if (weight[u - 1] > best) {
        best = weight[u - 1];
        v = u;
      }
    }
    earlier[v - 1] = adj[v - 1] & visited;
    visited |= std::uint64_t{1} << (v - 1);
    std::uint64_t nb = adj[v - 1] & ~visited;
    while (nb) {
      int u = std::countr_zero(nb) + 1;
      nb &= nb - 1;
      ++weight[u - 1];
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (!mask_is_clique(earlier[v - 1], adj)) {
      if (bad_vertex) *bad_vertex = v;
      return false;
    }
  }
  return true;
}

CliqueOrdering consecutive_clique_ordering(const std::vector<std::uint64_t>& cliques, int n) {
  CliqueOrdering result;
  int k = static_cast<int>(cliques.size());
  if (k == 0) {
    result.found = true;
    return result;
  }
  // status per vertex: 0 unseen, 1 open, 2 closed. A placement is legal iff
  // it reopens no closed vertex; every vertex's cliques are then consecutive.
  std::vector<int> status(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  std::vector<char> used(static_cast<std::size_t>(k), 0);
  std::uint64_t nodes = 0;

  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(order.size()) == k) return true;
    for (int c = 0; c < k; ++c) {
      if (used[c]) continue;
      ++nodes;
      std::uint64_t m = cliques[c];
      bool legal = true;
      std::uint64_t scan = m;
      while (scan) {
        int v = std::countr_zero(scan) + 1;
        scan &= scan - 1;
        if (status[v - 1] == 2) {
          legal = false;
          break;
        }
      }
      if (!legal) continue;
      std::vector<std::pair<int, int>> undo;
      for (int v = 1; v <= n; ++v) {
        bool in = (m >> (v - 1)) & 1;
        if (in && status[v - 1] == 0) {
          undo.emplace_back(v, 0);
          status[v - 1] = 1;
        } else if (!in && status[v - 1] == 1) {
          undo.emplace_back(v, 1);
          status[v - 1] = 2;
        }
      }
      used[c] = 1;
      order.push_back(c);
      if (self(self)) return true;
      order.pop_back();
      used[c] = 0;
      for (auto& [v, s] : undo) status[v - 1] = s;
    }
    return false;
  };

  result.found = rec(rec);
  result.nodes = nodes;
  if (result.found) result.order = order;
  return result;
}

bool is_interval_masks(const std::uint64_t* adj, int n) {
  if (n <= 1) return true;
  if (!is_chordal_masks(adj, n)) return false;
  auto cliques = maximal_cliques(adj, n);
  return consecutive_clique_ordering(cliques, n).found;
}

std::uint64_t nonsimplicial_mask(const std::uint64_t* adj, int n) {
  std::uint64_t out = 0;
  for (int v = 1; v <= n; ++v) {
    if (!mask_is_clique(adj[v - 1], adj)) out |= std::uint64_t{1} << (v - 1);
  }
  return out;
}

}  // namespace flatbox::detail

namespace flatbox {

Graph IntervalRealization::intersection_graph() const {
  int n = static_cast<int>(intervals.size());
  Graph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int w = u + 1; w <= n; ++w) {
      const auto& a = intervals[u - 1];
      const auto& b = intervals[w - 1];
      if (std::max(a[0], b[0]) <= std::min(a[1], b[1])) g.add_edge(u, w);
    }
  }
  return g;
}

namespace {

// Shortest induced cycle of length >= 4, found by scanning triples u-v-w with
// u,w nonadjacent and taking a shortest u-w path outside N[v]. Any shortest
// path is induced, and no interior vertex touches v, so the closed walk is a
// hole. Returns empty when the graph is chordal.
std::vector<int> shortest_hole(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> best;
  for (int v = 1; v <= n; ++v) {
    std::uint64_t nb = g.neighbors(v);
    std::uint64_t us = nb;
    while (us) {
      int u = std::countr_zero(us) + 1;
      us &= us - 1;
      std::uint64_t ws = nb & ~g.neighbors(u);
      while (ws) {
        int w = std::countr_zero(ws) + 1;
        ws &= ws - 1;
        if (w <= u) continue;
        std::uint64_t banned = (nb | vbit(v)) & ~vbit(u) & ~vbit(w);
        std::vector<int> prev(static_cast<std::size_t>(n) + 1, 0);
        std::deque<int> queue{u};
        prev[u] = u;
        while (!queue.empty() && prev[w] == 0) {
          int x = queue.front();
          queue.pop_front();
          std::uint64_t next = g.neighbors(x) & ~banned;
          while (next) {
            int y = std::countr_zero(next) + 1;
            next &= next - 1;
            if (prev[y] == 0) {
              prev[y] = x;
              queue.push_back(y);
            }
          }
        }
        if (prev[w] == 0) continue;
        std::vector<int> path;
        for (int x = w; x != u; x = prev[x]) path.push_back(x);
        path.push_back(u);
        path.push_back(v);  // closes the cycle
        if (best.empty() || path.size() < best.size()) best = path;
      }
    }
  }
  return best;
}

}  // namespace

IntervalRecognition recognize_interval(const Graph& g) {
  IntervalRecognition rec;
  int n = g.vertex_count();
  const std::uint64_t* adj = g.adjacency().data();
  if (!detail::is_chordal_masks(adj, n)) {
    auto hole = shortest_hole(g);
    if (hole.size() == 4) {
      rec.induced_c4 = {hole[0], hole[1], hole[2], hole[3]};
    } else {
      rec.hole = hole;
    }
    rec.maximal_clique_count = detail::maximal_cliques(adj, n).size();
    return rec;
  }
  auto cliques = detail::maximal_cliques(adj, n);
  rec.maximal_clique_count = cliques.size();
  auto ordering = detail::consecutive_clique_ordering(cliques, n);
  rec.order_search_nodes = ordering.nodes;
  if (!ordering.found) return rec;

  rec.is_interval = true;
  IntervalRealization real;
  real.intervals.assign(static_cast<std::size_t>(n), {0, 0});
  std::vector<int> lo(static_cast<std::size_t>(n), -1), hi(static_cast<std::size_t>(n), -1);
  for (int pos = 0; pos < static_cast<int>(ordering.order.size()); ++pos) {
    std::uint64_t m = cliques[ordering.order[pos]];
    while (m) {
      int v = std::countr_zero(m) + 1;
      m &= m - 1;
      if (lo[v - 1] < 0) lo[v - 1] = pos;
      hi[v - 1] = pos;
    }
  }
  for (int v = 1; v <= n; ++v) real.intervals[v - 1] = {lo[v - 1], hi[v - 1]};
  rec.realization = std::move(real);
  return rec;
}

bool is_chordal(const Graph& g) {
  return detail::is_chordal_masks(g.adjacency().data(), g.vertex_count());
}

Graph intersect_graphs(const std::vector<Graph>& gs, int n_if_empty) {
  if (gs.empty()) {
    if (n_if_empty < 0)
      throw std::invalid_argument("empty intersection needs an explicit vertex count");
    return complete_graph(n_if_empty);
  }
  int n = gs.front().vertex_count();
  for (const auto& g : gs)
    if (g.vertex_count() != n) throw std::invalid_argument("graphs on different vertex sets");
  Graph out(n);
  for (int u = 1; u <= n; ++u) {
    for (int w = u + 1; w <= n; ++w) {
      bool all = true;
      for (const auto& g : gs)
        if (!g.has_edge(u, w)) {
          all = false;
          break;
        }
      if (all) out.add_edge(u, w);
    }
  }
  return out;
}

IntervalSupergraphStream::IntervalSupergraphStream(Graph g)
    : base_(std::move(g)), non_edges_(flatbox::non_edges(base_)) {}

std::optional<IntervalSupergraphStream::Item> IntervalSupergraphStream::next(SearchBudget* budget) {
  int n = base_.vertex_count();
  int k = static_cast<int>(non_edges_.size());
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(std::max(n, 1)));
  while (!done_) {
    // materialize current combination
    std::uint64_t added = 0;
    for (int idx : picks_) added |= std::uint64_t{1} << idx;
    ++enumerated_;
    if (budget && !budget->tick()) return std::nullopt;

    std::copy(base_.adjacency().begin(), base_.adjacency().end(), adj.begin());
    for (int idx : picks_) {
      auto [u, w] = non_edges_[idx];
      adj[u - 1] |= vbit(w);
      adj[w - 1] |= vbit(u);
    }

    bool good = detail::is_interval_masks(adj.data(), n);
    Item item;
    if (good) {
      Graph h = base_;
      for (int idx : picks_) h.add_edge(non_edges_[idx].first, non_edges_[idx].second);
      item.graph = std::move(h);
      item.added_mask = added;
    }

    // advance combination: lexicographic within fixed size, then grow
    int i = take_ - 1;
    while (i >= 0 && picks_[i] == k - (take_ - i)) --i;
    if (i < 0) {
      ++take_;
      if (take_ > k) {
        done_ = true;
      } else {
        picks_.resize(static_cast<std::size_t>(take_));
        for (int j = 0; j < take_; ++j) picks_[j] = j;
      }
    } else {
      ++picks_[i];
      for (int j = i + 1; j < take_; ++j) picks_[j] = picks_[j - 1] + 1;
    }

    if (good) return item;
  }
  return std::nullopt;
}

std::vector<Graph> interval_supergraphs(const Graph& g, std::size_t budget) {
  IntervalSupergraphStream stream(g);
  std::vector<Graph> out;
  while (out.size() < budget) {
    auto item = stream.next();
    if (!item) break;
    out.push_back(std::move(item->graph));
  }
  return out;
}

}  // namespace flatbox
