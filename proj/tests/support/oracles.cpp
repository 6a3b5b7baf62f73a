#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "flatbox/rational.hpp"

namespace flatbox::testsupport {

namespace {

bool color_rec(const Graph& g, std::vector<int>& color, int v, int k) {
  if (v > g.vertex_count()) return true;
  for (int c = 1; c <= k; ++c) {
    bool ok = true;
    for (int u = 1; u < v && ok; ++u)
      if (g.has_edge(u, v) && color[u - 1] == c) ok = false;
    if (!ok) continue;
    color[v - 1] = c;
    if (color_rec(g, color, v + 1, k)) return true;
  }
  color[v - 1] = 0;
  return false;
}

bool cliques_consecutive(const std::vector<std::uint64_t>& cliques, const std::vector<int>& order,
                         int n) {
  for (int v = 1; v <= n; ++v) {
    int first = -1, last = -1, count = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      if (cliques[order[pos]] & vbit(v)) {
        if (first < 0) first = static_cast<int>(pos);
        last = static_cast<int>(pos);
        ++count;
      }
    }
    if (count == 0) continue;  // isolated vertices sit in their own clique anyway
    if (last - first + 1 != count) return false;
  }
  return true;
}

}  // namespace

int oracle_chromatic(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> color(g.vertex_count(), 0);
    if (color_rec(g, color, 1, k)) return k;
  }
}

std::vector<std::uint64_t> oracle_maximal_cliques(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::uint64_t> out;
  for (std::uint64_t set = 1; set < (std::uint64_t{1} << n); ++set) {
    bool clique = true;
    for (int u = 1; u <= n && clique; ++u) {
      if (!(set & vbit(u))) continue;
      for (int w = u + 1; w <= n && clique; ++w)
        if ((set & vbit(w)) && !g.has_edge(u, w)) clique = false;
    }
    if (!clique) continue;
    bool maximal = true;
    for (int x = 1; x <= n && maximal; ++x) {
      if (set & vbit(x)) continue;
      if ((g.neighbors(x) & set) == set) maximal = false;
    }
    if (maximal) out.push_back(set);
  }
  return out;
}

bool oracle_is_interval(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::uint64_t> cliques = oracle_maximal_cliques(g);
  if (cliques.size() > 9) throw std::logic_error("oracle_is_interval: too many maximal cliques");
  std::vector<int> order(cliques.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  do {
    if (cliques_consecutive(cliques, order, n)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

bool oracle_is_interval_dp(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::uint64_t> cliques = oracle_maximal_cliques(g);
  int c = static_cast<int>(cliques.size());
  if (c == 1) return true;
  if (c > 20) throw std::logic_error("oracle_is_interval_dp: too many maximal cliques");
  // cliques containing each vertex, as a mask over clique indices
  std::vector<std::uint64_t> owner(n, 0);
  for (int i = 0; i < c; ++i)
    for (int v = 1; v <= n; ++v)
      if (cliques[i] & vbit(v)) owner[v - 1] |= std::uint64_t{1} << i;

  // reachable[S][last]: some ordering of S ends at `last` with every
  // finished vertex consecutive and every started-but-unfinished vertex's
  // run ending at the final position
  std::vector<std::uint64_t> reachable(std::uint64_t{1} << c, 0);
  for (int i = 0; i < c; ++i) reachable[std::uint64_t{1} << i] = std::uint64_t{1} << i;
  std::uint64_t full = (std::uint64_t{1} << c) - 1;
  for (std::uint64_t set = 1; set <= full; ++set) {
    if (!reachable[set]) continue;
    for (int last = 0; last < c; ++last) {
      if (!(reachable[set] & (std::uint64_t{1} << last))) continue;
      for (int next = 0; next < c; ++next) {
        if (set & (std::uint64_t{1} << next)) continue;
        std::uint64_t grown = set | (std::uint64_t{1} << next);
        if (reachable[grown] & (std::uint64_t{1} << next)) continue;
        bool ok = true;
        for (int v = 1; v <= n && ok; ++v) {
          bool in_next = (owner[v - 1] >> next) & 1;
          std::uint64_t started = owner[v - 1] & set;
          if (in_next) {
            // a started vertex can continue only if its run ends at `last`
            if (started && !((owner[v - 1] >> last) & 1)) ok = false;
          } else {
            // skipping a vertex is fine only once all its cliques are placed
            if (started && (owner[v - 1] & ~grown)) ok = false;
          }
        }
        if (ok) reachable[grown] |= std::uint64_t{1} << next;
      }
    }
  }
  return reachable[full] != 0;
}

bool oracle_pierceable(const BoxFamily& f, int n) {
  if (f.boxes.empty()) return true;
  // grid of all lower-endpoint combinations, one coordinate set per axis
  std::vector<std::vector<Rational>> per_axis(f.d);
  for (int a = 0; a < f.d; ++a) {
    for (const AxisBox& b : f.boxes) per_axis[a].push_back(b.axes[a][0]);
    std::sort(per_axis[a].begin(), per_axis[a].end());
    per_axis[a].erase(std::unique(per_axis[a].begin(), per_axis[a].end()), per_axis[a].end());
  }
  std::vector<std::vector<Rational>> grid;
  std::vector<Rational> point(f.d, Rational(0));
  auto build = [&](auto&& self, int axis) -> void {
    if (axis == f.d) {
      grid.push_back(point);
      return;
    }
    for (const Rational& c : per_axis[axis]) {
      point[axis] = c;
      self(self, axis + 1);
    }
  };
  build(build, 0);

  std::vector<int> picks;
  auto covered = [&]() {
    for (const AxisBox& b : f.boxes) {
      bool hit = false;
      for (int i : picks)
        if (b.contains(grid[i])) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    return true;
  };
  auto choose = [&](auto&& self, int from, int left) -> bool {
    if (left == 0) return covered();
    for (int i = from; i + left <= static_cast<int>(grid.size()); ++i) {
      picks.push_back(i);
      if (self(self, i + 1, left - 1)) return true;
      picks.pop_back();
    }
    return false;
  };
  int take = std::min<int>(n, static_cast<int>(grid.size()));
  return choose(choose, 0, take);
}

std::vector<Graph> oracle_interval_supergraphs(const Graph& g) {
  auto missing = non_edges(g);
  if (missing.size() > 16) throw std::logic_error("oracle supergraphs: too many non-edges");
  std::vector<Graph> out;
  for (std::uint64_t add = 0; add < (std::uint64_t{1} << missing.size()); ++add) {
    if (add + 1 == (std::uint64_t{1} << missing.size())) continue;  // the complete graph
    Graph f(g.vertex_count());
    for (const auto& [u, w] : g.edges()) f.add_edge(u, w);
    for (std::size_t i = 0; i < missing.size(); ++i)
      if (add & (std::uint64_t{1} << i)) f.add_edge(missing[i].first, missing[i].second);
    if (oracle_is_interval(f)) out.push_back(std::move(f));
  }
  return out;
}

bool oracle_realizable_at_d(const Graph& g, int p, int d,
                            const std::vector<Graph>& supergraphs) {
  if (p < 1 || d < p) return false;
  int n = g.vertex_count();
  auto missing = non_edges(g);

  auto finish = [&](const std::vector<int>& chosen) {
    SlimDecomposition dec;
    dec.p = p;
    dec.d = d;
    for (int idx : chosen) dec.factors.push_back(supergraphs[idx]);
    while (static_cast<int>(dec.factors.size()) < d)
      dec.factors.push_back(complete_graph(n));
    dec.jv.resize(n);
    for (int v = 1; v <= n; ++v) {
      for (int i = 1; i <= d && static_cast<int>(dec.jv[v - 1].size()) < d - p; ++i)
        if (is_simplicial(dec.factors[i - 1], v)) dec.jv[v - 1].push_back(i);
      if (static_cast<int>(dec.jv[v - 1].size()) != d - p) return false;
    }
    if (!check_slim(g, dec).ok)
      throw std::logic_error("oracle witness failed the slim check");
    return true;
  };

  std::vector<int> bad(n, 0);
  std::vector<int> chosen;
  auto rec = [&](auto&& self) -> bool {
    int uncovered = -1;
    for (std::size_t e = 0; e < missing.size() && uncovered < 0; ++e) {
      bool cov = false;
      for (int idx : chosen)
        if (!supergraphs[idx].has_edge(missing[e].first, missing[e].second)) cov = true;
      if (!cov) uncovered = static_cast<int>(e);
    }
    if (uncovered < 0) return finish(chosen);
    if (static_cast<int>(chosen.size()) == d) return false;
    auto [eu, ew] = missing[uncovered];
    for (std::size_t idx = 0; idx < supergraphs.size(); ++idx) {
      if (supergraphs[idx].has_edge(eu, ew)) continue;
      bool ok = true;
      for (int v = 1; v <= n && ok; ++v)
        if (!is_simplicial(supergraphs[idx], v) && bad[v - 1] + 1 > p) ok = false;
      if (!ok) continue;
      for (int v = 1; v <= n; ++v)
        if (!is_simplicial(supergraphs[idx], v)) ++bad[v - 1];
      chosen.push_back(static_cast<int>(idx));
      if (self(self)) return true;
      chosen.pop_back();
      for (int v = 1; v <= n; ++v)
        if (!is_simplicial(supergraphs[idx], v)) --bad[v - 1];
    }
    return false;
  };
  return rec(rec);
}

std::optional<int> oracle_p_boxicity(const Graph& g, int p, int d_max) {
  auto supergraphs = oracle_interval_supergraphs(g);
  for (int d = p; d <= d_max; ++d)
    if (oracle_realizable_at_d(g, p, d, supergraphs)) return d;
  return std::nullopt;
}

}  // namespace flatbox::testsupport
