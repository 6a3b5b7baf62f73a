#include "flatbox/boxes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace flatbox {

int AxisBox::dim() const {
  int d = 0;
  for (const auto& [lo, hi] : axes)
    if (lo < hi) ++d;
  return d;
}

bool AxisBox::contains(const std::vector<Rational>& point) const {
  if (point.size() != axes.size()) return false;
  for (std::size_t i = 0; i < axes.size(); ++i)
    if (point[i] < axes[i][0] || axes[i][1] < point[i]) return false;
  return true;
}

void BoxFamily::validate() const {
  if (d < 0) throw std::invalid_argument("negative ambient dimension");
  if (boxes.size() > 64) throw std::invalid_argument("box family larger than 64");
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (boxes[i].ambient() != d)
      throw std::invalid_argument("box " + std::to_string(i + 1) + " has wrong ambient dimension");
    for (const auto& [lo, hi] : boxes[i].axes)
      if (hi < lo)
        throw std::invalid_argument("box " + std::to_string(i + 1) + " has an empty axis interval");
  }
}

bool boxes_intersect(const AxisBox& a, const AxisBox& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
  for (std::size_t i = 0; i < a.axes.size(); ++i) {
    if (a.axes[i][1] < b.axes[i][0] || b.axes[i][1] < a.axes[i][0]) return false;
  }
  return true;
}

Graph intersection_graph(const BoxFamily& f) {
  f.validate();
  int n = static_cast<int>(f.boxes.size());
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int w = u + 1; w <= n; ++w)
      if (boxes_intersect(f.boxes[u - 1], f.boxes[w - 1])) g.add_edge(u, w);
  return g;
}

BoxFamily subfamily(const BoxFamily& f, const std::vector<int>& indices) {
  BoxFamily out;
  out.d = f.d;
  for (int i : indices) {
    if (i < 1 || i > static_cast<int>(f.boxes.size()))
      throw std::invalid_argument("subfamily index out of range");
    out.boxes.push_back(f.boxes[i - 1]);
  }
  return out;
}

AxisProjection project_axis(const BoxFamily& f, int axis) {
  f.validate();
  if (axis < 1 || axis > f.d) throw std::invalid_argument("axis out of range");
  AxisProjection out;
  int n = static_cast<int>(f.boxes.size());
  Graph g(n);
  for (const auto& b : f.boxes) out.intervals.push_back(b.axes[axis - 1]);
  for (int u = 1; u <= n; ++u)
    for (int w = u + 1; w <= n; ++w) {
      const auto& a = out.intervals[u - 1];
      const auto& b = out.intervals[w - 1];
      if (!(a[1] < b[0]) && !(b[1] < a[0])) g.add_edge(u, w);
    }
  out.graph = std::move(g);
  return out;
}

namespace {

struct Candidate {
  std::vector<Rational> point;
  std::uint64_t covers = 0;
};

// Candidate grid: per axis, the distinct lower endpoints. Then keep only
// candidates whose coverage mask is maximal (dominated points are useless).
std::vector<Candidate> candidate_points(const BoxFamily& f) {
  std::vector<std::vector<Rational>> grid(static_cast<std::size_t>(f.d));
  for (int a = 0; a < f.d; ++a) {
    for (const auto& b : f.boxes) grid[a].push_back(b.axes[a][0]);
    std::sort(grid[a].begin(), grid[a].end());
    grid[a].erase(std::unique(grid[a].begin(), grid[a].end()), grid[a].end());
  }
  std::vector<Candidate> cands;
  std::vector<std::size_t> pick(static_cast<std::size_t>(f.d), 0);
  while (true) {
    Candidate c;
    c.point.reserve(static_cast<std::size_t>(f.d));
    for (int a = 0; a < f.d; ++a) c.point.push_back(grid[a][pick[a]]);
    for (std::size_t i = 0; i < f.boxes.size(); ++i)
      if (f.boxes[i].contains(c.point)) c.covers |= std::uint64_t{1} << i;
    if (c.covers) cands.push_back(std::move(c));
    int a = f.d - 1;
    while (a >= 0 && pick[a] + 1 == grid[a].size()) pick[a--] = 0;
    if (a < 0) break;
    ++pick[a];
  }
  // drop strictly dominated coverage masks, keep first representative per mask
  std::vector<Candidate> kept;
  for (auto& c : cands) {
    bool dominated = false;
    for (const auto& k : kept)
      if ((c.covers & ~k.covers) == 0) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    std::erase_if(kept, [&](const Candidate& k) { return (k.covers & ~c.covers) == 0; });
    kept.push_back(std::move(c));
  }
  return kept;
}

bool cover_dfs(const std::vector<Candidate>& cands, std::uint64_t all, std::uint64_t covered,
               int remaining, std::vector<int>& chosen, SearchBudget* budget, bool* out_of_budget) {
  if (covered == all) return true;
  if (remaining == 0) return false;
  if (budget && !budget->tick()) {
    *out_of_budget = true;
    return false;
  }
  int lowest = std::countr_zero(all & ~covered);
  for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
    if (!(cands[i].covers >> lowest & 1)) continue;
    chosen.push_back(i);
    if (cover_dfs(cands, all, covered | cands[i].covers, remaining - 1, chosen, budget, out_of_budget))
      return true;
    chosen.pop_back();
    if (*out_of_budget) return false;
  }
  return false;
}

}  // namespace

PiercingResult pierceable(const BoxFamily& f, int n, SearchBudget* budget) {
  f.validate();
  if (n <= 0) throw std::invalid_argument("piercing size must be positive");
  PiercingResult res;
  if (f.boxes.empty()) {
    res.pierceable = true;
    return res;
  }
  if (f.d == 0) {
    // all boxes are the unique point of R^0
    res.pierceable = true;
    res.points.push_back({});
    return res;
  }
  auto cands = candidate_points(f);
  std::uint64_t all = f.boxes.size() == 64 ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << f.boxes.size()) - 1;
  std::vector<int> chosen;
  bool out_of_budget = false;
  bool ok = cover_dfs(cands, all, 0, n, chosen, budget, &out_of_budget);
  res.budget_exceeded = out_of_budget;
  res.nodes = budget ? budget->nodes() : 0;
  if (ok) {
    res.pierceable = true;
    for (int i : chosen) res.points.push_back(cands[i].point);
  }
  return res;
}

PiercingNumber piercing_number(const BoxFamily& f, SearchBudget*) {
  f.validate();
  PiercingNumber out;
  if (f.boxes.empty()) return out;
  // The piercing number is the chromatic number of the complement of the
  // intersection graph: a color class is a pairwise-intersecting set of
  // boxes, which shares a point (boxes have the Helly property), and that
  // common point pierces the whole class.
  Coloring col = chromatic_number(complement(intersection_graph(f)));
  out.value = col.chi;
  for (int c = 1; c <= col.chi; ++c) {
    std::vector<Rational> point;
    for (int a = 0; a < f.d; ++a) {
      Rational lo = Rational(0);
      bool first = true;
      for (std::size_t i = 0; i < f.boxes.size(); ++i) {
        if (col.color[i] != c) continue;
        const Rational& l = f.boxes[i].axes[a][0];
        if (first || lo < l) lo = l;
        first = false;
      }
      point.push_back(lo);
    }
    out.points.push_back(std::move(point));
  }
  return out;
}

bool valid_piercing(const BoxFamily& f, const std::vector<std::vector<Rational>>& points) {
  for (const auto& b : f.boxes) {
    bool hit = false;
    for (const auto& p : points)
      if (b.contains(p)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace flatbox
