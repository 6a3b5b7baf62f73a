#include "flatbox/slim.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "flatbox/interval.hpp"

namespace flatbox {

namespace {

SlimCheck fail(std::string rule, std::string detail, int vertex = 0, int factor = 0) {
  SlimCheck c;
  c.ok = false;
  c.violation = SlimViolation{std::move(rule), std::move(detail), vertex, factor};
  return c;
}

std::string pair_str(int u, int w) {
  return "(" + std::to_string(u) + "," + std::to_string(w) + ")";
}

}  // namespace

SlimCheck check_slim(const Graph& g, const SlimDecomposition& dec) {
  int n = g.vertex_count();
  if (dec.p < 0) return fail("p-range", "p must be nonnegative");
  if (dec.d < dec.p)
    return fail("p-range", "p = " + std::to_string(dec.p) + " exceeds d = " + std::to_string(dec.d));
  if (static_cast<int>(dec.factors.size()) != dec.d)
    return fail("factor-count", "expected " + std::to_string(dec.d) + " factors, got " +
                                    std::to_string(dec.factors.size()));
  if (static_cast<int>(dec.jv.size()) != n)
    return fail("jv-count", "expected axis sets for " + std::to_string(n) + " vertices");

  for (int i = 1; i <= dec.d; ++i) {
    const Graph& f = dec.factors[i - 1];
    if (f.vertex_count() != n)
      return fail("factor-order", "factor has " + std::to_string(f.vertex_count()) +
                                      " vertices, expected " + std::to_string(n),
                  0, i);
    for (const auto& [u, w] : g.edges())
      if (!f.has_edge(u, w))
        return fail("factor-missing-edge", "factor drops edge " + pair_str(u, w), 0, i);
    if (!recognize_interval(f).is_interval)
      return fail("factor-not-interval", "factor is not an interval graph", 0, i);
  }

  for (int u = 1; u <= n; ++u)
    for (int w = u + 1; w <= n; ++w) {
      if (g.has_edge(u, w)) continue;
      bool everywhere = true;
      for (const Graph& f : dec.factors)
        if (!f.has_edge(u, w)) {
          everywhere = false;
          break;
        }
      if (everywhere)
        return fail("intersection-mismatch",
                    "non-edge " + pair_str(u, w) + " survives in every factor");
    }

  int want = dec.d - dec.p;
  for (int v = 1; v <= n; ++v) {
    const auto& axes = dec.jv[v - 1];
    if (static_cast<int>(axes.size()) != want)
      return fail("jv-size", "vertex " + std::to_string(v) + " lists " +
                                 std::to_string(axes.size()) + " axes, expected " +
                                 std::to_string(want),
                  v);
    for (std::size_t t = 0; t < axes.size(); ++t) {
      if (axes[t] < 1 || axes[t] > dec.d)
        return fail("jv-range", "vertex " + std::to_string(v) + " lists axis " +
                                    std::to_string(axes[t]),
                    v);
      if (t > 0 && axes[t] <= axes[t - 1])
        return fail("jv-range", "axis set of vertex " + std::to_string(v) +
                                    " is not strictly increasing",
                    v);
    }
    for (int i : axes)
      if (!is_simplicial(dec.factors[i - 1], v))
        return fail("not-simplicial", "vertex " + std::to_string(v) +
                                          " is not simplicial in factor " + std::to_string(i),
                    v, i);
  }
  return {};
}

SlimDecomposition realization_to_decomposition(const BoxFamily& f, int p) {
  f.validate();
  if (p < 0) throw std::invalid_argument("p must be nonnegative");
  if (p > f.d) throw std::invalid_argument("p exceeds the ambient dimension");
  int n = static_cast<int>(f.boxes.size());
  for (int v = 1; v <= n; ++v)
    if (f.boxes[v - 1].dim() > p)
      throw std::invalid_argument("box " + std::to_string(v) + " has dimension " +
                                  std::to_string(f.boxes[v - 1].dim()) + " > p");

  SlimDecomposition dec;
  dec.p = p;
  dec.d = f.d;
  for (int i = 1; i <= f.d; ++i) dec.factors.push_back(project_axis(f, i).graph);
  dec.jv.resize(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    // a box of dim <= p is degenerate on at least d-p axes; take the lowest
    for (int i = 1; i <= f.d && static_cast<int>(dec.jv[v - 1].size()) < f.d - p; ++i) {
      const auto& ax = f.boxes[v - 1].axes[i - 1];
      if (!(ax[0] < ax[1])) dec.jv[v - 1].push_back(i);
    }
  }
  return dec;
}

BoxFamily decomposition_to_realization(const Graph& g, const SlimDecomposition& dec) {
  auto check = check_slim(g, dec);
  if (!check.ok)
    throw std::invalid_argument("invalid decomposition: " + check.violation->rule + ": " +
                                check.violation->detail);
  int n = g.vertex_count();
  BoxFamily fam;
  fam.d = dec.d;
  fam.boxes.assign(static_cast<std::size_t>(n), AxisBox{});
  for (auto& b : fam.boxes) b.axes.assign(static_cast<std::size_t>(dec.d), {Rational(0), Rational(0)});

  for (int i = 1; i <= dec.d; ++i) {
    const Graph& f = dec.factors[i - 1];
    auto rec = recognize_interval(f);
    // check_slim already verified intervality
    std::vector<std::array<long long, 2>> iv = rec.realization->intervals;
    // Shrink each vertex with i in J_v to a point. N[v] is a clique in f, so
    // the current intervals of N[v] share a point (1-D Helly); the max of
    // their left endpoints is one. Shrinking v to it keeps axis i's
    // intersection graph exactly f, so later shrinks see the same cliques.
    for (int v = 1; v <= n; ++v) {
      const auto& axes = dec.jv[v - 1];
      if (!std::binary_search(axes.begin(), axes.end(), i)) continue;
      long long point = iv[v - 1][0];
      std::uint64_t nb = f.neighbors(v);
      while (nb) {
        int u = std::countr_zero(nb) + 1;
        nb &= nb - 1;
        point = std::max(point, iv[u - 1][0]);
      }
      iv[v - 1] = {point, point};
    }
    for (int v = 1; v <= n; ++v)
      fam.boxes[v - 1].axes[i - 1] = {Rational(iv[v - 1][0]), Rational(iv[v - 1][1])};
  }
  return fam;
}

}  // namespace flatbox
