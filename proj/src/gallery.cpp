#include "flatbox/gallery.hpp"

#include <stdexcept>
#include <string>

namespace flatbox {

namespace {

// The n index subsets of size n-1, 1-based.
std::vector<std::vector<int>> leave_one_out(int n) {
  std::vector<std::vector<int>> out;
  for (int drop = 1; drop <= n; ++drop) {
    std::vector<int> keep;
    for (int i = 1; i <= n; ++i)
      if (i != drop) keep.push_back(i);
    out.push_back(std::move(keep));
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("gallery construction failed validation: " + what);
}

}  // namespace

std::pair<Graph, SlimDecomposition> gallery_c5c_decomposition() {
  Graph g = complement(make_cycle(5));
  SlimDecomposition dec;
  dec.p = 1;
  dec.d = 2;
  dec.factors = {
      complete_minus(5, {{3, 4}, {4, 5}, {5, 1}}),
      complete_minus(5, {{1, 2}, {2, 3}}),
  };
  dec.jv = {{2}, {2}, {2}, {1}, {1}};
  return {g, dec};
}

std::pair<Graph, SlimDecomposition> gallery_c7c_decomposition() {
  Graph g = complement(make_cycle(7));
  SlimDecomposition dec;
  dec.p = 2;
  dec.d = 3;
  dec.factors = {
      complete_minus(7, {{1, 2}, {2, 3}}),
      complete_minus(7, {{3, 4}, {4, 5}, {5, 6}}),
      complete_minus(7, {{6, 7}, {7, 1}}),
  };
  dec.jv = {{1}, {1}, {1}, {2}, {2}, {3}, {3}};
  return {g, dec};
}

BoxFamily gallery_c5c_family() {
  auto [g, dec] = gallery_c5c_decomposition();
  return decomposition_to_realization(g, dec);
}

BoxFamily gallery_c7c_family() {
  auto [g, dec] = gallery_c7c_decomposition();
  return decomposition_to_realization(g, dec);
}

std::pair<Graph, BoxFamily> gallery_cube_edges() {
  BoxFamily f;
  f.d = 3;
  // One box per cube edge, grouped by edge direction; the two fixed
  // coordinates run lexicographically inside each group.
  for (int dir = 0; dir < 3; ++dir) {
    for (int a = 0; a <= 1; ++a) {
      for (int b = 0; b <= 1; ++b) {
        AxisBox box;
        box.axes.resize(3);
        int fixed[2];
        int idx = 0;
        for (int axis = 0; axis < 3; ++axis)
          if (axis != dir) fixed[idx++] = axis;
        box.axes[dir] = {Rational(0), Rational(1)};
        box.axes[fixed[0]] = {Rational(a), Rational(a)};
        box.axes[fixed[1]] = {Rational(b), Rational(b)};
        f.boxes.push_back(std::move(box));
      }
    }
  }
  return {intersection_graph(f), f};
}

BoxFamily gallery_disjoint_intervals(int k) {
  if (k < 1) throw std::invalid_argument("disjoint-intervals: k must be >= 1");
  if (k > 64) throw std::invalid_argument("disjoint-intervals: k must be <= 64");
  BoxFamily f;
  f.d = 1;
  for (int i = 0; i < k; ++i) {
    AxisBox box;
    box.axes.push_back({Rational(2 * i), Rational(2 * i + 1)});
    f.boxes.push_back(std::move(box));
  }
  return f;
}

std::vector<std::string> gallery_names() {
  return {"c5c-decomposition", "c7c-decomposition", "cube-edges", "disjoint-intervals"};
}

NamedConstruction gallery_get(const std::string& name, int k) {
  NamedConstruction c;
  c.name = name;
  if (name == "c5c-decomposition") {
    auto [g, dec] = gallery_c5c_decomposition();
    c.description = "complement of the 5-cycle as two interval factors (p=1, d=2)";
    c.graph = g;
    c.decomposition = dec;
    c.family = gallery_c5c_family();
    c.expected = {
        "decomposition passes the slim check",
        "derived boxes have dimension <= 1 and intersection graph C5 complement",
        "every 4-box subfamily is 2-pierceable; the full family is not",
        "piercing number is 3",
    };
  } else if (name == "c7c-decomposition") {
    auto [g, dec] = gallery_c7c_decomposition();
    c.description = "complement of the 7-cycle as three interval factors (p=2, d=3)";
    c.graph = g;
    c.decomposition = dec;
    c.family = gallery_c7c_family();
    c.expected = {
        "decomposition passes the slim check",
        "derived boxes have dimension <= 2 and intersection graph C7 complement",
        "every 6-box subfamily is 2-pierceable; the full family is not",
        "piercing number is 3",
    };
  } else if (name == "cube-edges") {
    auto [g, f] = gallery_cube_edges();
    c.description = "the 12 edges of the unit cube as 1-dimensional boxes in R^3";
    c.graph = g;
    c.family = f;
    c.expected = {
        "12 boxes, each of dimension exactly 1",
        "intersection graph is 4-regular on 12 vertices",
        "axis projections witness a slim decomposition with p=1, d=3",
    };
  } else if (name == "disjoint-intervals") {
    c.description = "k pairwise-disjoint unit intervals on the line";
    c.family = gallery_disjoint_intervals(k);
    c.graph = intersection_graph(*c.family);
    c.expected = {
        "intersection graph has no edges",
        "piercing number equals the number of intervals",
    };
  } else {
    throw std::invalid_argument("unknown gallery construction: " + name);
  }
  validate_construction(c);
  return c;
}

void validate_construction(const NamedConstruction& c) {
  if (c.name == "c5c-decomposition" || c.name == "c7c-decomposition") {
    const int s = c.name == "c5c-decomposition" ? 5 : 7;
    const int max_dim = c.name == "c5c-decomposition" ? 1 : 2;
    require(c.graph && *c.graph == complement(make_cycle(s)), "graph is the cycle complement");
    require(c.decomposition.has_value(), "decomposition present");
    require(check_slim(*c.graph, *c.decomposition).ok, "slim check");
    require(c.family.has_value(), "family present");
    c.family->validate();
    require(c.family->d == c.decomposition->d, "family ambient dimension");
    for (const AxisBox& b : c.family->boxes)
      require(b.dim() <= max_dim, "box dimension bound");
    require(intersection_graph(*c.family) == *c.graph, "family intersection graph");
    for (const auto& keep : leave_one_out(s))
      require(pierceable(subfamily(*c.family, keep), 2).pierceable,
              "leave-one-out subfamily 2-pierceable");
    require(!pierceable(*c.family, 2).pierceable, "full family not 2-pierceable");
    require(piercing_number(*c.family).value == 3, "piercing number 3");
  } else if (c.name == "cube-edges") {
    require(c.family.has_value() && c.graph.has_value(), "family and graph present");
    c.family->validate();
    require(c.family->d == 3 && static_cast<int>(c.family->boxes.size()) == 12,
            "12 boxes in R^3");
    for (const AxisBox& b : c.family->boxes)
      require(b.dim() == 1, "box dimension exactly 1");
    require(intersection_graph(*c.family) == *c.graph, "family intersection graph");
    for (int v = 1; v <= 12; ++v)
      require(c.graph->degree(v) == 4, "4-regular");
    SlimDecomposition dec = realization_to_decomposition(*c.family, 1);
    require(check_slim(*c.graph, dec).ok, "axis projections form a slim decomposition");
  } else if (c.name == "disjoint-intervals") {
    require(c.family.has_value() && c.graph.has_value(), "family and graph present");
    c.family->validate();
    require(c.graph->edge_count() == 0, "no intersections");
    require(piercing_number(*c.family).value == static_cast<int>(c.family->boxes.size()),
            "piercing number equals family size");
  } else {
    throw std::invalid_argument("unknown gallery construction: " + c.name);
  }
}

}  // namespace flatbox
