#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "flatbox/budget.hpp"
#include "flatbox/graph.hpp"
#include "flatbox/rational.hpp"

namespace flatbox {

// Closed axis-parallel box: one interval [lo, hi] per ambient axis, lo <= hi.
// A box is flat when few axes are non-degenerate (dim() counts those).
struct AxisBox {
  std::vector<std::array<Rational, 2>> axes;

  int ambient() const { return static_cast<int>(axes.size()); }
  int dim() const;
  bool contains(const std::vector<Rational>& point) const;
};

struct BoxFamily {
  int d = 0;
  std::vector<AxisBox> boxes;

  void validate() const;  // throws std::invalid_argument
};

bool boxes_intersect(const AxisBox& a, const AxisBox& b);
Graph intersection_graph(const BoxFamily& f);

// 1-based box indices, order preserved.
BoxFamily subfamily(const BoxFamily& f, const std::vector<int>& indices);

struct AxisProjection {
  std::vector<std::array<Rational, 2>> intervals;
  Graph graph;  // intersection graph of the projected intervals
};
AxisProjection project_axis(const BoxFamily& f, int axis);  // axis is 1-based

struct PiercingResult {
  bool pierceable = false;
  bool budget_exceeded = false;
  std::vector<std::vector<Rational>> points;
  std::uint64_t nodes = 0;
};
// Exact: candidate points live on the grid of lower endpoints (any piercing
// point slides down, coordinate-wise, onto that grid without losing boxes).
PiercingResult pierceable(const BoxFamily& f, int n, SearchBudget* budget = nullptr);

struct PiercingNumber {
  int value = 0;
  bool budget_exceeded = false;
  std::vector<std::vector<Rational>> points;
};
PiercingNumber piercing_number(const BoxFamily& f, SearchBudget* budget = nullptr);

bool valid_piercing(const BoxFamily& f, const std::vector<std::vector<Rational>>& points);

}  // namespace flatbox
