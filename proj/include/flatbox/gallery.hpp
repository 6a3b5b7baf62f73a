#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flatbox/boxes.hpp"
#include "flatbox/graph.hpp"
#include "flatbox/slim.hpp"

namespace flatbox {

// Executable fixtures: each construction validates its expected properties
// when built, so the rest of the test suite can lean on them as ground truth.
struct NamedConstruction {
  std::string name;
  std::string description;
  std::optional<Graph> graph;
  std::optional<SlimDecomposition> decomposition;
  std::optional<BoxFamily> family;
  std::vector<std::string> expected;
};

// Complement of the 5-cycle as two interval factors (p=1, d=2).
std::pair<Graph, SlimDecomposition> gallery_c5c_decomposition();
// Complement of the 7-cycle as three interval factors (p=2, d=3).
std::pair<Graph, SlimDecomposition> gallery_c7c_decomposition();

// Box families derived from the decompositions.
BoxFamily gallery_c5c_family();
BoxFamily gallery_c7c_family();

// The 12 edges of the unit cube as degenerate boxes in R^3, plus their
// intersection graph (4-regular on 12 vertices).
std::pair<Graph, BoxFamily> gallery_cube_edges();

// k pairwise-disjoint unit intervals on the line.
BoxFamily gallery_disjoint_intervals(int k);

std::vector<std::string> gallery_names();
// k applies to disjoint-intervals only.
NamedConstruction gallery_get(const std::string& name, int k = 3);
// Throws std::logic_error if any expected property fails.
void validate_construction(const NamedConstruction& c);

}  // namespace flatbox
