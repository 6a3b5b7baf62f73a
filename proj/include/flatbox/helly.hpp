#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatbox/boxes.hpp"
#include "flatbox/budget.hpp"

namespace flatbox {

// Least h such that 2-pierceability of every h-subfamily of m-flat boxes
// forces 2-pierceability of the whole family. The value does not depend on
// the ambient dimension.
int h_value(int m);

// The full-dimensional variant (boxes of dimension d in R^d): 3d for odd d,
// 3d-1 for even d.
int h_value_full_dim(int d);

struct HellyBound {
  int m = 0;
  int h = 0;
  std::string rule;  // which table row applied
};
HellyBound h_bound(int m);

// A family of m-flat boxes of size h_value(m) whose proper subfamilies are
// all 2-pierceable while the family itself is not; validated on return.
BoxFamily lower_bound_witness(int m);  // m in {1, 2}

struct HellyGallaiReport {
  int h = 0;
  std::size_t subfamilies_checked = 0;
  bool premise = false;      // every h-subfamily 2-pierceable (vacuous if none)
  bool family_2pierceable = false;
  bool implication_holds = false;  // premise -> family 2-pierceable
  std::vector<std::vector<int>> failing_subfamilies;  // 1-based indices, flag-gated
};
HellyGallaiReport helly_gallai_check(const BoxFamily& f, int h, bool record_failures = false);

struct UpperBoundItem {
  int s = 0;
  bool qualifies = false;  // odd and above the table value
  std::string verdict;     // "not-realizable" | "realizable" | "budget-exceeded" | "not-applicable"
};
struct UpperBoundReport {
  int m = 0;
  std::optional<int> scope_d;
  std::vector<UpperBoundItem> items;
  bool all_confirmed = false;
};
// Desk-scale upper-bound verification via the odd-cycle reduction: a minimal
// family violating the bound would have an odd-cycle complement intersection
// graph, so nonrealizability of those cycle complements as m-flat boxes is
// what the table rests on.
UpperBoundReport upper_bound_check(int m, const std::vector<int>& s_list,
                                   std::optional<int> scope_d = std::nullopt,
                                   SearchBudget* budget = nullptr);

}  // namespace flatbox
