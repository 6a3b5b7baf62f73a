#include "flatbox/helly.hpp"

#include <stdexcept>

#include "flatbox/gallery.hpp"
#include "flatbox/search.hpp"

namespace flatbox {

int h_value(int m) { return h_bound(m).h; }

HellyBound h_bound(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (m == 1) return {1, 5, "m = 1"};
  if (m == 2) return {2, 7, "m = 2"};
  if (m % 2 == 1) return {m, 3 * m, "3m for odd m"};
  return {m, 3 * m - 1, "3m-1 for even m"};
}

int h_value_full_dim(int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  return d % 2 == 1 ? 3 * d : 3 * d - 1;
}

BoxFamily lower_bound_witness(int m) {
  BoxFamily fam;
  if (m == 1) {
    fam = gallery_c5c_family();
  } else if (m == 2) {
    fam = gallery_c7c_family();
  } else {
    throw std::invalid_argument("no gallery witness for m = " + std::to_string(m));
  }
  int h = h_value(m);
  if (static_cast<int>(fam.boxes.size()) != h)
    throw std::logic_error("witness family has the wrong size");
  auto rep = helly_gallai_check(fam, h - 1);
  if (!rep.premise || rep.family_2pierceable)
    throw std::logic_error("witness family fails validation");
  return fam;
}

HellyGallaiReport helly_gallai_check(const BoxFamily& f, int h, bool record_failures) {
  f.validate();
  if (h < 1) throw std::invalid_argument("h must be positive");
  HellyGallaiReport rep;
  rep.h = h;
  int n = static_cast<int>(f.boxes.size());
  rep.premise = true;
  if (h <= n) {
    // enumerate h-subsets in lexicographic order
    std::vector<int> pick(static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i) pick[i] = i + 1;
    while (true) {
      ++rep.subfamilies_checked;
      if (!pierceable(subfamily(f, pick), 2).pierceable) {
        rep.premise = false;
        if (record_failures)
          rep.failing_subfamilies.push_back(pick);
        else
          break;
      }
      int i = h - 1;
      while (i >= 0 && pick[i] == n - (h - 1 - i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < h; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  rep.family_2pierceable = n == 0 || pierceable(f, 2).pierceable;
  rep.implication_holds = !rep.premise || rep.family_2pierceable;
  return rep;
}

UpperBoundReport upper_bound_check(int m, const std::vector<int>& s_list,
                                   std::optional<int> scope_d, SearchBudget* budget) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  UpperBoundReport rep;
  rep.m = m;
  rep.scope_d = scope_d;
  int h = h_value(m);
  bool all = true;
  for (int s : s_list) {
    UpperBoundItem item;
    item.s = s;
    item.qualifies = s % 2 == 1 && s > h;
    if (!item.qualifies) {
      item.verdict = "not-applicable";
      rep.items.push_back(item);
      continue;
    }
    ForbiddenCertificate cert = verify_forbidden(s, m, scope_d, budget);
    if (cert.verdict == "forbidden")
      item.verdict = "not-realizable";
    else if (cert.verdict == "realizable")
      item.verdict = "realizable";
    else
      item.verdict = "budget-exceeded";
    if (item.verdict != "not-realizable") all = false;
    rep.items.push_back(item);
  }
  rep.all_confirmed = all;
  return rep;
}

}  // namespace flatbox
