#include "flatbox/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

#include "flatbox/detail/maskops.hpp"
#include "flatbox/interval.hpp"

namespace flatbox {

namespace {

constexpr const char* kOrderCanonical = "cands-v1";
constexpr const char* kOrderReversed = "cands-v1-reversed";

std::uint64_t low_mask(int k) {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

// True when the covered set, read as cycle-edge indices e_i = (v_i, v_{i+1}),
// forms one cyclic run of length 1..3. Interval supergraphs of a cycle
// complement exclude exactly such sets: two separate runs leave an induced
// 4-cycle and a run of length >= 4 an interval-impossible path complement.
bool single_short_run(std::uint64_t covered, int s) {
  int c = std::popcount(covered);
  if (c < 1 || c > 3) return false;
  std::uint64_t all = low_mask(s);
  // rotate so that bit 0 is unset, then the run must be contiguous;
  // popcount <= 3 < s guarantees a zero bit exists
  int shift = 0;
  while ((covered >> shift) & 1) ++shift;
  std::uint64_t rot = shift == 0 ? covered : ((covered >> shift) | (covered << (s - shift))) & all;
  int lowest = std::countr_zero(rot);
  std::uint64_t run = ((std::uint64_t{1} << c) - 1) << lowest;
  return rot == run;
}

struct EnumChunk {
  std::vector<FactorCandidate> out;
  CandidateStats stats;
};

void enumerate_range(const Graph& g, const std::vector<std::pair<int, int>>& ne, bool cycle_rule,
                     std::uint64_t from, std::uint64_t to, SearchBudget* budget, EnumChunk* chunk) {
  int n = g.vertex_count();
  int s = n;
  std::uint64_t full = low_mask(static_cast<int>(ne.size()));
  // ne lists the cycle edges in lexicographic pair order; the run rule needs
  // cyclic positions, so remap bit i to the position of edge e_i on the cycle
  std::vector<int> cyc_pos(ne.size(), 0);
  if (cycle_rule)
    for (std::size_t i = 0; i < ne.size(); ++i) {
      auto [u, w] = ne[i];
      cyc_pos[i] = (w == u + 1) ? u - 1 : s - 1;
    }
  std::vector<std::uint64_t> adj(g.adjacency().begin(), g.adjacency().end());
  for (std::uint64_t added = from; added < to; ++added) {
    ++chunk->stats.enumerated;
    if (budget && !budget->tick()) return;
    std::uint64_t covered = full & ~added;
    if (covered == 0) continue;  // the complete graph; searches pad with it separately
    if (cycle_rule) {
      std::uint64_t on_cycle = 0;
      std::uint64_t rest = covered;
      while (rest) {
        int idx = std::countr_zero(rest);
        rest &= rest - 1;
        on_cycle |= std::uint64_t{1} << cyc_pos[idx];
      }
      // at s = 4 the whole cycle may go missing: the base graph is a pair of
      // disjoint edges, itself interval
      bool keep = single_short_run(on_cycle, s) || (s == 4 && covered == full);
      if (!keep) {
        ++chunk->stats.path_rule_cuts;
        continue;
      }
    }
    std::copy(g.adjacency().begin(), g.adjacency().end(), adj.begin());
    std::uint64_t rest = added;
    while (rest) {
      int idx = std::countr_zero(rest);
      rest &= rest - 1;
      auto [u, w] = ne[idx];
      adj[u - 1] |= vbit(w);
      adj[w - 1] |= vbit(u);
    }
    if (!detail::is_interval_masks(adj.data(), n)) continue;
    ++chunk->stats.admitted;
    FactorCandidate c;
    c.added_mask = added;
    c.covered_mask = covered;
    c.bad_mask = detail::nonsimplicial_mask(adj.data(), n);
    chunk->out.push_back(c);
  }
}

void dominance_filter(std::vector<FactorCandidate>& cands) {
  // A beats B when it covers at least as much and spoils no extra vertex;
  // any minimal cover using B then works with A. Keep the first of ties.
  std::vector<FactorCandidate> kept;
  for (const auto& c : cands) {
    bool beaten = false;
    for (const auto& k : kept) {
      if ((c.covered_mask & ~k.covered_mask) == 0 && (k.bad_mask & ~c.bad_mask) == 0) {
        beaten = true;
        break;
      }
    }
    if (beaten) continue;
    std::erase_if(kept, [&](const FactorCandidate& k) {
      return (k.covered_mask & ~c.covered_mask) == 0 && (c.bad_mask & ~k.bad_mask) == 0;
    });
    kept.push_back(c);
  }
  cands = std::move(kept);
}

}  // namespace

CandidateSet enumerate_candidates(const Graph& g, bool cycle_rule, bool dominance,
                                  SearchBudget* budget) {
  CandidateSet set;
  set.non_edges = non_edges(g);
  int k = static_cast<int>(set.non_edges.size());
  if (k > 30 && !budget)
    throw std::invalid_argument("too many non-edges for exhaustive candidate enumeration");
  if (cycle_rule && complement(g) != make_cycle(g.vertex_count()))
    throw std::invalid_argument("cycle rule requires the complement of the labeled cycle");

  std::uint64_t total = std::uint64_t{1} << k;
  int threads = budget ? budget->threads() : 1;
  threads = std::max(1, std::min<int>(threads, 64));
  if (total < 4096) threads = 1;

  std::vector<EnumChunk> chunks(static_cast<std::size_t>(threads));
  if (threads == 1) {
    enumerate_range(g, set.non_edges, cycle_rule, 0, total, budget, &chunks[0]);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t per = total / threads + 1;
    for (int t = 0; t < threads; ++t) {
      std::uint64_t from = per * t;
      std::uint64_t to = std::min(total, per * (t + 1));
      pool.emplace_back(enumerate_range, std::cref(g), std::cref(set.non_edges), cycle_rule, from,
                        to, budget, &chunks[t]);
    }
    for (auto& th : pool) th.join();
  }
  for (auto& ch : chunks) {
    set.stats.enumerated += ch.stats.enumerated;
    set.stats.path_rule_cuts += ch.stats.path_rule_cuts;
    set.stats.admitted += ch.stats.admitted;
    set.candidates.insert(set.candidates.end(), ch.out.begin(), ch.out.end());
  }
  if (budget && budget->exceeded()) {
    set.budget_exceeded = true;
    return set;
  }
  if (dominance) dominance_filter(set.candidates);
  set.stats.kept = set.candidates.size();
  return set;
}

Graph candidate_graph(const Graph& g, const std::vector<std::pair<int, int>>& non_edges,
                      std::uint64_t added_mask) {
  Graph h = g;
  std::uint64_t rest = added_mask;
  while (rest) {
    int idx = std::countr_zero(rest);
    rest &= rest - 1;
    h.add_edge(non_edges[idx].first, non_edges[idx].second);
  }
  return h;
}

namespace {

struct CoverSearch {
  const std::vector<FactorCandidate>* cands;
  std::uint64_t full = 0;
  int n = 0;
  int p = 0;
  int max_cover = 1;
  SearchBudget* budget = nullptr;
  bool out_of_budget = false;
  std::uint64_t nodes = 0;
  std::vector<int> chosen;
  std::vector<int> bad_count;

  bool dfs(std::uint64_t covered, int remaining) {
    if (covered == full) return true;
    if (remaining == 0) return false;
    int uncovered = std::popcount(full & ~covered);
    if (uncovered > remaining * max_cover) return false;
    int lowest = std::countr_zero(full & ~covered);
    for (int i = 0; i < static_cast<int>(cands->size()); ++i) {
      const auto& c = (*cands)[i];
      if (!(c.covered_mask >> lowest & 1)) continue;
      ++nodes;
      if (budget && !budget->tick()) {
        out_of_budget = true;
        return false;
      }
      bool feasible = true;
      std::uint64_t bm = c.bad_mask;
      while (bm) {
        int v = std::countr_zero(bm) + 1;
        bm &= bm - 1;
        if (bad_count[v - 1] + 1 > p) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      std::uint64_t bm2 = c.bad_mask;
      while (bm2) {
        int v = std::countr_zero(bm2) + 1;
        bm2 &= bm2 - 1;
        ++bad_count[v - 1];
      }
      chosen.push_back(i);
      if (dfs(covered | c.covered_mask, remaining - 1)) return true;
      chosen.pop_back();
      std::uint64_t bm3 = c.bad_mask;
      while (bm3) {
        int v = std::countr_zero(bm3) + 1;
        bm3 &= bm3 - 1;
        --bad_count[v - 1];
      }
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

KMinResult k_min_cover(const Graph& g, int p, const CandidateSet& set, SearchBudget* budget) {
  if (p < 0) throw std::invalid_argument("p must be nonnegative");
  KMinResult res;
  res.stats = set.stats;
  if (g.is_complete()) {
    res.status = SearchStatus::Found;
    res.k_min = 0;
    return res;
  }
  if (set.budget_exceeded) {
    res.status = SearchStatus::BudgetExceeded;
    return res;
  }
  int ne_count = static_cast<int>(set.non_edges.size());
  CoverSearch search;
  search.cands = &set.candidates;
  search.full = low_mask(ne_count);
  search.n = g.vertex_count();
  search.p = p;
  search.budget = budget;
  for (const auto& c : set.candidates)
    search.max_cover = std::max(search.max_cover, std::popcount(c.covered_mask));
  int k_cap = std::min<int>(ne_count, static_cast<int>(set.candidates.size()));
  for (int k = 1; k <= k_cap; ++k) {
    search.bad_count.assign(static_cast<std::size_t>(search.n), 0);
    search.chosen.clear();
    if (search.dfs(0, k)) {
      res.status = SearchStatus::Found;
      res.k_min = k;
      res.chosen = search.chosen;
      res.search_nodes = search.nodes;
      return res;
    }
    if (search.out_of_budget) {
      res.status = SearchStatus::BudgetExceeded;
      res.search_nodes = search.nodes;
      return res;
    }
  }
  res.status = SearchStatus::Exhausted;
  res.search_nodes = search.nodes;
  return res;
}

namespace {

// Builds the witness decomposition from chosen non-complete factors: pad
// with complete graphs up to d = max(p, k); every vertex is then simplicial
// in enough factors to fill its axis set.
SlimDecomposition witness_from_chosen(const Graph& g, const CandidateSet& set,
                                      const std::vector<int>& chosen, int p) {
  int k = static_cast<int>(chosen.size());
  int d = std::max(p, k);
  SlimDecomposition dec;
  dec.p = p;
  dec.d = d;
  std::vector<std::uint64_t> bad(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    dec.factors.push_back(candidate_graph(g, set.non_edges, set.candidates[chosen[i]].added_mask));
    bad[i] = set.candidates[chosen[i]].bad_mask;
  }
  for (int i = k; i < d; ++i) dec.factors.push_back(complete_graph(g.vertex_count()));
  int n = g.vertex_count();
  dec.jv.resize(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    auto& axes = dec.jv[v - 1];
    for (int i = 1; i <= d && static_cast<int>(axes.size()) < d - p; ++i) {
      bool good = i > k || !((bad[i - 1] >> (v - 1)) & 1);
      if (good) axes.push_back(i);
    }
  }
  return dec;
}

}  // namespace

RealizableResult realizable_some_d(const Graph& g, int p, SearchBudget* budget) {
  if (p < 0) throw std::invalid_argument("p must be nonnegative");
  RealizableResult out;
  CandidateSet set = enumerate_candidates(g, false, true, budget);
  KMinResult k = k_min_cover(g, p, set, budget);
  out.status = k.status;
  out.k_min = k.k_min;
  out.search_nodes = k.search_nodes;
  out.stats = k.stats;
  if (k.status == SearchStatus::Found) out.witness = witness_from_chosen(g, set, k.chosen, p);
  return out;
}

namespace {

struct FixedDSearch {
  const std::vector<FactorCandidate>* cands;  // pad excluded; index cands->size() = pad
  std::uint64_t full = 0;
  int n = 0;
  int p = 0;
  SearchBudget* budget = nullptr;
  bool out_of_budget = false;
  std::uint64_t nodes = 0;
  std::vector<int> chosen;
  std::vector<int> bad_count;
  std::vector<std::uint64_t> suffix_union;
  std::vector<int> suffix_max_cover;

  bool dfs(std::uint64_t covered, int next_pos, int d, int min_idx) {
    if (next_pos == d) return covered == full;
    ++nodes;
    if (budget && !budget->tick()) {
      out_of_budget = true;
      return false;
    }
    if ((covered | suffix_union[min_idx]) != full) return false;
    int remaining = d - next_pos;
    int uncovered = std::popcount(full & ~covered);
    if (uncovered > remaining * std::max(1, suffix_max_cover[min_idx])) return false;
    int m = static_cast<int>(cands->size());
    for (int i = min_idx; i <= m; ++i) {  // i == m is the complete-graph pad
      std::uint64_t cov = i < m ? (*cands)[i].covered_mask : 0;
      std::uint64_t bad = i < m ? (*cands)[i].bad_mask : 0;
      bool feasible = true;
      std::uint64_t bm = bad;
      while (bm) {
        int v = std::countr_zero(bm) + 1;
        bm &= bm - 1;
        if (bad_count[v - 1] + 1 > p) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      std::uint64_t bm2 = bad;
      while (bm2) {
        int v = std::countr_zero(bm2) + 1;
        bm2 &= bm2 - 1;
        ++bad_count[v - 1];
      }
      chosen.push_back(i);
      if (dfs(covered | cov, next_pos + 1, d, i)) return true;
      chosen.pop_back();
      std::uint64_t bm3 = bad;
      while (bm3) {
        int v = std::countr_zero(bm3) + 1;
        bm3 &= bm3 - 1;
        --bad_count[v - 1];
      }
      if (out_of_budget) return false;
    }
    return false;
  }
};

FixedDResult fixed_d_core(const Graph& g, int p, int d, const CandidateSet& set,
                          SearchBudget* budget) {
  FixedDResult res;
  res.stats = set.stats;
  if (set.budget_exceeded) {
    res.status = SearchStatus::BudgetExceeded;
    return res;
  }
  int n = g.vertex_count();
  int m = static_cast<int>(set.candidates.size());
  FixedDSearch search;
  search.cands = &set.candidates;
  search.full = low_mask(static_cast<int>(set.non_edges.size()));
  search.n = n;
  search.p = p;
  search.budget = budget;
  search.bad_count.assign(static_cast<std::size_t>(n), 0);
  search.suffix_union.assign(static_cast<std::size_t>(m) + 2, 0);
  search.suffix_max_cover.assign(static_cast<std::size_t>(m) + 2, 0);
  for (int i = m - 1; i >= 0; --i) {
    search.suffix_union[i] = search.suffix_union[i + 1] | set.candidates[i].covered_mask;
    search.suffix_max_cover[i] =
        std::max(search.suffix_max_cover[i + 1], std::popcount(set.candidates[i].covered_mask));
  }
  if (search.dfs(0, 0, d, 0)) {
    res.status = SearchStatus::Found;
    SlimDecomposition dec;
    dec.p = p;
    dec.d = d;
    std::vector<std::uint64_t> bad(search.chosen.size());
    for (std::size_t i = 0; i < search.chosen.size(); ++i) {
      int idx = search.chosen[i];
      if (idx < m) {
        dec.factors.push_back(candidate_graph(g, set.non_edges, set.candidates[idx].added_mask));
        bad[i] = set.candidates[idx].bad_mask;
      } else {
        dec.factors.push_back(complete_graph(n));
        bad[i] = 0;
      }
    }
    dec.jv.resize(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
      auto& axes = dec.jv[v - 1];
      for (int i = 1; i <= d && static_cast<int>(axes.size()) < d - p; ++i)
        if (!((bad[i - 1] >> (v - 1)) & 1)) axes.push_back(i);
    }
  } else if (search.out_of_budget) {
    res.status = SearchStatus::BudgetExceeded;
  }
  res.search_nodes = search.nodes;
  return res;
}

}  // namespace

FixedDResult slim_search_fixed_d(const Graph& g, int p, int d, SearchBudget* budget) {
  if (p < 0) throw std::invalid_argument("p must be nonnegative");
  if (d < p) throw std::invalid_argument("ambient dimension below p");
  CandidateSet set = enumerate_candidates(g, false, false, budget);
  return fixed_d_core(g, p, d, set, budget);
}

BoxicityResult boxicity(const Graph& g, SearchBudget* budget) {
  BoxicityResult res;
  if (g.is_complete()) return res;  // 0 by convention
  CandidateSet set = enumerate_candidates(g, false, true, budget);
  if (set.budget_exceeded) {
    res.status = SearchStatus::BudgetExceeded;
    return res;
  }
  // For pure covering, badness is irrelevant; thin the set further.
  std::vector<FactorCandidate> cover = set.candidates;
  {
    std::vector<FactorCandidate> kept;
    for (const auto& c : cover) {
      bool beaten = false;
      for (const auto& k : kept)
        if ((c.covered_mask & ~k.covered_mask) == 0) {
          beaten = true;
          break;
        }
      if (beaten) continue;
      std::erase_if(kept,
                    [&](const FactorCandidate& k) { return (k.covered_mask & ~c.covered_mask) == 0; });
      kept.push_back(c);
    }
    cover = std::move(kept);
  }
  CoverSearch search;
  search.cands = &cover;
  search.full = low_mask(static_cast<int>(set.non_edges.size()));
  search.n = g.vertex_count();
  search.p = 1 << 20;  // badness unconstrained for pure covering
  search.budget = budget;
  for (const auto& c : cover) search.max_cover = std::max(search.max_cover, std::popcount(c.covered_mask));
  int cap = std::min<int>(static_cast<int>(set.non_edges.size()), static_cast<int>(cover.size()));
  for (int k = 1; k <= cap; ++k) {
    search.bad_count.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    search.chosen.clear();
    if (search.dfs(0, k)) {
      res.value = k;
      for (int i : search.chosen)
        res.factors.push_back(candidate_graph(g, set.non_edges, cover[i].added_mask));
      res.search_nodes = search.nodes;
      return res;
    }
    if (search.out_of_budget) {
      res.status = SearchStatus::BudgetExceeded;
      res.search_nodes = search.nodes;
      return res;
    }
  }
  // unreachable: one factor per non-edge always covers
  throw std::logic_error("cover search exhausted without a cover");
}

PBoxicityResult p_boxicity(const Graph& g, int p, int d_max, SearchBudget* budget) {
  if (p < 1) throw std::invalid_argument("p must be positive");
  PBoxicityResult res;
  CandidateSet raw = enumerate_candidates(g, false, false, budget);
  CandidateSet thinned = raw;
  dominance_filter(thinned.candidates);
  thinned.stats.kept = thinned.candidates.size();
  KMinResult k = k_min_cover(g, p, thinned, budget);
  res.search_nodes = k.search_nodes;
  if (k.status == SearchStatus::BudgetExceeded) {
    res.status = PBoxicityResult::Status::BudgetExceeded;
    return res;
  }
  res.k_min = k.k_min;
  if (k.status == SearchStatus::Exhausted) {
    res.status = PBoxicityResult::Status::Infeasible;
    return res;
  }
  int value = std::max(p, k.k_min);
  if (value > d_max) {
    res.status = PBoxicityResult::Status::GreaterThanDMax;
    return res;
  }
  res.status = PBoxicityResult::Status::Finite;
  res.value = value;
  if (k.k_min > 0) res.witness = witness_from_chosen(g, thinned, k.chosen, p);
  // Cross-check against the direct fixed-d search: must succeed at value and
  // fail just below it.
  FixedDResult at = fixed_d_core(g, p, value, raw, budget);
  if (at.status == SearchStatus::BudgetExceeded) {
    res.status = PBoxicityResult::Status::BudgetExceeded;
    return res;
  }
  if (at.status != SearchStatus::Found)
    throw std::logic_error("cross-check failed: no decomposition at the computed dimension");
  if (!res.witness) res.witness = at.witness;
  if (value - 1 >= p) {
    FixedDResult below = fixed_d_core(g, p, value - 1, raw, budget);
    if (below.status == SearchStatus::BudgetExceeded) {
      res.status = PBoxicityResult::Status::BudgetExceeded;
      return res;
    }
    if (below.status == SearchStatus::Found)
      throw std::logic_error("cross-check failed: decomposition below the computed dimension");
  }
  return res;
}

ForbiddenCertificate verify_forbidden(int s, int p, std::optional<int> scope_d,
                                      SearchBudget* budget, CandidateOrder order) {
  if (s < 5) throw std::invalid_argument("cycle length below 5");
  if (p < 1) throw std::invalid_argument("p must be positive");
  if (scope_d && *scope_d < p) throw std::invalid_argument("scope dimension below p");
  ForbiddenCertificate cert;
  cert.s = s;
  cert.p = p;
  cert.scope_d = scope_d;
  cert.order_version = order == CandidateOrder::Canonical ? kOrderCanonical : kOrderReversed;

  Graph g = complement(make_cycle(s));
  CandidateSet set = enumerate_candidates(g, true, false, budget);
  if (order == CandidateOrder::Reversed)
    std::reverse(set.candidates.begin(), set.candidates.end());
  cert.stats = set.stats;
  if (set.budget_exceeded) {
    cert.verdict = "budget-exceeded";
    return cert;
  }

  if (scope_d) {
    FixedDResult r = fixed_d_core(g, p, *scope_d, set, budget);
    cert.search_nodes = r.search_nodes;
    if (r.status == SearchStatus::BudgetExceeded) {
      cert.verdict = "budget-exceeded";
    } else if (r.status == SearchStatus::Found) {
      cert.verdict = "realizable";
      cert.counterexample = r.witness;
    } else {
      cert.verdict = "forbidden";
    }
  } else {
    KMinResult k = k_min_cover(g, p, set, budget);
    cert.search_nodes = k.search_nodes;
    if (k.status == SearchStatus::BudgetExceeded) {
      cert.verdict = "budget-exceeded";
    } else if (k.status == SearchStatus::Found) {
      cert.verdict = "realizable";
      cert.counterexample = witness_from_chosen(g, set, k.chosen, p);
    } else {
      cert.verdict = "forbidden";
    }
  }
  if (p == 1)
    cert.notes.push_back(
        "the search covers every ambient dimension d >= 1 uniformly; at d = 1 the verdict "
        "already follows from interval recognition alone");
  return cert;
}

}  // namespace flatbox
