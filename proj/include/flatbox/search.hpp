#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flatbox/budget.hpp"
#include "flatbox/graph.hpp"
#include "flatbox/slim.hpp"

namespace flatbox {

// An interval supergraph of the base graph, reduced to the three masks the
// searches need. added_mask/covered_mask index into non_edges(base); a
// covered non-edge is one the factor excludes. bad_mask marks vertices that
// are not simplicial in the factor.
struct FactorCandidate {
  std::uint64_t added_mask = 0;
  std::uint64_t covered_mask = 0;
  std::uint64_t bad_mask = 0;
};

struct CandidateStats {
  std::uint64_t enumerated = 0;     // subsets of non-edges examined
  std::uint64_t path_rule_cuts = 0; // cut by the missing-path rule before recognition
  std::uint64_t admitted = 0;       // interval supergraphs found
  std::uint64_t kept = 0;           // after dedup/dominance
};

struct CandidateSet {
  std::vector<std::pair<int, int>> non_edges;
  std::vector<FactorCandidate> candidates;  // canonical order
  CandidateStats stats;
  bool budget_exceeded = false;
};

// Enumerates every non-complete interval supergraph of g as a candidate, in
// canonical order (ascending added_mask as an integer). With cycle_rule set
// (g must be the complement of the labeled cycle), subsets whose covered set
// is not a single missing path of length 1..3 on the cycle are cut without
// recognition; interval recognition of C_s plus chords forces exactly that
// shape. With dominance set, candidates that another candidate beats on
// both coverage and badness are dropped (complete for minimal covers).
CandidateSet enumerate_candidates(const Graph& g, bool cycle_rule, bool dominance,
                                  SearchBudget* budget = nullptr);

// Rebuilds the factor graph of a candidate.
Graph candidate_graph(const Graph& g, const std::vector<std::pair<int, int>>& non_edges,
                      std::uint64_t added_mask);

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

// Smallest set of non-complete interval supergraphs covering every non-edge
// of g with every vertex non-simplicial in at most p of them. Realizability
// of g by p-flat boxes in some ambient dimension is equivalent to such a set
// existing, with Box_p(g) = max(p, k_min); complete graphs give k_min = 0.
struct KMinResult {
  SearchStatus status = SearchStatus::Exhausted;
  int k_min = -1;                    // set when Found (0 for complete g)
  std::vector<int> chosen;           // candidate indices into the set
  std::uint64_t search_nodes = 0;
  CandidateStats stats;
};
KMinResult k_min_cover(const Graph& g, int p, const CandidateSet& set,
                       SearchBudget* budget = nullptr);

struct RealizableResult {
  SearchStatus status = SearchStatus::Exhausted;  // Found = realizable
  int k_min = -1;
  std::optional<SlimDecomposition> witness;
  std::uint64_t search_nodes = 0;
  CandidateStats stats;
};
// Decides whether any ambient dimension admits a slim decomposition.
RealizableResult realizable_some_d(const Graph& g, int p, SearchBudget* budget = nullptr);

// Exhaustive search for a slim decomposition with exactly d factors (the
// complete graph allowed as padding), multisets in non-decreasing candidate
// order. Independent of the k_min route; used as its cross-check oracle.
struct FixedDResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<SlimDecomposition> witness;
  std::uint64_t search_nodes = 0;
  CandidateStats stats;
};
FixedDResult slim_search_fixed_d(const Graph& g, int p, int d, SearchBudget* budget = nullptr);

struct BoxicityResult {
  SearchStatus status = SearchStatus::Found;
  int value = 0;
  std::vector<Graph> factors;  // witness; empty for complete graphs
  std::uint64_t search_nodes = 0;
};
// Minimum number of interval supergraphs intersecting to g; complete graphs
// return 0 by convention.
BoxicityResult boxicity(const Graph& g, SearchBudget* budget = nullptr);

struct PBoxicityResult {
  enum class Status { Finite, GreaterThanDMax, Infeasible, BudgetExceeded };
  Status status = Status::Infeasible;
  int value = -1;  // set when Finite
  int k_min = -1;  // set unless BudgetExceeded
  std::optional<SlimDecomposition> witness;
  std::uint64_t search_nodes = 0;
};
// Minimum ambient dimension d >= p admitting a slim decomposition, via the
// k_min cover; when the value is within d_max it is cross-checked against
// the direct fixed-d search at d = value and d = value-1.
PBoxicityResult p_boxicity(const Graph& g, int p, int d_max, SearchBudget* budget = nullptr);

enum class CandidateOrder { Canonical, Reversed };

struct ForbiddenCertificate {
  int s = 0;
  int p = 0;
  std::optional<int> scope_d;  // nullopt = all ambient dimensions
  std::string verdict;         // "forbidden" | "realizable" | "budget-exceeded"
  std::string order_version;
  CandidateStats stats;
  std::uint64_t search_nodes = 0;
  std::optional<SlimDecomposition> counterexample;  // when realizable
  std::vector<std::string> notes;
};
// Exhaustively decides whether the complement of the s-cycle is realizable
// by p-flat boxes (in every d, or in the given d).
ForbiddenCertificate verify_forbidden(int s, int p, std::optional<int> scope_d,
                                      SearchBudget* budget = nullptr,
                                      CandidateOrder order = CandidateOrder::Canonical);

// Diagnostic bookkeeping for a would-be decomposition of a cycle complement
// around an anchor vertex: partitions of the outer path into missing
// subpaths of lengths 1..3 represented by distinct factors outside the
// anchor's axis set, plus the arithmetic solutions of the length equation.
struct PartitionSolution {
  int j1 = 0, j2 = 0, j3 = 0;
  bool equality = false;  // block count equals p
};
struct PartitionBlock {
  int factor = 0;           // representing factor index
  int length = 0;           // 1..3
  std::vector<std::pair<int, int>> edges;
};
struct PartitionAssignment {
  std::vector<PartitionBlock> blocks;
  std::vector<int> j1, j2, j3;  // factors representing blocks of that length
};
struct PartitionReport {
  int s = 0, p = 0, d = 0, anchor = 0;
  std::vector<int> anchor_axes;               // J_{v_k}
  std::vector<int> other_axes;                // J
  std::vector<int> outer_vertices;
  std::vector<std::pair<int, int>> outer_edges;
  std::vector<PartitionSolution> solutions;
  std::vector<PartitionAssignment> partitions;
  std::map<int, bool> missing_property;       // per factor in J
  bool decomposition_fully_valid = false;
};
PartitionReport analyze_missing_partition(const Graph& g, const SlimDecomposition& dec,
                                          int anchor);

}  // namespace flatbox
