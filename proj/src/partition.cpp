#include <algorithm>
#include <stdexcept>
#include <string>

#include "flatbox/interval.hpp"
#include "flatbox/search.hpp"

namespace flatbox {

namespace {

[[noreturn]] void bad(const std::string& why) {
  throw std::invalid_argument("partition analyzer: " + why);
}

}  // namespace

// The analyzer dissects a would-be decomposition of a cycle complement, so
// it demands structural validity only (shapes, interval supergraph factors,
// the anchor simplicial on its axes); the full slim check usually fails for
// the interesting inputs and is reported as a diagnostic instead.
PartitionReport analyze_missing_partition(const Graph& g, const SlimDecomposition& dec,
                                          int anchor) {
  int s = g.vertex_count();
  if (s < 5) bad("cycle length below 5");
  if (complement(g) != make_cycle(s)) bad("graph is not the complement of the labeled cycle");
  if (anchor < 1 || anchor > s) bad("anchor out of range");
  if (dec.p < 0 || dec.d < dec.p) bad("invalid p/d");
  if (static_cast<int>(dec.factors.size()) != dec.d) bad("factor count differs from d");
  if (static_cast<int>(dec.jv.size()) != s) bad("axis sets missing for some vertices");

  for (int i = 1; i <= dec.d; ++i) {
    const Graph& f = dec.factors[i - 1];
    if (f.vertex_count() != s) bad("factor " + std::to_string(i) + " has the wrong vertex count");
    for (const auto& [u, w] : g.edges())
      if (!f.has_edge(u, w)) bad("factor " + std::to_string(i) + " is not a supergraph");
    if (!recognize_interval(f).is_interval)
      bad("factor " + std::to_string(i) + " is not an interval graph");
  }

  PartitionReport rep;
  rep.s = s;
  rep.p = dec.p;
  rep.d = dec.d;
  rep.anchor = anchor;
  rep.anchor_axes = dec.jv[anchor - 1];
  if (static_cast<int>(rep.anchor_axes.size()) != dec.d - dec.p)
    bad("anchor axis set does not have d-p entries");
  for (std::size_t t = 0; t < rep.anchor_axes.size(); ++t) {
    int i = rep.anchor_axes[t];
    if (i < 1 || i > dec.d) bad("anchor axis out of range");
    if (t > 0 && i <= rep.anchor_axes[t - 1]) bad("anchor axes not strictly increasing");
    if (!is_simplicial(dec.factors[i - 1], anchor))
      bad("anchor is not simplicial in factor " + std::to_string(i));
  }
  for (int i = 1; i <= dec.d; ++i)
    if (!std::binary_search(rep.anchor_axes.begin(), rep.anchor_axes.end(), i))
      rep.other_axes.push_back(i);

  auto outer = outer_path(s, anchor);
  rep.outer_vertices = outer.labels;
  int edge_total = s - 4;
  for (int t = 0; t < edge_total; ++t) {
    int u = outer.labels[t], w = outer.labels[t + 1];
    rep.outer_edges.emplace_back(u, w);
  }

  // arithmetic solutions: j1 + 2*j2 + 3*j3 = s-4 with at most p blocks
  for (int j3 = 0; 3 * j3 <= edge_total; ++j3)
    for (int j2 = 0; 3 * j3 + 2 * j2 <= edge_total; ++j2) {
      int j1 = edge_total - 3 * j3 - 2 * j2;
      if (j1 + j2 + j3 > dec.p) continue;
      rep.solutions.push_back({j1, j2, j3, j1 + j2 + j3 == dec.p});
    }
  std::sort(rep.solutions.begin(), rep.solutions.end(),
            [](const PartitionSolution& a, const PartitionSolution& b) {
              if (a.j1 != b.j1) return a.j1 < b.j1;
              return a.j2 < b.j2;
            });

  // which outer edges each candidate factor misses
  std::vector<std::uint64_t> missing(rep.other_axes.size(), 0);
  for (std::size_t fi = 0; fi < rep.other_axes.size(); ++fi) {
    const Graph& f = dec.factors[rep.other_axes[fi] - 1];
    for (int t = 0; t < edge_total; ++t)
      if (!f.has_edge(rep.outer_edges[t].first, rep.outer_edges[t].second))
        missing[fi] |= std::uint64_t{1} << t;
  }

  // every partition of the outer path into blocks of 1..3 consecutive
  // missing edges, each represented by a distinct factor outside the
  // anchor's axes
  std::vector<std::pair<int, int>> blocks;  // (start, length), factor index into other_axes
  std::vector<int> reps;
  std::vector<char> used(rep.other_axes.size(), 0);
  auto emit = [&]() {
    PartitionAssignment pa;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      PartitionBlock pb;
      pb.factor = rep.other_axes[reps[b]];
      pb.length = blocks[b].second;
      for (int t = blocks[b].first; t < blocks[b].first + blocks[b].second; ++t)
        pb.edges.push_back(rep.outer_edges[t]);
      if (pb.length == 1) pa.j1.push_back(pb.factor);
      if (pb.length == 2) pa.j2.push_back(pb.factor);
      if (pb.length == 3) pa.j3.push_back(pb.factor);
      pa.blocks.push_back(std::move(pb));
    }
    std::sort(pa.j1.begin(), pa.j1.end());
    std::sort(pa.j2.begin(), pa.j2.end());
    std::sort(pa.j3.begin(), pa.j3.end());
    rep.partitions.push_back(std::move(pa));
  };
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == edge_total) {
      emit();
      return;
    }
    for (int len = 1; len <= 3 && pos + len <= edge_total; ++len) {
      std::uint64_t block = ((std::uint64_t{1} << len) - 1) << pos;
      for (std::size_t fi = 0; fi < rep.other_axes.size(); ++fi) {
        if (used[fi] || (block & ~missing[fi]) != 0) continue;
        used[fi] = 1;
        blocks.emplace_back(pos, len);
        reps.push_back(static_cast<int>(fi));
        self(self, pos + len);
        reps.pop_back();
        blocks.pop_back();
        used[fi] = 0;
      }
    }
  };
  rec(rec, 0);

  // missing property: factor j has a missing outer edge present in every
  // other candidate factor
  for (std::size_t fi = 0; fi < rep.other_axes.size(); ++fi) {
    std::uint64_t elsewhere_missing = 0;
    for (std::size_t fj = 0; fj < rep.other_axes.size(); ++fj)
      if (fj != fi) elsewhere_missing |= missing[fj];
    rep.missing_property[rep.other_axes[fi]] = (missing[fi] & ~elsewhere_missing) != 0;
  }

  rep.decomposition_fully_valid = check_slim(g, dec).ok;
  return rep;
}

}  // namespace flatbox
