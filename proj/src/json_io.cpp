#include "flatbox/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "flatbox/version.hpp"

namespace flatbox {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

long long get_int(const ordered_json& j, const std::string& where) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) fail(where, "expected an integer");
  return j.get<long long>();
}

Rational rational_from_json(const ordered_json& j, const std::string& where) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or a \"p/q\" string");
}

ordered_json rational_to_json(const Rational& r) {
  if (r.is_integer()) return r.num;
  return r.str();
}

ordered_json stats_to_json(const CandidateStats& s) {
  return ordered_json{{"candidates_enumerated", s.enumerated},
                      {"path_rule_cuts", s.path_rule_cuts},
                      {"candidates_admitted", s.admitted},
                      {"candidates_kept", s.kept}};
}

ordered_json points_to_json(const std::vector<std::vector<Rational>>& points) {
  ordered_json out = ordered_json::array();
  for (const auto& pt : points) {
    ordered_json coords = ordered_json::array();
    for (const Rational& c : pt) coords.push_back(rational_to_json(c));
    out.push_back(std::move(coords));
  }
  return out;
}

ordered_json edge_list_to_json(const std::vector<std::pair<int, int>>& edges) {
  ordered_json out = ordered_json::array();
  for (auto [u, w] : edges) out.push_back(ordered_json::array({u, w}));
  return out;
}

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::Exhausted:
      return "exhausted";
    default:
      return "budget-exceeded";
  }
}

}  // namespace

ordered_json graph_to_json(const Graph& g) {
  ordered_json j;
  j["n"] = g.vertex_count();
  j["edges"] = edge_list_to_json(g.edges());
  return j;
}

Graph graph_from_json(const ordered_json& j) {
  if (!j.is_object()) fail("graph", "expected an object");
  if (!j.contains("n")) fail("graph", "missing key \"n\"");
  if (!j.contains("edges")) fail("graph", "missing key \"edges\"");
  long long n = get_int(j.at("n"), "graph.n");
  if (n < 0 || n > Graph::kMaxVertices) fail("graph.n", "out of range 0..64");
  Graph g(static_cast<int>(n));
  const ordered_json& edges = j.at("edges");
  if (!edges.is_array()) fail("graph.edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "graph.edges[" + std::to_string(i) + "]";
    const ordered_json& e = edges[i];
    if (!e.is_array() || e.size() != 2) fail(where, "expected a pair [u, w]");
    long long u = get_int(e[0], where);
    long long w = get_int(e[1], where);
    if (u < 1 || u > n || w < 1 || w > n) fail(where, "vertex out of range");
    try {
      g.add_edge(static_cast<int>(u), static_cast<int>(w));
    } catch (const std::invalid_argument& e2) {
      fail(where, e2.what());
    }
  }
  return g;
}

ordered_json interval_realization_to_json(const IntervalRealization& r) {
  ordered_json intervals = ordered_json::object();
  for (std::size_t i = 0; i < r.intervals.size(); ++i)
    intervals[std::to_string(i + 1)] = ordered_json::array({r.intervals[i][0], r.intervals[i][1]});
  return ordered_json{{"intervals", intervals}};
}

IntervalRealization interval_realization_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("intervals"))
    fail("realization", "expected an object with key \"intervals\"");
  const ordered_json& m = j.at("intervals");
  if (!m.is_object()) fail("realization.intervals", "expected an object");
  IntervalRealization r;
  r.intervals.resize(m.size());
  std::vector<bool> seen(m.size(), false);
  for (const auto& [key, value] : m.items()) {
    const std::string where = "realization.intervals[\"" + key + "\"]";
    long long v = 0;
    try {
      std::size_t used = 0;
      v = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      fail(where, "key is not a vertex label");
    }
    if (v < 1 || v > static_cast<long long>(m.size()))
      fail(where, "vertex labels must be exactly 1..n");
    if (!value.is_array() || value.size() != 2) fail(where, "expected [lo, hi]");
    long long lo = get_int(value[0], where);
    long long hi = get_int(value[1], where);
    if (lo > hi) fail(where, "lo > hi");
    r.intervals[v - 1] = {lo, hi};
    seen[v - 1] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) fail("realization.intervals", "missing vertex " + std::to_string(i + 1));
  return r;
}

ordered_json box_family_to_json(const BoxFamily& f) {
  ordered_json boxes = ordered_json::array();
  for (const AxisBox& b : f.boxes) {
    ordered_json axes = ordered_json::array();
    for (const auto& [lo, hi] : b.axes)
      axes.push_back(ordered_json::array({rational_to_json(lo), rational_to_json(hi)}));
    boxes.push_back(std::move(axes));
  }
  return ordered_json{{"d", f.d}, {"boxes", boxes}};
}

BoxFamily box_family_from_json(const ordered_json& j) {
  if (!j.is_object()) fail("boxes", "expected an object");
  if (!j.contains("d")) fail("boxes", "missing key \"d\"");
  if (!j.contains("boxes")) fail("boxes", "missing key \"boxes\"");
  long long d = get_int(j.at("d"), "boxes.d");
  if (d < 0 || d > 1024) fail("boxes.d", "out of range");
  BoxFamily f;
  f.d = static_cast<int>(d);
  const ordered_json& boxes = j.at("boxes");
  if (!boxes.is_array()) fail("boxes.boxes", "expected an array");
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const std::string where = "boxes.boxes[" + std::to_string(i) + "]";
    const ordered_json& axes = boxes[i];
    if (!axes.is_array() || axes.size() != static_cast<std::size_t>(d))
      fail(where, "expected " + std::to_string(d) + " axis intervals");
    AxisBox box;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      const std::string awhere = where + "[" + std::to_string(a) + "]";
      const ordered_json& iv = axes[a];
      if (!iv.is_array() || iv.size() != 2) fail(awhere, "expected [lo, hi]");
      Rational lo = rational_from_json(iv[0], awhere);
      Rational hi = rational_from_json(iv[1], awhere);
      if (hi < lo) fail(awhere, "lo > hi");
      box.axes.push_back({lo, hi});
    }
    f.boxes.push_back(std::move(box));
  }
  try {
    f.validate();
  } catch (const std::invalid_argument& e) {
    fail("boxes", e.what());
  }
  return f;
}

ordered_json slim_decomposition_to_json(const SlimDecomposition& dec) {
  ordered_json fs = ordered_json::array();
  for (const Graph& f : dec.factors) fs.push_back(graph_to_json(f));
  ordered_json jv = ordered_json::object();
  for (std::size_t v = 0; v < dec.jv.size(); ++v)
    jv[std::to_string(v + 1)] = dec.jv[v];
  return ordered_json{{"p", dec.p}, {"d", dec.d}, {"Fs", fs}, {"Jv", jv}};
}

SlimDecomposition slim_decomposition_from_json(const ordered_json& j) {
  if (!j.is_object()) fail("decomposition", "expected an object");
  for (const char* key : {"p", "d", "Fs", "Jv"})
    if (!j.contains(key)) fail("decomposition", std::string("missing key \"") + key + "\"");
  SlimDecomposition dec;
  dec.p = static_cast<int>(get_int(j.at("p"), "decomposition.p"));
  dec.d = static_cast<int>(get_int(j.at("d"), "decomposition.d"));
  const ordered_json& fs = j.at("Fs");
  if (!fs.is_array()) fail("decomposition.Fs", "expected an array of graphs");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    try {
      dec.factors.push_back(graph_from_json(fs[i]));
    } catch (const std::invalid_argument& e) {
      fail("decomposition.Fs[" + std::to_string(i) + "]", e.what());
    }
  }
  const ordered_json& jv = j.at("Jv");
  if (!jv.is_object()) fail("decomposition.Jv", "expected an object");
  dec.jv.resize(jv.size());
  std::vector<bool> seen(jv.size(), false);
  for (const auto& [key, value] : jv.items()) {
    const std::string where = "decomposition.Jv[\"" + key + "\"]";
    long long v = 0;
    try {
      std::size_t used = 0;
      v = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      fail(where, "key is not a vertex label");
    }
    if (v < 1 || v > static_cast<long long>(jv.size()))
      fail(where, "vertex labels must be exactly 1..n");
    if (!value.is_array()) fail(where, "expected an array of factor indices");
    std::vector<int> axes;
    for (const ordered_json& item : value)
      axes.push_back(static_cast<int>(get_int(item, where)));
    std::sort(axes.begin(), axes.end());
    dec.jv[v - 1] = std::move(axes);
    seen[v - 1] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) fail("decomposition.Jv", "missing vertex " + std::to_string(i + 1));
  return dec;
}

ordered_json forbidden_certificate_to_json(const ForbiddenCertificate& cert) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["s"] = cert.s;
  j["p"] = cert.p;
  j["scope"] = cert.scope_d ? ordered_json(*cert.scope_d) : ordered_json("all");
  j["verdict"] = cert.verdict;
  ordered_json digest = stats_to_json(cert.stats);
  digest["order"] = cert.order_version;
  digest["search_nodes"] = cert.search_nodes;
  j["digest"] = digest;
  if (cert.counterexample) j["counterexample"] = slim_decomposition_to_json(*cert.counterexample);
  j["notes"] = cert.notes;
  return j;
}

ordered_json slim_check_to_json(const SlimCheck& c) {
  ordered_json j;
  j["ok"] = c.ok;
  if (c.violation) {
    ordered_json v;
    v["rule"] = c.violation->rule;
    v["detail"] = c.violation->detail;
    if (c.violation->vertex) v["vertex"] = c.violation->vertex;
    if (c.violation->factor) v["factor"] = c.violation->factor;
    j["violation"] = v;
  }
  return j;
}

ordered_json recognition_to_json(const IntervalRecognition& r) {
  ordered_json j;
  j["is_interval"] = r.is_interval;
  if (r.realization) j["realization"] = interval_realization_to_json(*r.realization);
  if (r.induced_c4) j["induced_c4"] = *r.induced_c4;
  if (r.hole) j["hole"] = *r.hole;
  j["maximal_cliques"] = r.maximal_clique_count;
  j["order_search_nodes"] = r.order_search_nodes;
  return j;
}

ordered_json piercing_result_to_json(const PiercingResult& r) {
  ordered_json j;
  j["pierceable"] = r.pierceable;
  if (r.budget_exceeded) j["budget_exceeded"] = true;
  if (r.pierceable) j["points"] = points_to_json(r.points);
  j["search_nodes"] = r.nodes;
  return j;
}

ordered_json piercing_number_to_json(const PiercingNumber& r) {
  ordered_json j;
  j["piercing"] = r.value;
  if (r.budget_exceeded) j["budget_exceeded"] = true;
  j["points"] = points_to_json(r.points);
  return j;
}

ordered_json boxicity_to_json(const BoxicityResult& r) {
  ordered_json j;
  j["status"] = status_name(r.status);
  if (r.status == SearchStatus::Found) {
    j["boxicity"] = r.value;
    ordered_json fs = ordered_json::array();
    for (const Graph& f : r.factors) fs.push_back(graph_to_json(f));
    j["factors"] = fs;
  }
  j["search_nodes"] = r.search_nodes;
  return j;
}

ordered_json p_boxicity_to_json(const PBoxicityResult& r) {
  ordered_json j;
  switch (r.status) {
    case PBoxicityResult::Status::Finite:
      j["status"] = "finite";
      j["p_boxicity"] = r.value;
      break;
    case PBoxicityResult::Status::GreaterThanDMax:
      j["status"] = "greater-than-d-max";
      break;
    case PBoxicityResult::Status::Infeasible:
      j["status"] = "infeasible-for-all-d";
      break;
    default:
      j["status"] = "budget-exceeded";
      break;
  }
  if (r.k_min >= 0) j["k_min"] = r.k_min;
  if (r.witness) j["witness"] = slim_decomposition_to_json(*r.witness);
  j["search_nodes"] = r.search_nodes;
  return j;
}

ordered_json realizable_to_json(const RealizableResult& r) {
  ordered_json j;
  switch (r.status) {
    case SearchStatus::Found:
      j["realizable"] = true;
      break;
    case SearchStatus::Exhausted:
      j["realizable"] = false;
      break;
    default:
      j["status"] = "budget-exceeded";
      break;
  }
  if (r.k_min >= 0) j["k_min"] = r.k_min;
  if (r.witness) j["witness"] = slim_decomposition_to_json(*r.witness);
  j["digest"] = stats_to_json(r.stats);
  j["search_nodes"] = r.search_nodes;
  return j;
}

ordered_json helly_report_to_json(const HellyGallaiReport& r) {
  ordered_json j;
  j["h"] = r.h;
  j["subfamilies_checked"] = r.subfamilies_checked;
  j["premise"] = r.premise;
  j["family_2pierceable"] = r.family_2pierceable;
  j["implication_holds"] = r.implication_holds;
  if (!r.failing_subfamilies.empty()) j["failing_subfamilies"] = r.failing_subfamilies;
  return j;
}

ordered_json upper_bound_report_to_json(const UpperBoundReport& r) {
  ordered_json j;
  j["m"] = r.m;
  j["scope"] = r.scope_d ? ordered_json(*r.scope_d) : ordered_json("all");
  ordered_json items = ordered_json::array();
  for (const UpperBoundItem& it : r.items)
    items.push_back(ordered_json{{"s", it.s}, {"qualifies", it.qualifies}, {"verdict", it.verdict}});
  j["items"] = items;
  j["all_confirmed"] = r.all_confirmed;
  return j;
}

ordered_json partition_report_to_json(const PartitionReport& r) {
  ordered_json j;
  j["s"] = r.s;
  j["p"] = r.p;
  j["d"] = r.d;
  j["anchor"] = r.anchor;
  j["anchor_axes"] = r.anchor_axes;
  j["other_axes"] = r.other_axes;
  j["outer_vertices"] = r.outer_vertices;
  j["outer_edges"] = edge_list_to_json(r.outer_edges);
  ordered_json solutions = ordered_json::array();
  for (const PartitionSolution& s : r.solutions)
    solutions.push_back(ordered_json{
        {"j1", s.j1}, {"j2", s.j2}, {"j3", s.j3}, {"equality", s.equality}});
  j["solutions"] = solutions;
  ordered_json partitions = ordered_json::array();
  for (const PartitionAssignment& a : r.partitions) {
    ordered_json blocks = ordered_json::array();
    for (const PartitionBlock& b : a.blocks)
      blocks.push_back(ordered_json{
          {"factor", b.factor}, {"length", b.length}, {"edges", edge_list_to_json(b.edges)}});
    partitions.push_back(ordered_json{
        {"blocks", blocks}, {"J1", a.j1}, {"J2", a.j2}, {"J3", a.j3}});
  }
  j["partitions"] = partitions;
  ordered_json mp = ordered_json::object();
  for (const auto& [factor, holds] : r.missing_property) mp[std::to_string(factor)] = holds;
  j["missing_property"] = mp;
  j["decomposition_fully_valid"] = r.decomposition_fully_valid;
  return j;
}

ordered_json construction_to_json(const NamedConstruction& c) {
  ordered_json j;
  j["name"] = c.name;
  j["description"] = c.description;
  if (c.graph) j["graph"] = graph_to_json(*c.graph);
  if (c.decomposition) j["decomposition"] = slim_decomposition_to_json(*c.decomposition);
  if (c.family) j["family"] = box_family_to_json(*c.family);
  j["expected"] = c.expected;
  return j;
}

ordered_json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << dump_json(j);
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace flatbox
