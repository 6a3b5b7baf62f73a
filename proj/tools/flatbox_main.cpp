#include <cstdio>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "flatbox/json_io.hpp"
#include "flatbox/version.hpp"

namespace {

using flatbox::ordered_json;

// Exit codes: 0 computed and the verdict holds, 1 computed and the verdict
// fails, 2 usage or input error, 3 search budget exceeded.
constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Options {
  std::string in;
  std::string graph;
  std::string out;
  std::string format = "json";
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0.0;
  unsigned threads = 0;
};

void add_common(CLI::App* cmd, Options& opt, bool wants_in = true) {
  if (wants_in) cmd->add_option("--in", opt.in, "input JSON file");
  cmd->add_option("--out", opt.out, "also write the result document to this file");
  cmd->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
  cmd->add_option("--budget-nodes", opt.budget_nodes, "search node budget (0 = unlimited)");
  cmd->add_option("--budget-seconds", opt.budget_seconds, "wall-clock budget (0 = unlimited)");
  cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json"}));
}

flatbox::SearchBudget make_budget(const Options& opt) {
  unsigned threads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  return flatbox::SearchBudget(opt.budget_nodes, opt.budget_seconds, threads);
}

int emit(const Options& opt, const ordered_json& doc, int code) {
  std::string text = flatbox::dump_json(doc);
  std::fputs(text.c_str(), stdout);
  if (!opt.out.empty()) flatbox::write_json(opt.out, doc);
  return code;
}

flatbox::Graph load_graph(const std::string& path, const char* what) {
  if (path.empty())
    throw std::invalid_argument(std::string("missing required ") + what + " file");
  return flatbox::graph_from_json(flatbox::load_json(path));
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    try {
      std::size_t used = 0;
      std::string tok = text.substr(pos, comma - pos);
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": expected a comma-separated integer list");
    }
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

std::optional<int> parse_scope(const std::string& text) {
  if (text == "all") return std::nullopt;
  try {
    std::size_t used = 0;
    int d = std::stoi(text, &used);
    if (used != text.size() || d < 1) throw std::invalid_argument("");
    return d;
  } catch (const std::exception&) {
    throw std::invalid_argument("--scope: expected \"all\" or a dimension >= 1");
  }
}

int status_exit(flatbox::SearchStatus s, int found_code, int exhausted_code) {
  if (s == flatbox::SearchStatus::Found) return found_code;
  if (s == flatbox::SearchStatus::Exhausted) return exhausted_code;
  return kBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact search tools for flat-box intersection representations"};
  app.set_version_flag("--version", std::string(flatbox::kToolName) + " " + flatbox::kVersion);
  app.require_subcommand(1);

  Options opt;
  int exit_code = kOk;
  ordered_json doc;

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "graph utilities");
  graph_cmd->require_subcommand(1);
  auto* g_complement = graph_cmd->add_subcommand("complement", "complement of a graph");
  add_common(g_complement, opt);
  g_complement->callback([&] {
    doc = flatbox::graph_to_json(flatbox::complement(load_graph(opt.in, "--in graph")));
  });
  auto* g_chromatic = graph_cmd->add_subcommand("chromatic", "exact chromatic number");
  add_common(g_chromatic, opt);
  g_chromatic->callback([&] {
    auto col = flatbox::chromatic_number(load_graph(opt.in, "--in graph"));
    ordered_json coloring = ordered_json::object();
    for (std::size_t v = 0; v < col.color.size(); ++v)
      coloring[std::to_string(v + 1)] = col.color[v];
    doc = ordered_json{{"chi", col.chi}, {"coloring", coloring}};
  });
  std::string vertices_arg;
  auto* g_induced = graph_cmd->add_subcommand("induced", "induced subgraph, relabeled 1..k");
  add_common(g_induced, opt);
  g_induced->add_option("--vertices", vertices_arg, "vertices to keep, e.g. 1,3,4")->required();
  g_induced->callback([&] {
    auto sub = flatbox::induced_subgraph(load_graph(opt.in, "--in graph"),
                                         parse_int_list(vertices_arg, "--vertices"));
    doc = flatbox::graph_to_json(sub.graph);
    doc["labels"] = sub.labels;
  });

  // interval
  auto* interval_cmd = app.add_subcommand("interval", "interval graph recognition");
  interval_cmd->require_subcommand(1);
  auto* i_check = interval_cmd->add_subcommand("check", "recognize an interval graph");
  add_common(i_check, opt);
  i_check->callback([&] {
    auto rec = flatbox::recognize_interval(load_graph(opt.in, "--in graph"));
    doc = flatbox::recognition_to_json(rec);
    exit_code = rec.is_interval ? kOk : kFalse;
  });
  auto* i_realize = interval_cmd->add_subcommand("realize", "emit an interval realization");
  add_common(i_realize, opt);
  i_realize->callback([&] {
    auto rec = flatbox::recognize_interval(load_graph(opt.in, "--in graph"));
    if (rec.is_interval) {
      doc = flatbox::interval_realization_to_json(*rec.realization);
      exit_code = kOk;
    } else {
      doc = flatbox::recognition_to_json(rec);
      exit_code = kFalse;
    }
  });

  // boxes
  auto* boxes_cmd = app.add_subcommand("boxes", "axis-parallel box families");
  boxes_cmd->require_subcommand(1);
  auto* b_graph = boxes_cmd->add_subcommand("graph", "intersection graph of a family");
  add_common(b_graph, opt);
  b_graph->callback([&] {
    doc = flatbox::graph_to_json(
        flatbox::intersection_graph(flatbox::box_family_from_json(flatbox::load_json(opt.in))));
  });
  int pierce_n = 0;
  auto* b_pierce = boxes_cmd->add_subcommand("pierce", "decide n-pierceability");
  add_common(b_pierce, opt);
  b_pierce->add_option("--n", pierce_n, "number of piercing points")->required();
  b_pierce->callback([&] {
    auto budget = make_budget(opt);
    auto res = flatbox::pierceable(flatbox::box_family_from_json(flatbox::load_json(opt.in)),
                                   pierce_n, &budget);
    doc = flatbox::piercing_result_to_json(res);
    exit_code = res.budget_exceeded ? kBudget : (res.pierceable ? kOk : kFalse);
  });
  auto* b_number = boxes_cmd->add_subcommand("piercing-number", "exact piercing number");
  add_common(b_number, opt);
  b_number->callback([&] {
    auto budget = make_budget(opt);
    auto res = flatbox::piercing_number(
        flatbox::box_family_from_json(flatbox::load_json(opt.in)), &budget);
    doc = flatbox::piercing_number_to_json(res);
    exit_code = res.budget_exceeded ? kBudget : kOk;
  });

  // slim
  auto* slim_cmd = app.add_subcommand("slim", "slim decompositions");
  slim_cmd->require_subcommand(1);
  auto* s_check = slim_cmd->add_subcommand("check", "validate a decomposition against a graph");
  add_common(s_check, opt);
  s_check->add_option("--graph", opt.graph, "graph JSON file")->required();
  s_check->callback([&] {
    auto dec = flatbox::slim_decomposition_from_json(flatbox::load_json(opt.in));
    auto res = flatbox::check_slim(load_graph(opt.graph, "--graph graph"), dec);
    doc = flatbox::slim_check_to_json(res);
    exit_code = res.ok ? kOk : kFalse;
  });
  auto* s_to = slim_cmd->add_subcommand("to-boxes", "realize a decomposition as flat boxes");
  add_common(s_to, opt);
  s_to->add_option("--graph", opt.graph, "graph JSON file")->required();
  s_to->callback([&] {
    auto dec = flatbox::slim_decomposition_from_json(flatbox::load_json(opt.in));
    doc = flatbox::box_family_to_json(
        flatbox::decomposition_to_realization(load_graph(opt.graph, "--graph graph"), dec));
  });
  int from_p = 1;
  auto* s_from = slim_cmd->add_subcommand("from-boxes", "read a decomposition off a family");
  add_common(s_from, opt);
  s_from->add_option("--p", from_p, "flatness bound p")->required();
  s_from->callback([&] {
    auto fam = flatbox::box_family_from_json(flatbox::load_json(opt.in));
    doc = flatbox::slim_decomposition_to_json(flatbox::realization_to_decomposition(fam, from_p));
  });

  // boxicity / pboxicity
  auto* box_cmd = app.add_subcommand("boxicity", "exact boxicity");
  add_common(box_cmd, opt);
  box_cmd->callback([&] {
    auto budget = make_budget(opt);
    auto res = flatbox::boxicity(load_graph(opt.in, "--in graph"), &budget);
    doc = flatbox::boxicity_to_json(res);
    exit_code = status_exit(res.status, kOk, kOk);
  });
  int pbox_p = 1;
  int pbox_dmax = 8;
  auto* pbox_cmd = app.add_subcommand("pboxicity", "minimum ambient dimension for p-flat boxes");
  add_common(pbox_cmd, opt);
  pbox_cmd->add_option("--p", pbox_p, "flatness bound p")->required();
  pbox_cmd->add_option("--d-max", pbox_dmax, "cross-check ceiling");
  pbox_cmd->callback([&] {
    auto budget = make_budget(opt);
    auto res = flatbox::p_boxicity(load_graph(opt.in, "--in graph"), pbox_p, pbox_dmax, &budget);
    doc = flatbox::p_boxicity_to_json(res);
    using St = flatbox::PBoxicityResult::Status;
    exit_code = res.status == St::Finite ? kOk
                : res.status == St::BudgetExceeded ? kBudget
                                                   : kFalse;
  });

  // forbidden
  int fb_s = 0, fb_p = 0;
  std::string fb_scope = "all";
  std::string fb_order = "canonical";
  auto* fb_cmd = app.add_subcommand("forbidden", "exhaustive cycle-complement verdict");
  add_common(fb_cmd, opt, /*wants_in=*/false);
  fb_cmd->add_option("--s", fb_s, "cycle length")->required();
  fb_cmd->add_option("--p", fb_p, "flatness bound p")->required();
  fb_cmd->add_option("--scope", fb_scope, "\"all\" or a single ambient dimension");
  fb_cmd->add_option("--order", fb_order, "candidate search order")
      ->check(CLI::IsMember({"canonical", "reversed"}));
  fb_cmd->callback([&] {
    auto budget = make_budget(opt);
    auto cert = flatbox::verify_forbidden(fb_s, fb_p, parse_scope(fb_scope), &budget,
                                          fb_order == "canonical"
                                              ? flatbox::CandidateOrder::Canonical
                                              : flatbox::CandidateOrder::Reversed);
    doc = flatbox::forbidden_certificate_to_json(cert);
    exit_code = cert.verdict == "forbidden" ? kOk
                : cert.verdict == "realizable" ? kFalse
                                               : kBudget;
  });

  // helly
  auto* helly_cmd = app.add_subcommand("helly", "piercing Helly numbers");
  helly_cmd->require_subcommand(1);
  int h_m = 0, h_d = 0;
  auto* h_h = helly_cmd->add_subcommand("h", "table value for m-flat boxes");
  add_common(h_h, opt, /*wants_in=*/false);
  h_h->add_option("--m", h_m, "box dimension bound")->required();
  h_h->add_option("--d", h_d, "ambient dimension (the value does not depend on it)");
  h_h->callback([&] {
    doc = ordered_json{{"h", flatbox::h_value(h_m)}};
    if (h_d) doc["note"] = "the bound is independent of the ambient dimension";
  });
  int hc_h = 0;
  bool hc_record = false;
  auto* h_check = helly_cmd->add_subcommand("check", "test the h-subfamily implication");
  h_check->set_help_flag("--help", "print help");  // frees -h for the size option
  add_common(h_check, opt);
  h_check->add_option("--h", hc_h, "subfamily size")->required();
  h_check->add_flag("--record-failures", hc_record, "list failing subfamilies");
  h_check->callback([&] {
    auto fam = flatbox::box_family_from_json(flatbox::load_json(opt.in));
    auto rep = flatbox::helly_gallai_check(fam, hc_h, hc_record);
    doc = flatbox::helly_report_to_json(rep);
    exit_code = rep.implication_holds ? kOk : kFalse;
  });
  int hl_m = 1;
  auto* h_lower = helly_cmd->add_subcommand("lower", "sharpness witness family");
  add_common(h_lower, opt, /*wants_in=*/false);
  h_lower->add_option("--m", hl_m, "box dimension bound (1 or 2)")->required();
  h_lower->callback([&] {
    doc = flatbox::box_family_to_json(flatbox::lower_bound_witness(hl_m));
  });
  int hu_m = 1;
  std::string hu_s, hu_scope = "all";
  auto* h_upper = helly_cmd->add_subcommand("upper", "verify the bound via odd cycles");
  add_common(h_upper, opt, /*wants_in=*/false);
  h_upper->add_option("--m", hu_m, "box dimension bound")->required();
  h_upper->add_option("--s", hu_s, "odd cycle lengths, e.g. 7,9")->required();
  h_upper->add_option("--scope", hu_scope, "\"all\" or a single ambient dimension");
  h_upper->callback([&] {
    auto budget = make_budget(opt);
    auto rep = flatbox::upper_bound_check(hu_m, parse_int_list(hu_s, "--s"),
                                          parse_scope(hu_scope), &budget);
    doc = flatbox::upper_bound_report_to_json(rep);
    bool budget_hit = false;
    for (const auto& item : rep.items) budget_hit |= item.verdict == "budget-exceeded";
    exit_code = budget_hit ? kBudget : (rep.all_confirmed ? kOk : kFalse);
  });

  // gallery
  auto* gallery_cmd = app.add_subcommand("gallery", "validated constructions");
  gallery_cmd->require_subcommand(1);
  auto* ga_list = gallery_cmd->add_subcommand("list", "list construction names");
  add_common(ga_list, opt, /*wants_in=*/false);
  ga_list->callback([&] { doc = ordered_json{{"constructions", flatbox::gallery_names()}}; });
  std::string ga_name;
  int ga_k = 3;
  auto* ga_emit = gallery_cmd->add_subcommand("emit", "emit one construction");
  add_common(ga_emit, opt, /*wants_in=*/false);
  ga_emit->add_option("name", ga_name, "construction name")->required();
  ga_emit->add_option("--k", ga_k, "interval count for disjoint-intervals");
  ga_emit->callback([&] {
    doc = flatbox::construction_to_json(flatbox::gallery_get(ga_name, ga_k));
  });

  // partition-analyze
  int pa_anchor = 1;
  auto* pa_cmd = app.add_subcommand("partition-analyze",
                                    "outer-path partition bookkeeping for a cycle complement");
  add_common(pa_cmd, opt);
  pa_cmd->add_option("--graph", opt.graph, "graph JSON file")->required();
  pa_cmd->add_option("--anchor", pa_anchor, "anchor vertex");
  pa_cmd->callback([&] {
    auto dec = flatbox::slim_decomposition_from_json(flatbox::load_json(opt.in));
    auto rep = flatbox::analyze_missing_partition(load_graph(opt.graph, "--graph graph"), dec,
                                                  pa_anchor);
    doc = flatbox::partition_report_to_json(rep);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::fputs(flatbox::dump_json(ordered_json{{"error", e.what()}}).c_str(), stdout);
    return kUsage;
  }
  return emit(opt, doc, exit_code);
}
