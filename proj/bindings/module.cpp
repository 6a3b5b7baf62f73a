#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flatbox/json_io.hpp"
#include "flatbox/version.hpp"

namespace py = pybind11;
using flatbox::ordered_json;

namespace {

// The module speaks plain dicts/lists; conversion goes through the same
// serializers as the CLI so both surfaces stay byte-identical.
py::object to_py(const ordered_json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_py(item));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = to_py(value);
      return out;
    }
  }
}

ordered_json from_py(py::handle h) {
  if (h.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
  if (py::isinstance<py::int_>(h)) return h.cast<long long>();
  if (py::isinstance<py::float_>(h)) return h.cast<double>();
  if (py::isinstance<py::str>(h)) return h.cast<std::string>();
  if (py::isinstance<py::dict>(h)) {
    ordered_json out = ordered_json::object();
    for (auto item : h.cast<py::dict>())
      out[item.first.cast<std::string>()] = from_py(item.second);
    return out;
  }
  if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
    ordered_json out = ordered_json::array();
    for (auto item : h.cast<py::sequence>()) out.push_back(from_py(item));
    return out;
  }
  throw py::type_error("cannot convert this python value to a JSON document");
}

flatbox::Graph graph_arg(py::handle h) { return flatbox::graph_from_json(from_py(h)); }
flatbox::BoxFamily family_arg(py::handle h) { return flatbox::box_family_from_json(from_py(h)); }
flatbox::SlimDecomposition dec_arg(py::handle h) {
  return flatbox::slim_decomposition_from_json(from_py(h));
}

flatbox::SearchBudget budget_arg(std::uint64_t nodes, double seconds) {
  return flatbox::SearchBudget(nodes, seconds, 1);
}

std::optional<int> scope_arg(py::handle h) {
  if (h.is_none()) return std::nullopt;
  return h.cast<int>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact search tools for flat-box intersection representations";
  m.attr("__version__") = flatbox::kVersion;

  m.def("complete_graph", [](int n) { return to_py(flatbox::graph_to_json(flatbox::complete_graph(n))); },
        py::arg("n"));
  m.def("make_cycle", [](int s) { return to_py(flatbox::graph_to_json(flatbox::make_cycle(s))); },
        py::arg("s"));
  m.def("complement", [](py::handle g) {
    return to_py(flatbox::graph_to_json(flatbox::complement(graph_arg(g))));
  }, py::arg("graph"));
  m.def("chromatic_number", [](py::handle g) {
    auto col = flatbox::chromatic_number(graph_arg(g));
    ordered_json coloring = ordered_json::object();
    for (std::size_t v = 0; v < col.color.size(); ++v)
      coloring[std::to_string(v + 1)] = col.color[v];
    return to_py(ordered_json{{"chi", col.chi}, {"coloring", coloring}});
  }, py::arg("graph"));

  m.def("recognize_interval", [](py::handle g) {
    return to_py(flatbox::recognition_to_json(flatbox::recognize_interval(graph_arg(g))));
  }, py::arg("graph"));

  m.def("intersection_graph", [](py::handle f) {
    return to_py(flatbox::graph_to_json(flatbox::intersection_graph(family_arg(f))));
  }, py::arg("family"));
  m.def("pierceable", [](py::handle f, int n) {
    return to_py(flatbox::piercing_result_to_json(flatbox::pierceable(family_arg(f), n)));
  }, py::arg("family"), py::arg("n"));
  m.def("piercing_number", [](py::handle f) {
    return to_py(flatbox::piercing_number_to_json(flatbox::piercing_number(family_arg(f))));
  }, py::arg("family"));

  m.def("check_slim", [](py::handle g, py::handle dec) {
    return to_py(flatbox::slim_check_to_json(flatbox::check_slim(graph_arg(g), dec_arg(dec))));
  }, py::arg("graph"), py::arg("decomposition"));
  m.def("to_boxes", [](py::handle g, py::handle dec) {
    return to_py(flatbox::box_family_to_json(
        flatbox::decomposition_to_realization(graph_arg(g), dec_arg(dec))));
  }, py::arg("graph"), py::arg("decomposition"));
  m.def("from_boxes", [](py::handle f, int p) {
    return to_py(flatbox::slim_decomposition_to_json(
        flatbox::realization_to_decomposition(family_arg(f), p)));
  }, py::arg("family"), py::arg("p"));

  m.def("boxicity", [](py::handle g, std::uint64_t budget_nodes, double budget_seconds) {
    auto budget = budget_arg(budget_nodes, budget_seconds);
    return to_py(flatbox::boxicity_to_json(flatbox::boxicity(graph_arg(g), &budget)));
  }, py::arg("graph"), py::arg("budget_nodes") = 0, py::arg("budget_seconds") = 0.0);
  m.def("p_boxicity", [](py::handle g, int p, int d_max, std::uint64_t budget_nodes,
                         double budget_seconds) {
    auto budget = budget_arg(budget_nodes, budget_seconds);
    return to_py(flatbox::p_boxicity_to_json(flatbox::p_boxicity(graph_arg(g), p, d_max, &budget)));
  }, py::arg("graph"), py::arg("p"), py::arg("d_max") = 8, py::arg("budget_nodes") = 0,
     py::arg("budget_seconds") = 0.0);
  m.def("realizable_some_d", [](py::handle g, int p, std::uint64_t budget_nodes,
                                double budget_seconds) {
    auto budget = budget_arg(budget_nodes, budget_seconds);
    return to_py(flatbox::realizable_to_json(flatbox::realizable_some_d(graph_arg(g), p, &budget)));
  }, py::arg("graph"), py::arg("p"), py::arg("budget_nodes") = 0, py::arg("budget_seconds") = 0.0);
  m.def("verify_forbidden", [](int s, int p, py::handle scope, std::uint64_t budget_nodes,
                               double budget_seconds) {
    auto budget = budget_arg(budget_nodes, budget_seconds);
    return to_py(flatbox::forbidden_certificate_to_json(
        flatbox::verify_forbidden(s, p, scope_arg(scope), &budget)));
  }, py::arg("s"), py::arg("p"), py::arg("scope") = py::none(), py::arg("budget_nodes") = 0,
     py::arg("budget_seconds") = 0.0);

  m.def("h_value", &flatbox::h_value, py::arg("m"));
  m.def("helly_gallai_check", [](py::handle f, int h, bool record_failures) {
    return to_py(flatbox::helly_report_to_json(
        flatbox::helly_gallai_check(family_arg(f), h, record_failures)));
  }, py::arg("family"), py::arg("h"), py::arg("record_failures") = false);
  m.def("lower_bound_witness", [](int m) {
    return to_py(flatbox::box_family_to_json(flatbox::lower_bound_witness(m)));
  }, py::arg("m"));
  m.def("upper_bound_check", [](int m, const std::vector<int>& s_list, py::handle scope) {
    return to_py(flatbox::upper_bound_report_to_json(
        flatbox::upper_bound_check(m, s_list, scope_arg(scope))));
  }, py::arg("m"), py::arg("s_list"), py::arg("scope") = py::none());

  m.def("gallery_names", &flatbox::gallery_names);
  m.def("gallery_get", [](const std::string& name, int k) {
    return to_py(flatbox::construction_to_json(flatbox::gallery_get(name, k)));
  }, py::arg("name"), py::arg("k") = 3);

  m.def("analyze_missing_partition", [](py::handle g, py::handle dec, int anchor) {
    return to_py(flatbox::partition_report_to_json(
        flatbox::analyze_missing_partition(graph_arg(g), dec_arg(dec), anchor)));
  }, py::arg("graph"), py::arg("decomposition"), py::arg("anchor"));
}
