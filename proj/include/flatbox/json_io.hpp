#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "flatbox/boxes.hpp"
#include "flatbox/gallery.hpp"
#include "flatbox/graph.hpp"
#include "flatbox/helly.hpp"
#include "flatbox/interval.hpp"
#include "flatbox/search.hpp"
#include "flatbox/slim.hpp"

namespace flatbox {

// ordered_json keeps object keys in insertion order, which is what makes the
// emitted documents byte-stable across runs.
using ordered_json = nlohmann::ordered_json;

// File formats. Parsers validate shape and ranges and throw
// std::invalid_argument with a "<where>: <what>" message.
ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const ordered_json& j);

ordered_json interval_realization_to_json(const IntervalRealization& r);
IntervalRealization interval_realization_from_json(const ordered_json& j);

// Coordinates are emitted as integers when exact, "p/q" strings otherwise;
// both are accepted on input.
ordered_json box_family_to_json(const BoxFamily& f);
BoxFamily box_family_from_json(const ordered_json& j);

ordered_json slim_decomposition_to_json(const SlimDecomposition& dec);
SlimDecomposition slim_decomposition_from_json(const ordered_json& j);

// Certificates and reports (emit only).
ordered_json forbidden_certificate_to_json(const ForbiddenCertificate& cert);
ordered_json slim_check_to_json(const SlimCheck& c);
ordered_json recognition_to_json(const IntervalRecognition& r);
ordered_json piercing_result_to_json(const PiercingResult& r);
ordered_json piercing_number_to_json(const PiercingNumber& r);
ordered_json boxicity_to_json(const BoxicityResult& r);
ordered_json p_boxicity_to_json(const PBoxicityResult& r);
ordered_json realizable_to_json(const RealizableResult& r);
ordered_json helly_report_to_json(const HellyGallaiReport& r);
ordered_json upper_bound_report_to_json(const UpperBoundReport& r);
ordered_json partition_report_to_json(const PartitionReport& r);
ordered_json construction_to_json(const NamedConstruction& c);

// File helpers. load_json error messages carry the file name and, for parse
// errors, nlohmann's line/column position.
ordered_json load_json(const std::string& path);
void write_json(const std::string& path, const ordered_json& j);
std::string dump_json(const ordered_json& j);  // 2-space indent, trailing newline

}  // namespace flatbox
