#pragma once

#include <string>

#include "homat/invariance.hpp"
#include "homat/multigraph.hpp"
#include "homat/polynomial.hpp"
#include "homat/tensor.hpp"
#include "homat/weighted_graph.hpp"

namespace homat {

// File formats. Rationals are always strings ("p/q" or "p"). Parsers throw
// input_error naming the offending field.
//
//   multigraph      {"vertices": 4, "edges": [[0,1],[1,2],[1,2],[3,3]]}
//   labelled graph  same, plus "labels": [v_of_label_1, v_of_label_2, ...]
//   weighted graph  {"n": 3, "a": ["1","1","1"], "B": [["0","1",...], ...]}
//   polynomial      {"terms": [{"x":2,"y":0,"c":"1"}, ...]}, terms sorted
//                   by (x, y) descending
//   tensor          {"k": 2, "n": 3, "entries": ["0","1", ...]}

Multigraph parse_multigraph(const std::string& text);
LabeledGraph parse_labeled_graph(const std::string& text);  // "labels" required
bool has_labels(const std::string& text);
WeightedGraph parse_weighted_graph(const std::string& text);

std::string multigraph_json(const Multigraph& f);
std::string labeled_graph_json(const LabeledGraph& f);
std::string weighted_graph_json(const WeightedGraph& g);
std::string polynomial_json(const BivariatePoly& p);
BivariatePoly parse_polynomial(const std::string& text);
std::string tensor_json(const HomTensor& t);

// Report objects for the verification commands.
std::string pair_scan_json(const PairScanReport& report);
std::string verdict_json(const InvarianceVerdict& verdict);
std::string survey_row_json(const SurveyRow& row);

// Reads a whole file; throws input_error naming the path when unreadable.
std::string read_file(const std::string& path);

}  // namespace homat
