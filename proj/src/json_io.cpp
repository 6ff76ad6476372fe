#include "homat/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "homat/errors.hpp"

namespace homat {
namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed JSON");
  return j;
}

json require_field(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) {
    throw input_error(std::string("missing field \"") + field + "\"");
  }
  return j.at(field);
}

int require_int(const json& j, const char* field) {
  json v = require_field(j, field);
  if (!v.is_number_integer()) {
    throw input_error(std::string("field \"") + field + "\" must be an integer");
  }
  return v.get<int>();
}

Rational field_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) {
    throw input_error(where + " must be a rational string like \"3\" or \"-2/5\"");
  }
  try {
    return parse_rational(v.get<std::string>());
  } catch (const input_error& e) {
    throw input_error(where + ": " + e.what());
  }
}

std::vector<Edge> parse_edges(const json& j) {
  json list = require_field(j, "edges");
  if (!list.is_array()) throw input_error("field \"edges\" must be an array of pairs");
  std::vector<Edge> edges;
  edges.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& e = list[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw input_error("edges[" + std::to_string(i) + "] must be a pair of vertex ids");
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return edges;
}

json edges_json(const Multigraph& f) {
  json list = json::array();
  for (const Edge& e : f.edges()) list.push_back(json::array({e.u, e.v}));
  return list;
}

json rational_array(const std::vector<Rational>& values) {
  json list = json::array();
  for (const Rational& v : values) list.push_back(rational_str(v));
  return list;
}

}  // namespace

Multigraph parse_multigraph(const std::string& text) {
  json j = parse_text(text);
  return Multigraph(require_int(j, "vertices"), parse_edges(j));
}

bool has_labels(const std::string& text) {
  json j = parse_text(text);
  return j.is_object() && j.contains("labels");
}

LabeledGraph parse_labeled_graph(const std::string& text) {
  json j = parse_text(text);
  Multigraph base(require_int(j, "vertices"), parse_edges(j));
  json list = require_field(j, "labels");
  if (!list.is_array()) throw input_error("field \"labels\" must be an array of vertex ids");
  std::vector<int> labels;
  labels.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!list[i].is_number_integer()) {
      throw input_error("labels[" + std::to_string(i) + "] must be a vertex id");
    }
    labels.push_back(list[i].get<int>());
  }
  return LabeledGraph(std::move(base), std::move(labels));
}

WeightedGraph parse_weighted_graph(const std::string& text) {
  json j = parse_text(text);
  const int n = require_int(j, "n");
  json a_list = require_field(j, "a");
  if (!a_list.is_array() || static_cast<int>(a_list.size()) != n) {
    throw input_error("field \"a\" must be an array of n rationals");
  }
  std::vector<Rational> a;
  a.reserve(a_list.size());
  for (std::size_t i = 0; i < a_list.size(); ++i) {
    a.push_back(field_rational(a_list[i], "a[" + std::to_string(i) + "]"));
  }
  json b_rows = require_field(j, "B");
  if (!b_rows.is_array() || static_cast<int>(b_rows.size()) != n) {
    throw input_error("field \"B\" must be an n-by-n array of rationals");
  }
  std::vector<std::vector<Rational>> b;
  b.reserve(b_rows.size());
  for (std::size_t i = 0; i < b_rows.size(); ++i) {
    const json& row = b_rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw input_error("B[" + std::to_string(i) + "] must have n entries");
    }
    std::vector<Rational> out_row;
    out_row.reserve(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) {
      out_row.push_back(field_rational(
          row[k], "B[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    }
    b.push_back(std::move(out_row));
  }
  return WeightedGraph(std::move(a), std::move(b));
}

std::string multigraph_json(const Multigraph& f) {
  json j;
  j["vertices"] = f.vertex_count();
  j["edges"] = edges_json(f);
  return j.dump();
}

std::string labeled_graph_json(const LabeledGraph& f) {
  json j;
  j["vertices"] = f.graph().vertex_count();
  j["edges"] = edges_json(f.graph());
  j["labels"] = f.labels();
  return j.dump();
}

std::string weighted_graph_json(const WeightedGraph& g) {
  json j;
  j["n"] = g.n();
  j["a"] = rational_array(g.a());
  json rows = json::array();
  for (int i = 0; i < g.n(); ++i) rows.push_back(rational_array(g.b()[static_cast<std::size_t>(i)]));
  j["B"] = rows;
  return j.dump();
}

std::string polynomial_json(const BivariatePoly& p) {
  json terms = json::array();
  const auto& map = p.terms();
  for (auto it = map.rbegin(); it != map.rend(); ++it) {
    json term;
    term["x"] = it->first.first;
    term["y"] = it->first.second;
    term["c"] = rational_str(it->second);
    terms.push_back(std::move(term));
  }
  json j;
  j["terms"] = std::move(terms);
  return j.dump();
}

BivariatePoly parse_polynomial(const std::string& text) {
  json j = parse_text(text);
  json terms = require_field(j, "terms");
  if (!terms.is_array()) throw input_error("field \"terms\" must be an array");
  BivariatePoly p;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const json& term = terms[i];
    std::string where = "terms[" + std::to_string(i) + "]";
    if (!term.is_object()) throw input_error(where + " must be an object");
    int x = require_int(term, "x");
    int y = require_int(term, "y");
    if (x < 0 || y < 0) throw input_error(where + ": degrees must be nonnegative");
    p += BivariatePoly::monomial(x, y, field_rational(require_field(term, "c"), where + ".c"));
  }
  return p;
}

std::string tensor_json(const HomTensor& t) {
  json j;
  j["k"] = t.k;
  j["n"] = t.n;
  j["entries"] = rational_array(t.entries);
  return j.dump();
}

namespace {

json witness_pair_json(const PairWitness& w) {
  json j;
  j["f1"] = json::parse(labeled_graph_json(w.f1));
  j["f2"] = json::parse(labeled_graph_json(w.f2));
  j["lhs"] = rational_str(w.lhs);
  j["rhs"] = rational_str(w.rhs);
  return j;
}

}  // namespace

std::string pair_scan_json(const PairScanReport& report) {
  json j;
  j["group_property"] = report.group_property;
  j["identity_everywhere"] = report.identity_everywhere;
  j["pairs_tested"] = report.pairs_tested;
  j["inconclusive"] = report.inconclusive;
  j["consistent"] = report.consistent();
  if (report.witness) j["witness"] = witness_pair_json(*report.witness);
  return j.dump();
}

std::string verdict_json(const InvarianceVerdict& verdict) {
  json j;
  j["target"] = verdict.target;
  j["transitive"] = verdict.transitive;
  j["generously_transitive"] = verdict.generously_transitive;
  j["pairs_tested"] = verdict.pairs_tested;
  j["inconclusive"] = verdict.inconclusive;
  j["consistent"] = verdict.consistent;
  if (verdict.witness) {
    json w;
    w["first"] = json::parse(multigraph_json(verdict.witness->first));
    w["second"] = json::parse(multigraph_json(verdict.witness->second));
    w["edge_bijection"] = verdict.witness->edge_bijection;
    w["h_first"] = rational_str(verdict.witness->h_first);
    w["h_second"] = rational_str(verdict.witness->h_second);
    j["witness"] = std::move(w);
  }
  return j.dump();
}

std::string survey_row_json(const SurveyRow& row) {
  json j;
  j["index"] = row.index;
  j["graph"] = json::parse(multigraph_json(row.graph));
  j["transitive"] = row.transitive;
  j["generously_transitive"] = row.generously_transitive;
  j["multiplicativity"] = json::parse(pair_scan_json(row.multiplicativity));
  j["flip_invariance"] = json::parse(pair_scan_json(row.flip_invariance));
  j["matroid_invariance"] = json::parse(verdict_json(row.matroid_invariance));
  j["consistent"] = row.consistent;
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace homat
