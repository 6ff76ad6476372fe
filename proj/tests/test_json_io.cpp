#include "doctest.h"

#include "helpers.hpp"
#include "homat/errors.hpp"
#include "homat/json_io.hpp"
#include "homat/polynomial.hpp"
#include "homat/tensor.hpp"
#include "homat/tutte.hpp"

using namespace homat;
using namespace homat::testing;

TEST_CASE("multigraph round trip") {
  for (const Multigraph& f : {triangle(), Multigraph(0, {}), Multigraph(3, {{0, 0}, {0, 2}})}) {
    Multigraph back = parse_multigraph(multigraph_json(f));
    CHECK(back.same_as(f));
  }
  CHECK(multigraph_json(Multigraph(2, {{0, 1}})) == R"({"vertices":2,"edges":[[0,1]]})");
}

TEST_CASE("labelled graph round trip") {
  LabeledGraph f(path_graph(2), {2, 0});
  LabeledGraph back = parse_labeled_graph(labeled_graph_json(f));
  CHECK(back.graph().same_as(f.graph()));
  CHECK(back.labels() == f.labels());
  CHECK(has_labels(labeled_graph_json(f)));
  CHECK_FALSE(has_labels(multigraph_json(triangle())));
}

TEST_CASE("weighted graph round trip keeps exact rationals") {
  WeightedGraph g = rational_target();
  WeightedGraph back = parse_weighted_graph(weighted_graph_json(g));
  CHECK(back.n() == g.n());
  CHECK(back.a() == g.a());
  CHECK(back.b() == g.b());
  CHECK(weighted_graph_json(p3_reduced()) ==
        R"({"n":2,"a":["2","1"],"B":[["0","1"],["1","0"]]})");
}

TEST_CASE("integer literals are accepted for rationals") {
  WeightedGraph g = parse_weighted_graph(R"({"n":1,"a":[5],"B":[[-2]]})");
  CHECK(g.a(0) == 5);
  CHECK(g.b(0, 0) == -2);
}

TEST_CASE("malformed input is rejected with located diagnostics") {
  CHECK_THROWS_AS(parse_multigraph("not json"), input_error);
  CHECK_THROWS_AS(parse_multigraph(R"({"edges":[]})"), input_error);
  CHECK_THROWS_AS(parse_multigraph(R"({"vertices":2,"edges":[[0]]})"), input_error);
  CHECK_THROWS_AS(parse_multigraph(R"({"vertices":2,"edges":[[0,2]]})"), input_error);
  CHECK_THROWS_AS(parse_multigraph(R"({"vertices":-1,"edges":[]})"), input_error);
  CHECK_THROWS_AS(parse_labeled_graph(R"({"vertices":2,"edges":[]})"), input_error);
  CHECK_THROWS_AS(parse_labeled_graph(R"({"k":1,"vertices":2,"edges":[],"labels":[2]})"),
                  input_error);
  CHECK_THROWS_AS(parse_weighted_graph(R"({"n":1,"a":["1/0"],"B":[["0"]]})"), input_error);
  CHECK_THROWS_AS(parse_weighted_graph(R"({"n":1,"a":["x"],"B":[["0"]]})"), input_error);
  CHECK_THROWS_AS(parse_weighted_graph(R"({"n":2,"a":["1","1"],"B":[["0","1"],["2","0"]]})"),
                  input_error);

  try {
    parse_weighted_graph(R"({"n":2,"a":["1","1"],"B":[["0","y"],["1","0"]]})");
    FAIL("expected a diagnostic");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("B[0][1]") != std::string::npos);
  }
}

TEST_CASE("polynomial serialization orders terms by decreasing degree") {
  BivariatePoly t = tutte(triangle());
  CHECK(polynomial_json(t) ==
        R"({"terms":[{"x":2,"y":0,"c":"1"},{"x":1,"y":0,"c":"1"},{"x":0,"y":1,"c":"1"}]})");
  CHECK(parse_polynomial(polynomial_json(t)) == t);
  CHECK(polynomial_json(BivariatePoly()) == R"({"terms":[]})");
  CHECK(parse_polynomial(R"({"terms":[]})").is_zero());
  CHECK_THROWS_AS(parse_polynomial(R"({"terms":[{"x":-1,"y":0,"c":"1"}]})"), input_error);
}

TEST_CASE("tensor serialization carries shape and exact entries") {
  HomTensor t;
  t.k = 1;
  t.n = 2;
  t.entries = {Rational(1, 3), Rational(-2)};
  CHECK(tensor_json(t) == R"({"k":1,"n":2,"entries":["1/3","-2"]})");
}

TEST_CASE("nonexistent files raise input errors") {
  CHECK_THROWS_AS(read_file("/nonexistent/file.json"), input_error);
}

TEST_CASE("rational literals canonicalize") {
  CHECK(rational_str(parse_rational("4/6")) == "2/3");
  CHECK(rational_str(parse_rational("-10/4")) == "-5/2");
  CHECK(rational_str(parse_rational("7")) == "7");
  CHECK(parse_rational("0/5") == 0);
  CHECK_THROWS_AS(parse_rational(""), input_error);
  CHECK_THROWS_AS(parse_rational("1.5"), input_error);
  CHECK_THROWS_AS(parse_rational("2/"), input_error);
  CHECK_THROWS_AS(parse_rational("1/0"), input_error);
}

TEST_CASE("exact powers") {
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(rational_pow(Rational(0), 0) == 1);
  CHECK(rational_pow(Rational(-1, 2), 2) == Rational(1, 4));
  CHECK_THROWS_AS(rational_pow(Rational(0), -1), input_error);
  CHECK(integer_pow(3, 4) == 81);
  CHECK(integer_pow(-2, 3) == -8);
  CHECK(integer_pow(5, 0) == 1);
}
