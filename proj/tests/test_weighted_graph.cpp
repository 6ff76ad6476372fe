#include "doctest.h"

#include "helpers.hpp"
#include "homat/errors.hpp"
#include "homat/hom.hpp"
#include "homat/weighted_graph.hpp"

using namespace homat;
using namespace homat::testing;

TEST_CASE("construction validates shape and symmetry") {
  CHECK_THROWS_AS(WeightedGraph({Rational(1)}, {}), input_error);
  CHECK_THROWS_AS(WeightedGraph({Rational(1), Rational(1)},
                                {{Rational(0), Rational(1)}, {Rational(1)}}),
                  input_error);
  CHECK_THROWS_AS(WeightedGraph({Rational(1), Rational(1)},
                                {{Rational(0), Rational(1)}, {Rational(2), Rational(0)}}),
                  input_error);
  WeightedGraph empty = WeightedGraph::empty();
  CHECK(empty.n() == 0);
  CHECK(empty.weight_sum() == 0);
}

TEST_CASE("complete graph target") {
  WeightedGraph k3 = complete_graph(3);
  CHECK(k3.n() == 3);
  CHECK(k3.weight_sum() == 3);
  CHECK(k3.a(0) == 1);
  CHECK(k3.b(0, 0) == 0);
  CHECK(k3.b(0, 1) == 1);
  CHECK_THROWS_AS(complete_graph(-1), input_error);
}

TEST_CASE("from_simple_graph rejects loops and parallel edges") {
  WeightedGraph p3 = from_simple_graph(path_graph(2));
  CHECK(p3.n() == 3);
  CHECK(p3.b(0, 1) == 1);
  CHECK(p3.b(0, 2) == 0);
  CHECK_THROWS_AS(from_simple_graph(Multigraph(1, {{0, 0}})), input_error);
  CHECK_THROWS_AS(from_simple_graph(Multigraph(2, {{0, 1}, {0, 1}})), input_error);
}

TEST_CASE("tutte target puts y on the diagonal") {
  WeightedGraph t = tutte_target(3, Rational(-2));
  CHECK(t.n() == 3);
  CHECK(t.a(1) == 1);
  CHECK(t.b(0, 0) == -2);
  CHECK(t.b(2, 2) == -2);
  CHECK(t.b(0, 2) == 1);
  CHECK_THROWS_AS(tutte_target(0, Rational(1)), input_error);
}

TEST_CASE("cyclic Cayley target requires a symmetric connection set") {
  WeightedGraph c5 = cayley_cyclic(5, {1, 4});
  CHECK(c5.n() == 5);
  CHECK(c5.b(0, 1) == 1);
  CHECK(c5.b(1, 0) == 1);
  CHECK(c5.b(0, 2) == 0);
  CHECK(c5.b(0, 0) == 0);
  // Residues are taken mod m, so {1, -1} is the same set.
  WeightedGraph c5b = cayley_cyclic(5, {1, -1});
  CHECK(c5b.b(0, 4) == 1);

  CHECK_THROWS_AS(cayley_cyclic(5, {1}), input_error);
  CHECK_THROWS_AS(cayley_cyclic(0, {}), input_error);
  // 2 is its own negative mod 4.
  CHECK_NOTHROW(cayley_cyclic(4, {2}));
  // 0 in the set puts 1 on the diagonal.
  CHECK(cayley_cyclic(3, {0}).b(1, 1) == 1);
}

TEST_CASE("twin classes and reduction") {
  WeightedGraph p3 = p3_target();
  auto classes = twin_classes(p3);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<int>{0, 2});
  CHECK(classes[1] == std::vector<int>{1});
  CHECK_FALSE(is_twin_free(p3));
  CHECK(is_twin_free(complete_graph(3)));
  CHECK(is_twin_free(p3_reduced()));

  WeightedGraph red = twin_reduce(p3);
  CHECK(red.n() == 2);
  CHECK(red.a(0) == 2);
  CHECK(red.a(1) == 1);
  CHECK(red.b(0, 0) == 0);
  CHECK(red.b(0, 1) == 1);
  CHECK(is_twin_free(red));

  // Reduction is idempotent.
  WeightedGraph red2 = twin_reduce(red);
  CHECK(red2.n() == red.n());
  CHECK(red2.a() == red.a());
  CHECK(red2.b() == red.b());
}

TEST_CASE("a twin class with cancelling weights disappears") {
  WeightedGraph g({Rational(1), Rational(-1), Rational(3)},
                  {{Rational(1), Rational(1), Rational(2)},
                   {Rational(1), Rational(1), Rational(2)},
                   {Rational(2), Rational(2), Rational(0)}});
  REQUIRE(twin_classes(g).size() == 2);
  WeightedGraph red = twin_reduce(g);
  CHECK(red.n() == 1);
  CHECK(red.a(0) == 3);
  CHECK(red.b(0, 0) == 0);
}

TEST_CASE("dropping a cancelled class can expose new twins") {
  // Rows 0 and 1 differ only in the columns of the cancelling class {2, 3},
  // so one pass would leave them as twins; the reduction must cascade.
  WeightedGraph g({Rational(1), Rational(2), Rational(1), Rational(-1)},
                  {{Rational(0), Rational(0), Rational(1), Rational(1)},
                   {Rational(0), Rational(0), Rational(2), Rational(2)},
                   {Rational(1), Rational(2), Rational(3), Rational(3)},
                   {Rational(1), Rational(2), Rational(3), Rational(3)}});
  WeightedGraph red = twin_reduce(g);
  CHECK(is_twin_free(red));
  CHECK(red.n() == 1);
  CHECK(red.a(0) == 3);
  CHECK(red.b(0, 0) == 0);
  for (const Multigraph& f : {path_graph(1), triangle(), Multigraph(1, {{0, 0}})}) {
    CHECK(hom(f, g) == hom(f, red));
  }
}

TEST_CASE("describe names size and vertex weights") {
  CHECK(describe(p3_reduced()) == "G(n=2, a=[2,1])");
}
