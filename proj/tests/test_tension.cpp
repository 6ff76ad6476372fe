#include "doctest.h"

#include "helpers.hpp"
#include "homat/enumerate.hpp"
#include "homat/errors.hpp"
#include "homat/hom.hpp"
#include "homat/tension.hpp"
#include "homat/tutte.hpp"

using namespace homat;
using namespace homat::testing;

TEST_CASE("hand-counted tension numbers") {
  // Edge functions into {1} mod 2 that are coboundaries: the edge must
  // cross the two potential values, two of four potentials, one class.
  CHECK(count_tensions(path_graph(1), 2, {1}) == 1);
  CHECK(count_tensions(triangle(), 3, {1, 2}) == 2);
  CHECK(count_tensions(triangle(), 2, {1}) == 0);  // odd cycles have no 2-tension
  CHECK(count_tensions(cycle_graph(4), 2, {1}) == 1);
  CHECK(count_tensions(Multigraph(0, {}), 3, {}) == 1);
  CHECK(count_tensions(Multigraph(2, {}), 5, {}) == 1);
  CHECK(count_tensions(Multigraph(1, {{0, 0}}), 4, {0}) == 1);
  CHECK(count_tensions(Multigraph(1, {{0, 0}}), 4, {1, 2, 3}) == 0);  // loops force 0
}

TEST_CASE("the full residue set counts every coboundary") {
  for (const Multigraph& f : enumerate_multigraphs(4, 5)) {
    for (long m : {2L, 3L, 4L}) {
      std::vector<long> all;
      for (long r = 0; r < m; ++r) all.push_back(r);
      CHECK(count_tensions(f, m, all) == integer_pow(m, static_cast<unsigned long>(rank(f))));
    }
  }
}

TEST_CASE("nowhere-zero tensions match proper colorings up to the fiber") {
  for (const Multigraph& f : enumerate_multigraphs(4, 5)) {
    for (long n : {2L, 3L}) {
      std::vector<long> nz;
      for (long r = 1; r < n; ++r) nz.push_back(r);
      Integer tensions = count_tensions(f, n, nz);
      Rational colorings = chromatic_value(f, n);
      Rational fiber = rational_pow(Rational(n), component_count(f));
      CHECK(Rational(tensions) == colorings / fiber);
    }
  }
}

TEST_CASE("tensions with a symmetric set equal the normalized Cayley count") {
  std::vector<std::pair<long, std::vector<long>>> cases = {
      {5, {1, 4}}, {4, {1, 3}}, {3, {1, 2}}, {6, {2, 4}}};
  for (const Multigraph& f : enumerate_multigraphs(3, 4)) {
    for (const auto& [m, s] : cases) {
      std::vector<int> s_int(s.begin(), s.end());
      Rational via_cayley = h(f, cayley_cyclic(static_cast<int>(m), s_int));
      CHECK(Rational(count_tensions(f, m, s)) == via_cayley);
    }
  }
}

TEST_CASE("asymmetric sets depend on the orientation only through reversal") {
  // With S = {1} mod 3 on a path, both orientations still agree by the
  // negation bijection on potentials; the counts differ edge by edge but
  // the total is preserved.
  Multigraph p = path_graph(2);
  Orientation c = canonical_orientation(p);
  CHECK(count_tensions(p, 3, {1}, c) == count_tensions(p, 3, {1}, reversed_orientation(c)));
}

TEST_CASE("inputs are validated") {
  CHECK_THROWS_AS(count_tensions(path_graph(1), 0, {0}), input_error);
  CHECK_THROWS_AS(count_tensions(path_graph(1), -2, {0}), input_error);
  Orientation wrong{{{1, 2}}};
  CHECK_THROWS_AS(count_tensions(path_graph(1), 2, {1}, wrong), input_error);
  // Budget: potentials grow as m^(vertex count).
  CHECK_THROWS_AS(count_tensions(Multigraph(8, {}), 100, {0}, canonical_orientation(Multigraph(8, {})), 1000),
                  budget_error);
}
