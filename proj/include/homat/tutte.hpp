#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "homat/multigraph.hpp"
#include "homat/polynomial.hpp"
#include "homat/rational.hpp"
#include "homat/weighted_graph.hpp"

namespace homat {

// A (tail, head) choice per edge index; loops keep tail = head.
struct Orientation {
  std::vector<std::pair<int, int>> arcs;
};

// Tail is the smaller endpoint of each edge.
Orientation canonical_orientation(const Multigraph& f);
// Flips every non-loop arc; used to test orientation independence.
Orientation reversed_orientation(const Orientation& orient);

inline constexpr int kTutteSubsetEdgeBound = 20;
inline constexpr std::size_t kDefaultTutteNodes = std::size_t{1} << 22;

// Subset expansion Σ_{A⊆E} (x−1)^{r(E)−r(A)} (y−1)^{|A|−r(A)}.
BivariatePoly tutte_subset(const Multigraph& f);

// Deletion-contraction recursion with loop/bridge base cases; `max_nodes`
// bounds the recursion tree.
BivariatePoly tutte_delcon(const Multigraph& f, std::size_t max_nodes = kDefaultTutteNodes);

// Subset expansion when it fits the edge bound, deletion-contraction beyond.
BivariatePoly tutte(const Multigraph& f);

// χ(F; n) = (−1)^{r(F)} n^{c(F)} T(F; 1−n, 0).
Rational chromatic_value(const Multigraph& f, long n);

inline constexpr std::size_t kDefaultEnumerationBudget = std::size_t{1} << 26;

// Brute-force oracle: maps V -> [n] with no edge monochromatic.
Integer count_proper_colorings(const Multigraph& f, long n,
                               std::size_t max_maps = kDefaultEnumerationBudget);

// φ(F; n) = (−1)^{|E|−r(F)} T(F; 0, 1−n).
Rational flow_value(const Multigraph& f, long n);

// Brute-force oracle: assignments E -> Z_n∖{0} with zero net flow at every
// vertex under the orientation. The count does not depend on the orientation.
Integer count_nz_flows(const Multigraph& f, long n, const Orientation& orient,
                       std::size_t max_assignments = kDefaultEnumerationBudget);
Integer count_nz_flows(const Multigraph& f, long n);

// Both sides of hom(F, G(1, (y−1)I + J)) = n^{c(F)} (y−1)^{r(F)} T(F; (y−1+n)/(y−1), y),
// evaluated exactly with G = tutte_target(n, y). Requires y ≠ 1.
struct TutteHomReport {
  Rational hom_side;
  Rational tutte_side;
  bool equal = false;
};
TutteHomReport verify_tutte_hom_identity(const Multigraph& f, long n, const Rational& y);

}  // namespace homat
