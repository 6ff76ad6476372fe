#pragma once

#include <vector>

#include "homat/multigraph.hpp"
#include "homat/weighted_graph.hpp"

namespace homat::testing {

inline Multigraph path_graph(int edges) {
  std::vector<Edge> es;
  for (int i = 0; i < edges; ++i) es.push_back({i, i + 1});
  return Multigraph(edges + 1, std::move(es));
}

inline Multigraph cycle_graph(int length) {
  std::vector<Edge> es;
  for (int i = 0; i < length; ++i) es.push_back({i, (i + 1) % length});
  return Multigraph(length, std::move(es));
}

inline Multigraph star_graph(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
  return Multigraph(leaves + 1, std::move(es));
}

inline Multigraph triangle() { return cycle_graph(3); }

inline Multigraph complete_multigraph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  }
  return Multigraph(n, std::move(es));
}

// Path on three vertices as a weighted target (a = 1, adjacency weights).
inline WeightedGraph p3_target() { return from_simple_graph(path_graph(2)); }

// Its twin reduction: classes {0,2} and {1}.
inline WeightedGraph p3_reduced() {
  return WeightedGraph({Rational(2), Rational(1)},
                       {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
}

// A target with rational edge weights and non-uniform vertex weights.
inline WeightedGraph rational_target() {
  return WeightedGraph({Rational(1), Rational(2)},
                       {{Rational(1, 2), Rational(-1)}, {Rational(-1), Rational(3)}});
}

// Weighted Cayley graph of the symmetric group on three points: vertices are
// the six group elements, b(g, h) a function of g^{-1}h that respects
// inversion but not conjugacy (the three transpositions get weights 1, 2, 3,
// the rotations weight 5). Its automorphism group is the left-regular action:
// transitive, yet no automorphism swaps two vertices whose quotient has
// order three, so it is not generously transitive.
inline WeightedGraph s3_cayley_target() {
  return WeightedGraph(
      std::vector<Rational>(6, Rational(1)),
      {{Rational(0), Rational(5), Rational(5), Rational(1), Rational(2), Rational(3)},
       {Rational(5), Rational(0), Rational(5), Rational(2), Rational(3), Rational(1)},
       {Rational(5), Rational(5), Rational(0), Rational(3), Rational(1), Rational(2)},
       {Rational(1), Rational(2), Rational(3), Rational(0), Rational(5), Rational(5)},
       {Rational(2), Rational(3), Rational(1), Rational(5), Rational(0), Rational(5)},
       {Rational(3), Rational(1), Rational(2), Rational(5), Rational(5), Rational(0)}});
}

}  // namespace homat::testing
