#pragma once

#include <vector>

#include "homat/multigraph.hpp"

namespace homat {

// Canonical key of a multigraph: vertex count plus the minimum, over all
// vertex permutations, of the sorted normalized edge list. Only intended
// for small graphs (vertex count <= 8, guarded).
struct CanonicalKey {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  auto operator<=>(const CanonicalKey&) const = default;
};

CanonicalKey canonical_key(const Multigraph& f);

// Canonical key with the first k vertices pinned (labelled graphs are
// normalized so that label i sits on vertex i before minimizing over
// permutations of the remaining vertices).
CanonicalKey canonical_key_labeled(const LabeledGraph& f);

bool isomorphic(const Multigraph& a, const Multigraph& b);
bool isomorphic_labeled(const LabeledGraph& a, const LabeledGraph& b);

// Relabels so that label i sits on vertex i, preserving the relative order
// of the unlabelled vertices and the edge order.
LabeledGraph normalize_labels(const LabeledGraph& f);

// Deterministic exhaustive streams. Every isomorphism class within bounds
// appears; with dedup (vertex counts <= 6) exactly one representative per
// class is kept, otherwise duplicates may appear. Cost grows as
// C(e + p - 1, e) summed over e <= max_edges with p pair slots per vertex
// count, times the |V|! canonicalization.
std::vector<Multigraph> enumerate_multigraphs(int max_vertices, int max_edges, bool dedup = true);
std::vector<LabeledGraph> enumerate_labeled(int k, int max_vertices, int max_edges,
                                            bool dedup = true);

// All simple graphs with 1..max_vertices vertices up to isomorphism,
// by adjacency-matrix enumeration with canonical dedup (max_vertices <= 6).
std::vector<Multigraph> enumerate_simple_graphs(int max_vertices);

}  // namespace homat
