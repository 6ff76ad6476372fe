#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homat/multigraph.hpp"
#include "homat/rational.hpp"
#include "homat/weighted_graph.hpp"

namespace homat {

// A pair of labelled corpus graphs violating a pairwise identity, with the
// two sides recomputed directly (not through the scan's algebra).
struct PairWitness {
  LabeledGraph f1;
  LabeledGraph f2;
  Rational lhs;
  Rational rhs;
};

// Outcome of scanning an identity over all unordered corpus pairs. The scan
// stops at the first violation; otherwise every pair is covered.
// consistent() states the biconditional: the identity holds everywhere
// exactly when the group property does. An inconclusive report means the
// property fails but no witness surfaced within the escalated corpus; it is
// reported distinctly, never counted as consistent.
struct PairScanReport {
  bool group_property = false;
  bool identity_everywhere = false;
  bool inconclusive = false;
  long long pairs_tested = 0;
  std::optional<PairWitness> witness;

  bool consistent() const {
    return !inconclusive && group_property == identity_everywhere;
  }
};

// Multiplicativity over one shared vertex: h(F1)h(F2) = h(F1·F2) for all
// 1-labelled F1, F2 iff the automorphism group is vertex-transitive.
// Witness lhs/rhs hold the two h-sides. Requires twin-free G and Σa ≠ 0.
// The default corpus is exhaustive 1-labelled graphs within (3 vertices,
// 4 edges), escalated once to (4, 6) when a required witness is missing.
PairScanReport check_multiplicativity(const WeightedGraph& g);
PairScanReport check_multiplicativity(const WeightedGraph& g,
                                      const std::vector<LabeledGraph>& corpus);

// Swap invariance at two shared vertices: hom(F1·F2) = hom(F1^T·F2) for all
// 2-labelled F1, F2 iff the group is generously transitive. Witness lhs/rhs
// hold the two hom-sides. Same hypotheses; default corpus (3, 3),
// escalated once to (4, 5).
PairScanReport check_flip_invariance(const WeightedGraph& g);
PairScanReport check_flip_invariance(const WeightedGraph& g,
                                     const std::vector<LabeledGraph>& corpus);

// Two multigraphs with isomorphic cycle matroids under the positional edge
// bijection (a composition of flips at two-vertex cuts, identifications of
// vertices in distinct components, and splits at cut vertices keeps every
// edge index in place, so the bijection is the identity).
struct TwoIsoPair {
  Multigraph first;
  Multigraph second;
  std::vector<int> edge_bijection;
  int operations = 0;
};

// Deterministic stream: `count` pairs, each built from a seeded random base
// graph within (max_vertices, max_edges) by up to four random operations.
std::vector<TwoIsoPair> generate_two_isomorphic_pairs(int count, int max_vertices,
                                                      int max_edges, unsigned long seed);

// A matroid-invariance witness: h differs between two multigraphs whose
// cycle matroids agree under edge_bijection.
struct WitnessPair {
  Multigraph first;
  Multigraph second;
  std::vector<int> edge_bijection;
  Rational h_first;
  Rational h_second;
};

struct InvarianceVerdict {
  std::string target;
  bool transitive = false;
  bool generously_transitive = false;
  long long pairs_tested = 0;
  std::optional<WitnessPair> witness;
  bool inconclusive = false;
  bool consistent = false;
};

inline constexpr int kDefaultGeneratedPairs = 200;
inline constexpr unsigned long kDefaultWitnessSeed = 20240817;

// Is h a cycle matroid invariant for this target? Requires unit vertex
// weights; twin-reduces first, then: a generously transitive group must
// show exact h-equality on `generated_pairs` generated 2-isomorphic pairs,
// anything else must yield a concrete witness pair — searched over
// 2-labelled corpora (4 vertices, 5 edges), escalated once to (5, 7).
InvarianceVerdict check_matroid_invariance(const WeightedGraph& g,
                                           int generated_pairs = kDefaultGeneratedPairs,
                                           unsigned long seed = kDefaultWitnessSeed);

// One survey row per simple graph. The group flags are computed on the raw
// graph and cross-checked against its twin reduction (they transfer);
// the scans run on the reduction, whose hypotheses always hold.
struct SurveyRow {
  int index = 0;
  Multigraph graph;
  bool transitive = false;
  bool generously_transitive = false;
  PairScanReport multiplicativity;
  PairScanReport flip_invariance;
  InvarianceVerdict matroid_invariance;
  bool consistent = false;
};

// Every simple graph with 1..max_vertices vertices (max 6), one row each;
// jobs > 1 computes rows concurrently, output order is fixed either way.
std::vector<SurveyRow> exhaustive_survey(int max_vertices, int jobs = 1);

}  // namespace homat
