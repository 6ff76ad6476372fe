#pragma once

#include <cstddef>
#include <vector>

#include "homat/automorphism.hpp"
#include "homat/multigraph.hpp"
#include "homat/rational.hpp"
#include "homat/weighted_graph.hpp"

namespace homat {

// Dense rank-k tensor over [n]^k. Entry for φ: [k] -> [n] sits at the
// mixed-radix index φ(0)·n^{k-1} + φ(1)·n^{k-2} + … + φ(k-1).
struct HomTensor {
  int k = 0;
  int n = 0;
  std::vector<Rational> entries;  // length n^k (1 when k = 0)

  std::size_t index_of(const std::vector<int>& phi) const;
  std::vector<int> phi_at(std::size_t index) const;

  bool operator==(const HomTensor& other) const = default;
};

inline constexpr std::size_t kDefaultTensorEntries = std::size_t{1} << 24;

// The tensor whose entry at φ sums, over all extensions ψ: V(F) -> [n] with
// ψ(label i) = φ(i), the product of a-weights of the free vertices and one
// B-factor per edge. Labelled vertices carry no a-weight.
HomTensor hom_tensor(const LabeledGraph& f, const WeightedGraph& g,
                     std::size_t max_entries = kDefaultTensorEntries);

// Plain dot product. Equals hom(glue(F1, F2), G) when all vertex weights
// are 1; for general weights use pairing_a.
Rational pairing(const HomTensor& t1, const HomTensor& t2);

// Dot product with the label weights restored:
//   Σ_φ a_{φ(0)}···a_{φ(k-1)} t1[φ] t2[φ] = hom(glue(F1, F2), G).
Rational pairing_a(const HomTensor& t1, const HomTensor& t2, const WeightedGraph& g);

// Projection onto the Γ-invariant subspace: entrywise average of t over the
// group's coordinate permutations. Idempotent; fixes invariant tensors.
HomTensor group_average(const HomTensor& t, const AutomorphismGroup& group);

// Rank over the rationals of the span of hom_tensor(F, G) for F in the
// corpus, by exact elimination. Requires twin-free G (theorem hypothesis).
long long invariant_rank(const WeightedGraph& g, int k, const std::vector<LabeledGraph>& corpus);

// Same, over the exhaustive corpus of k-labelled graphs with at most
// k+2 vertices and k+3 edges.
long long invariant_rank(const WeightedGraph& g, int k);

// The default corpus bounds used above.
int invariant_rank_default_vertices(int k);
int invariant_rank_default_edges(int k);

}  // namespace homat
