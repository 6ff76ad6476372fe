#pragma once

#include <cstddef>
#include <vector>

#include "homat/multigraph.hpp"
#include "homat/rational.hpp"
#include "homat/weighted_graph.hpp"

namespace homat {

// Weighted homomorphism count:
//   hom(F, G) = Σ_{φ: V(F) -> [n]}  Π_v a_{φ(v)}  Π_{uv ∈ E(F)} B_{φ(u)φ(v)}
// with parallel edges and loops contributing one B factor each. An empty
// target (n = 0) admits no map unless F has no vertices.
Rational hom(const Multigraph& f, const WeightedGraph& g);

// hom with some vertices pinned to fixed images. Pinned vertices do not
// contribute their a-weight; edges incident to them still count. `pinned`
// and `images` are parallel, pinned vertex ids distinct.
Rational hom_pinned(const Multigraph& f, const WeightedGraph& g,
                    const std::vector<int>& pinned, const std::vector<int>& images);

inline constexpr std::size_t kDefaultHomTableEntries = std::size_t{1} << 20;

// Same value as hom(), by eliminating vertices one at a time (min-degree
// order) with product/sum tables. Falls back to the direct sum if any
// intermediate table would exceed `max_table_entries`.
Rational hom_fast(const Multigraph& f, const WeightedGraph& g,
                  std::size_t max_table_entries = kDefaultHomTableEntries);

// Normalized count h(F, G) = hom(F, G) / (Σ_i a_i)^{c(F)} where c(F) counts
// connected components. Throws input_error when Σ a_i = 0.
Rational h(const Multigraph& f, const WeightedGraph& g);

}  // namespace homat
