#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "homat/multigraph.hpp"

namespace homat {

inline constexpr int kCircuitEdgeBound = 12;
inline constexpr int kMatroidIsoEdgeBound = 8;

// All minimal dependent edge sets, each sorted, the list ordered by
// (size, lexicographic). Loops appear as size-1 circuits, parallel pairs as
// size-2 circuits. Throws budget_error above max_edges.
std::vector<std::vector<int>> circuits(const Multigraph& f, int max_edges = kCircuitEdgeBound);

// Brute-force search for an edge bijection mapping circuits onto circuits,
// pruned by the circuit-size multiset. Returns the first bijection in
// lexicographic order, or nullopt. Throws budget_error above max_edges.
std::optional<std::vector<int>> matroid_isomorphic(const Multigraph& f, const Multigraph& g,
                                                   int max_edges = kMatroidIsoEdgeBound);

// Checks that a specific edge bijection maps circuits onto circuits.
bool is_matroid_isomorphism(const Multigraph& f, const Multigraph& g,
                            const std::vector<int>& edge_bijection,
                            int max_edges = kCircuitEdgeBound);

// Read-only view of the cycle matroid M(F): ground set E(F), the rank
// oracle, and the circuit list (materialized only within the edge bound).
class CycleMatroidView {
public:
  explicit CycleMatroidView(Multigraph f, int circuit_edge_bound = kCircuitEdgeBound);

  int ground_size() const { return ground_size_; }
  int rank(const std::vector<int>& subset) const { return rank_(subset); }
  const std::optional<std::vector<std::vector<int>>>& circuits() const { return circuits_; }

private:
  int ground_size_;
  std::function<int(const std::vector<int>&)> rank_;
  std::optional<std::vector<std::vector<int>>> circuits_;
};

}  // namespace homat
