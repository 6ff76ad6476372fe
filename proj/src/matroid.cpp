#include "homat/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "homat/errors.hpp"

namespace homat {

namespace {

std::vector<int> mask_to_subset(unsigned mask, int m) {
  std::vector<int> subset;
  for (int i = 0; i < m; ++i)
    if (mask & (1u << i)) subset.push_back(i);
  return subset;
}

}  // namespace

std::vector<std::vector<int>> circuits(const Multigraph& f, int max_edges) {
  const int m = f.edge_count();
  if (m > max_edges)
    throw budget_error("circuits: " + std::to_string(m) + " edges exceeds bound " +
                       std::to_string(max_edges));
  std::vector<unsigned> circuit_masks;
  std::vector<std::vector<int>> out;
  // Scan subsets in increasing size; a minimal dependent set contains no
  // smaller circuit. rank(A) < |A| detects dependence.
  std::vector<unsigned> by_size;
  for (unsigned mask = 1; mask < (1u << m); ++mask) by_size.push_back(mask);
  std::stable_sort(by_size.begin(), by_size.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) < std::popcount(b);
  });
  for (unsigned mask : by_size) {
    bool contains_known = false;
    for (unsigned c : circuit_masks)
      if ((mask & c) == c) {
        contains_known = true;
        break;
      }
    if (contains_known) continue;
    std::vector<int> subset = mask_to_subset(mask, m);
    if (rank(f, subset) < static_cast<int>(subset.size())) {
      circuit_masks.push_back(mask);
      out.push_back(std::move(subset));
    }
  }
  return out;
}

std::optional<std::vector<int>> matroid_isomorphic(const Multigraph& f, const Multigraph& g,
                                                   int max_edges) {
  if (f.edge_count() != g.edge_count()) return std::nullopt;
  const int m = f.edge_count();
  if (m > max_edges)
    throw budget_error("matroid_isomorphic: " + std::to_string(m) + " edges exceeds bound " +
                       std::to_string(max_edges));

  auto cf = circuits(f, max_edges);
  auto cg = circuits(g, max_edges);
  if (cf.size() != cg.size()) return std::nullopt;
  auto size_multiset = [](const std::vector<std::vector<int>>& cs) {
    std::vector<std::size_t> sizes;
    for (const auto& c : cs) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (size_multiset(cf) != size_multiset(cg)) return std::nullopt;

  std::vector<unsigned> g_circuit_masks;
  for (const auto& c : cg) {
    unsigned mask = 0;
    for (int i : c) mask |= 1u << i;
    g_circuit_masks.push_back(mask);
  }
  std::sort(g_circuit_masks.begin(), g_circuit_masks.end());

  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& c : cf) {
      unsigned image = 0;
      for (int i : c) image |= 1u << perm[i];
      if (!std::binary_search(g_circuit_masks.begin(), g_circuit_masks.end(), image)) {
        ok = false;
        break;
      }
    }
    // Equal circuit counts make "into" imply "onto".
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool is_matroid_isomorphism(const Multigraph& f, const Multigraph& g,
                            const std::vector<int>& edge_bijection, int max_edges) {
  if (f.edge_count() != g.edge_count()) return false;
  if (static_cast<int>(edge_bijection.size()) != f.edge_count()) return false;
  auto cf = circuits(f, max_edges);
  auto cg = circuits(g, max_edges);
  if (cf.size() != cg.size()) return false;
  std::vector<std::vector<int>> mapped;
  for (const auto& c : cf) {
    std::vector<int> image;
    for (int i : c) image.push_back(edge_bijection[i]);
    std::sort(image.begin(), image.end());
    mapped.push_back(std::move(image));
  }
  std::sort(mapped.begin(), mapped.end());
  std::sort(cg.begin(), cg.end());
  return mapped == cg;
}

CycleMatroidView::CycleMatroidView(Multigraph f, int circuit_edge_bound)
    : ground_size_(f.edge_count()) {
  if (f.edge_count() <= circuit_edge_bound) circuits_ = homat::circuits(f, circuit_edge_bound);
  rank_ = [graph = std::move(f)](const std::vector<int>& subset) {
    return homat::rank(graph, subset);
  };
}

}  // namespace homat
