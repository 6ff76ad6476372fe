#include "homat/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "homat/errors.hpp"

namespace homat {

namespace {

constexpr int kCanonicalVertexBound = 8;

std::vector<std::pair<int, int>> permuted_sorted_edges(const Multigraph& f,
                                                       const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(f.edge_count());
  for (const Edge& e : f.edges()) {
    int u = perm[e.u], v = perm[e.v];
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// All unordered pairs (u <= v) on n vertices, loops included, in
// lexicographic order; the edge-multiset enumeration walks these slots.
std::vector<std::pair<int, int>> pair_slots(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) slots.emplace_back(u, v);
  return slots;
}

// Emits every nondecreasing index sequence of length exactly `count` over
// `slots`, appending the resulting multigraph.
void emit_multisets(int vertex_count, const std::vector<std::pair<int, int>>& slots, int count,
                    std::vector<Multigraph>& out) {
  std::vector<int> pick(count, 0);
  if (count == 0) {
    out.emplace_back(vertex_count, std::vector<Edge>{});
    return;
  }
  while (true) {
    std::vector<Edge> edges;
    edges.reserve(count);
    for (int i : pick) edges.push_back({slots[i].first, slots[i].second});
    out.emplace_back(vertex_count, std::move(edges));
    // next nondecreasing sequence
    int pos = count - 1;
    while (pos >= 0 && pick[pos] == static_cast<int>(slots.size()) - 1) --pos;
    if (pos < 0) break;
    int next = pick[pos] + 1;
    for (int i = pos; i < count; ++i) pick[i] = next;
  }
}

}  // namespace

CanonicalKey canonical_key(const Multigraph& f) {
  const int n = f.vertex_count();
  if (n > kCanonicalVertexBound)
    throw budget_error("canonical_key: " + std::to_string(n) + " vertices exceeds bound " +
                       std::to_string(kCanonicalVertexBound));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalKey best{n, permuted_sorted_edges(f, perm)};
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto edges = permuted_sorted_edges(f, perm);
    if (edges < best.edges) best.edges = std::move(edges);
  }
  return best;
}

LabeledGraph normalize_labels(const LabeledGraph& f) {
  const int n = f.graph().vertex_count();
  const int k = f.k();
  std::vector<int> map(n, -1);
  for (int i = 0; i < k; ++i) map[f.labels()[i]] = i;
  int next = k;
  for (int v = 0; v < n; ++v)
    if (map[v] < 0) map[v] = next++;
  std::vector<Edge> edges;
  edges.reserve(f.graph().edge_count());
  for (const Edge& e : f.graph().edges()) edges.push_back({map[e.u], map[e.v]});
  std::vector<int> labels(k);
  std::iota(labels.begin(), labels.end(), 0);
  return LabeledGraph(Multigraph(n, std::move(edges)), std::move(labels));
}

CanonicalKey canonical_key_labeled(const LabeledGraph& f) {
  LabeledGraph g = normalize_labels(f);
  const int n = g.graph().vertex_count();
  const int k = g.k();
  if (n > kCanonicalVertexBound)
    throw budget_error("canonical_key_labeled: too many vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalKey best{n, permuted_sorted_edges(g.graph(), perm)};
  // Permute only the unlabelled tail; labels stay pinned on 0..k-1.
  while (std::next_permutation(perm.begin() + k, perm.end())) {
    auto edges = permuted_sorted_edges(g.graph(), perm);
    if (edges < best.edges) best.edges = std::move(edges);
  }
  return best;
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_key(a) == canonical_key(b);
}

bool isomorphic_labeled(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.k() != b.k()) return false;
  if (a.graph().vertex_count() != b.graph().vertex_count() ||
      a.graph().edge_count() != b.graph().edge_count())
    return false;
  return canonical_key_labeled(a) == canonical_key_labeled(b);
}

std::vector<Multigraph> enumerate_multigraphs(int max_vertices, int max_edges, bool dedup) {
  std::vector<Multigraph> raw;
  for (int n = 0; n <= max_vertices; ++n) {
    auto slots = pair_slots(n);
    for (int e = 0; e <= max_edges; ++e) {
      if (e > 0 && slots.empty()) break;
      emit_multisets(n, slots, e, raw);
    }
  }
  if (!dedup || max_vertices > 6) return raw;
  std::vector<Multigraph> out;
  std::set<CanonicalKey> seen;
  for (Multigraph& g : raw)
    if (seen.insert(canonical_key(g)).second) out.push_back(std::move(g));
  return out;
}

std::vector<LabeledGraph> enumerate_labeled(int k, int max_vertices, int max_edges, bool dedup) {
  if (k < 0) throw input_error("enumerate_labeled: negative k");
  std::vector<LabeledGraph> out;
  std::set<CanonicalKey> seen;
  for (const Multigraph& g : enumerate_multigraphs(max_vertices, max_edges, dedup)) {
    const int n = g.vertex_count();
    if (n < k) continue;
    // All injective label placements, in lexicographic order of the tuple.
    std::vector<int> labels(k, 0);
    auto place = [&](auto&& self, int depth) -> void {
      if (depth == k) {
        LabeledGraph lg(g, labels);
        if (dedup && n <= 6) {
          if (!seen.insert(canonical_key_labeled(lg)).second) return;
        }
        out.push_back(normalize_labels(lg));
        return;
      }
      for (int v = 0; v < n; ++v) {
        bool used = false;
        for (int i = 0; i < depth; ++i)
          if (labels[i] == v) used = true;
        if (used) continue;
        labels[depth] = v;
        self(self, depth + 1);
      }
    };
    place(place, 0);
  }
  return out;
}

std::vector<Multigraph> enumerate_simple_graphs(int max_vertices) {
  if (max_vertices > 6) throw budget_error("enumerate_simple_graphs: bound is 6 vertices");
  std::vector<Multigraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    auto slots = pair_slots(n);
    std::vector<std::pair<int, int>> nonloop;
    for (auto& s : slots)
      if (s.first != s.second) nonloop.push_back(s);
    const int m = static_cast<int>(nonloop.size());
    std::set<CanonicalKey> seen;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<Edge> edges;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) edges.push_back({nonloop[i].first, nonloop[i].second});
      Multigraph g(n, std::move(edges));
      if (seen.insert(canonical_key(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace homat
