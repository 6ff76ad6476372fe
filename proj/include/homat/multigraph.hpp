#pragma once

#include <string>
#include <utility>
#include <vector>

namespace homat {

// Unordered vertex pair; loops have u == v. Stored endpoints keep the
// order they were given, comparisons normalize.
struct Edge {
  int u = 0;
  int v = 0;

  std::pair<int, int> normalized() const {
    return u <= v ? std::pair<int, int>{u, v} : std::pair<int, int>{v, u};
  }
  bool is_loop() const { return u == v; }
};

bool operator==(const Edge& a, const Edge& b);

// Finite multigraph: loops and parallel edges allowed, parallel edges
// appear as repeated entries. Edge indices are 0..|E|-1 and stable; all
// instances are immutable after construction.
class Multigraph {
public:
  Multigraph() = default;
  Multigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const;

  Multigraph disjoint_union(const Multigraph& other) const;

  // Multiset equality of edges on the same vertex set (not isomorphism).
  bool same_as(const Multigraph& other) const;

  std::string describe() const;  // e.g. "4v 3e [0-1 1-2 2-0]"

private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

struct ComponentInfo {
  int count = 0;
  std::vector<int> assignment;  // vertex -> component id, ids dense from 0
};

ComponentInfo components(const Multigraph& f);
int component_count(const Multigraph& f);

// Rank of the spanning subgraph (V(F), A): |V(F)| - c(V(F), A).
int rank(const Multigraph& f, const std::vector<int>& edge_subset);
int rank(const Multigraph& f);  // rank of the full edge set

// A multigraph with k distinct labelled vertices; labels()[i] is the vertex
// carrying label i+1.
class LabeledGraph {
public:
  LabeledGraph() = default;
  LabeledGraph(Multigraph graph, std::vector<int> labels);

  const Multigraph& graph() const { return graph_; }
  const std::vector<int>& labels() const { return labels_; }
  int k() const { return static_cast<int>(labels_.size()); }

private:
  Multigraph graph_;
  std::vector<int> labels_;
};

// Gluing product: disjoint union with equally-labelled vertices identified.
// Vertices of a keep their ids; unlabelled vertices of b follow. Edges of a
// come first, then edges of b, so the edge correspondence between glue
// results is positional. Throws on arity mismatch.
LabeledGraph glue(const LabeledGraph& a, const LabeledGraph& b);

// Switches the two labels of a 2-labelled graph. Involution.
LabeledGraph transpose(const LabeledGraph& f);

// The two underlying graphs of glue(a, b) and glue(transpose(a), b); their
// cycle matroids are isomorphic under the positional edge bijection.
std::pair<Multigraph, Multigraph> whitney_flip(const LabeledGraph& a, const LabeledGraph& b);

// Gluing at a single shared label (both arguments 1-labelled).
Multigraph identify_vertices(const LabeledGraph& a, const LabeledGraph& b);

// Inverse of identify_vertices: partitions the edges into two parts meeting
// only at cut_vertex. Part one is the edge-group containing the lowest edge
// index, part two the rest; within a part edges keep their relative order.
// Isolated vertices other than cut_vertex go to part two. Throws input_error
// when no valid edge bipartition exists at cut_vertex.
std::pair<Multigraph, Multigraph> split_at_cut(const Multigraph& f, int cut_vertex);

// Groups of edges that remain connected to each other when only the given
// vertices are cut. Helper shared by split_at_cut and the pair generator.
std::vector<std::vector<int>> edge_groups_at(const Multigraph& f, const std::vector<int>& cut);

}  // namespace homat
