#include "homat/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "homat/errors.hpp"

namespace homat {

namespace {

// Plain union-find over vertex ids.
class Dsu {
public:
  explicit Dsu(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

private:
  std::vector<int> parent_;
};

}  // namespace

bool operator==(const Edge& a, const Edge& b) { return a.normalized() == b.normalized(); }

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw input_error("vertex count must be nonnegative");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_) {
      throw input_error("edges[" + std::to_string(i) + "]=[" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + "]: vertex id out of range [0," +
                        std::to_string(vertex_count_) + ")");
    }
  }
}

const Edge& Multigraph::edge(int index) const {
  if (index < 0 || index >= edge_count())
    throw input_error("edge index " + std::to_string(index) + " out of range [0," +
                      std::to_string(edge_count()) + ")");
  return edges_[index];
}

Multigraph Multigraph::disjoint_union(const Multigraph& other) const {
  std::vector<Edge> edges = edges_;
  edges.reserve(edges_.size() + other.edges_.size());
  for (const Edge& e : other.edges_)
    edges.push_back({e.u + vertex_count_, e.v + vertex_count_});
  return Multigraph(vertex_count_ + other.vertex_count_, std::move(edges));
}

bool Multigraph::same_as(const Multigraph& other) const {
  if (vertex_count_ != other.vertex_count_ || edges_.size() != other.edges_.size()) return false;
  auto norm = [](const Multigraph& g) {
    std::vector<std::pair<int, int>> out;
    out.reserve(g.edges().size());
    for (const Edge& e : g.edges()) out.push_back(e.normalized());
    std::sort(out.begin(), out.end());
    return out;
  };
  return norm(*this) == norm(other);
}

std::string Multigraph::describe() const {
  std::ostringstream os;
  os << vertex_count_ << "v " << edges_.size() << "e [";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ' ';
    os << edges_[i].u << '-' << edges_[i].v;
  }
  os << ']';
  return os.str();
}

ComponentInfo components(const Multigraph& f) {
  Dsu dsu(f.vertex_count());
  for (const Edge& e : f.edges()) dsu.unite(e.u, e.v);
  ComponentInfo info;
  info.assignment.assign(f.vertex_count(), -1);
  for (int v = 0; v < f.vertex_count(); ++v) {
    int root = dsu.find(v);
    if (info.assignment[root] < 0) info.assignment[root] = info.count++;
    info.assignment[v] = info.assignment[root];
  }
  return info;
}

int component_count(const Multigraph& f) { return components(f).count; }

int rank(const Multigraph& f, const std::vector<int>& edge_subset) {
  Dsu dsu(f.vertex_count());
  int merges = 0;
  for (int index : edge_subset) {
    if (index < 0 || index >= f.edge_count())
      throw input_error("edge subset contains out-of-range index " + std::to_string(index));
    const Edge& e = f.edge(index);
    if (dsu.unite(e.u, e.v)) ++merges;
  }
  // |V| - c(V, A) counts exactly the component-merging edges.
  return merges;
}

int rank(const Multigraph& f) {
  std::vector<int> all(f.edge_count());
  std::iota(all.begin(), all.end(), 0);
  return rank(f, all);
}

LabeledGraph::LabeledGraph(Multigraph graph, std::vector<int> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
  std::vector<bool> seen(graph_.vertex_count(), false);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    int v = labels_[i];
    if (v < 0 || v >= graph_.vertex_count())
      throw input_error("labels[" + std::to_string(i) + "]=" + std::to_string(v) +
                        ": vertex id out of range [0," + std::to_string(graph_.vertex_count()) +
                        ")");
    if (seen[v])
      throw input_error("labels[" + std::to_string(i) + "]=" + std::to_string(v) +
                        ": labels must be pairwise distinct");
    seen[v] = true;
  }
}

LabeledGraph glue(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.k() != b.k())
    throw input_error("glue: arity mismatch (k=" + std::to_string(a.k()) + " vs k=" +
                      std::to_string(b.k()) + ")");
  const int na = a.graph().vertex_count();
  // Map b's vertices: labelled ones onto a's labelled vertices, the rest
  // appended after a's vertices in id order.
  std::vector<int> map_b(b.graph().vertex_count(), -1);
  for (int i = 0; i < b.k(); ++i) map_b[b.labels()[i]] = a.labels()[i];
  int next = na;
  for (int v = 0; v < b.graph().vertex_count(); ++v)
    if (map_b[v] < 0) map_b[v] = next++;

  std::vector<Edge> edges = a.graph().edges();
  edges.reserve(edges.size() + b.graph().edges().size());
  for (const Edge& e : b.graph().edges()) edges.push_back({map_b[e.u], map_b[e.v]});
  return LabeledGraph(Multigraph(next, std::move(edges)), a.labels());
}

LabeledGraph transpose(const LabeledGraph& f) {
  if (f.k() != 2) throw input_error("transpose requires a 2-labelled graph, got k=" +
                                    std::to_string(f.k()));
  return LabeledGraph(f.graph(), {f.labels()[1], f.labels()[0]});
}

std::pair<Multigraph, Multigraph> whitney_flip(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.k() != 2 || b.k() != 2)
    throw input_error("whitney_flip requires 2-labelled graphs");
  return {glue(a, b).graph(), glue(transpose(a), b).graph()};
}

Multigraph identify_vertices(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.k() != 1 || b.k() != 1)
    throw input_error("identify_vertices requires 1-labelled graphs");
  return glue(a, b).graph();
}

std::vector<std::vector<int>> edge_groups_at(const Multigraph& f, const std::vector<int>& cut) {
  std::vector<bool> is_cut(f.vertex_count(), false);
  for (int v : cut) {
    if (v < 0 || v >= f.vertex_count())
      throw input_error("cut vertex " + std::to_string(v) + " out of range");
    is_cut[v] = true;
  }
  // Edges sharing any non-cut vertex belong to the same group.
  Dsu dsu(f.edge_count());
  std::vector<int> touch(f.vertex_count(), -1);
  for (int i = 0; i < f.edge_count(); ++i) {
    for (int v : {f.edge(i).u, f.edge(i).v}) {
      if (is_cut[v]) continue;
      if (touch[v] >= 0)
        dsu.unite(touch[v], i);
      else
        touch[v] = i;
    }
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> group_of(f.edge_count(), -1);
  for (int i = 0; i < f.edge_count(); ++i) {
    int root = dsu.find(i);
    if (group_of[root] < 0) {
      group_of[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[group_of[root]].push_back(i);
  }
  return groups;
}

std::pair<Multigraph, Multigraph> split_at_cut(const Multigraph& f, int cut_vertex) {
  if (cut_vertex < 0 || cut_vertex >= f.vertex_count())
    throw input_error("split_at_cut: vertex " + std::to_string(cut_vertex) + " out of range");
  std::vector<std::vector<int>> groups = edge_groups_at(f, {cut_vertex});
  if (groups.size() < 2)
    throw input_error("split_at_cut: vertex " + std::to_string(cut_vertex) +
                      " does not separate the edge set");

  std::vector<bool> in_first(f.edge_count(), false);
  for (int i : groups[0]) in_first[i] = true;

  // Vertices touched by part-one edges stay with part one; everything else
  // (including isolated vertices) goes to part two. cut_vertex is in both.
  std::vector<bool> vertex_first(f.vertex_count(), false);
  for (int i = 0; i < f.edge_count(); ++i) {
    if (!in_first[i]) continue;
    vertex_first[f.edge(i).u] = true;
    vertex_first[f.edge(i).v] = true;
  }
  vertex_first[cut_vertex] = true;

  std::vector<int> map1(f.vertex_count(), -1), map2(f.vertex_count(), -1);
  int n1 = 0, n2 = 0;
  for (int v = 0; v < f.vertex_count(); ++v) {
    if (vertex_first[v]) map1[v] = n1++;
    if (!vertex_first[v] || v == cut_vertex) map2[v] = n2++;
  }
  std::vector<Edge> e1, e2;
  for (int i = 0; i < f.edge_count(); ++i) {
    const Edge& e = f.edge(i);
    if (in_first[i])
      e1.push_back({map1[e.u], map1[e.v]});
    else
      e2.push_back({map2[e.u], map2[e.v]});
  }
  return {Multigraph(n1, std::move(e1)), Multigraph(n2, std::move(e2))};
}

}  // namespace homat
