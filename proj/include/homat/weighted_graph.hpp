#pragma once

#include <string>
#include <vector>

#include "homat/multigraph.hpp"
#include "homat/rational.hpp"

namespace homat {

// Vertex- and edge-weighted target graph: n vertices, nonzero vertex
// weights a, symmetric edge-weight matrix B. Immutable. The only n = 0
// instance is the empty target that twin reduction may produce when every
// class weight cancels.
class WeightedGraph {
public:
  WeightedGraph(std::vector<Rational> a, std::vector<std::vector<Rational>> b);

  static WeightedGraph empty();

  int n() const { return n_; }
  const Rational& a(int i) const { return a_.at(i); }
  const Rational& b(int i, int j) const { return b_.at(i).at(j); }
  const std::vector<Rational>& a() const { return a_; }
  const std::vector<std::vector<Rational>>& b() const { return b_; }

  Rational weight_sum() const;

private:
  WeightedGraph() = default;

  int n_ = 0;
  std::vector<Rational> a_;
  std::vector<std::vector<Rational>> b_;
};

// a = 1, B the multiplicity-adjacency matrix (0/1 for simple graphs).
WeightedGraph from_simple_graph(const Multigraph& g);
WeightedGraph complete_graph(int n);
// a = 1, B = (y-1)I + J.
WeightedGraph tutte_target(int n, const Rational& y);
// Circulant target on Z_m with connection set s; requires s = -s (mod m).
WeightedGraph cayley_cyclic(int m, const std::vector<int>& s);

// Twin classes: i, j in the same class iff rows i and j of B are identical
// (vertex weights play no part). Classes listed by smallest member.
std::vector<std::vector<int>> twin_classes(const WeightedGraph& g);

bool is_twin_free(const WeightedGraph& g);

// One representative per twin class, its weight the class sum; classes with
// zero weight sum are dropped entirely. hom(F, G) is unchanged for every F.
WeightedGraph twin_reduce(const WeightedGraph& g);

std::string describe(const WeightedGraph& g);

}  // namespace homat
