#pragma once

#include <vector>

#include "homat/weighted_graph.hpp"

namespace homat {

// Bijection of {0..n-1}; images[i] is the image of i.
class Permutation {
public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& then) const;  // (then ∘ this)
  Permutation inverse() const;
  int fixed_point_count() const;

  bool operator==(const Permutation& other) const { return images_ == other.images_; }
  bool operator<(const Permutation& other) const { return images_ < other.images_; }

private:
  std::vector<int> images_;
};

// The complete element list of the weight-preserving vertex permutation
// group, sorted. Closed under composition and inverse, contains identity.
struct AutomorphismGroup {
  int degree = 0;
  std::vector<Permutation> elements;

  std::size_t order() const { return elements.size(); }
};

inline constexpr int kAutomorphismVertexBound = 10;

// Backtracking search over weight-compatible images. Every permutation with
// a_{γ(i)} = a_i and B_{γ(i),γ(j)} = B_{i,j} is listed. The group axioms are
// spot-checked on the result (identity, inverses; closure when small).
AutomorphismGroup automorphisms(const WeightedGraph& g, int max_n = kAutomorphismVertexBound);

// Plain n! scan; verification oracle for the backtracking search.
AutomorphismGroup automorphisms_bruteforce(const WeightedGraph& g, int max_n = 8);

// Full group-axiom check: identity, closure, inverses.
bool verify_group(const AutomorphismGroup& group);

bool is_transitive(const AutomorphismGroup& group);
// For every vertex pair (u, v) some element swaps them.
bool is_generously_transitive(const AutomorphismGroup& group);

// Vertex orbits, each sorted, ordered by smallest member.
std::vector<std::vector<int>> vertex_orbits(const AutomorphismGroup& group);

// Number of orbits of the group acting on functions [k] -> [n], by
// averaging fixed-point counts: (1/|Γ|) Σ_γ fix(γ)^k.
long long orbit_count(const WeightedGraph& g, int k);
long long orbit_count(const AutomorphismGroup& group, int k);

}  // namespace homat
