#include "homat/automorphism.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "homat/errors.hpp"
#include "homat/rational.hpp"

namespace homat {
namespace {

bool is_bijection(const std::vector<int>& images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool preserves_weights(const WeightedGraph& g, const std::vector<int>& images) {
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    if (g.a(i) != g.a(images[i])) return false;
    for (int j = i; j < n; ++j) {
      if (g.b(i, j) != g.b(images[i], images[j])) return false;
    }
  }
  return true;
}

void search(const WeightedGraph& g, std::vector<int>& images, std::vector<bool>& used,
            int next, std::vector<Permutation>& out) {
  const int n = g.n();
  if (next == n) {
    out.emplace_back(images);
    return;
  }
  for (int target = 0; target < n; ++target) {
    if (used[target]) continue;
    if (g.a(next) != g.a(target)) continue;
    if (g.b(next, next) != g.b(target, target)) continue;
    bool ok = true;
    for (int prev = 0; prev < next; ++prev) {
      if (g.b(next, prev) != g.b(target, images[prev])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    images[next] = target;
    used[target] = true;
    search(g, images, used, next + 1, out);
    used[target] = false;
  }
}

void check_bound(const WeightedGraph& g, int max_n, const char* what) {
  if (g.n() > max_n) {
    throw budget_error(std::string(what) + ": target has " + std::to_string(g.n()) +
                       " vertices, bound is " + std::to_string(max_n));
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) throw input_error("permutation images are not a bijection");
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& then) const {
  assert(degree() == then.degree());
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) images[i] = then(images_[i]);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) images[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(images));
}

int Permutation::fixed_point_count() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == static_cast<int>(i)) ++count;
  }
  return count;
}

AutomorphismGroup automorphisms(const WeightedGraph& g, int max_n) {
  check_bound(g, max_n, "automorphisms");
  AutomorphismGroup group;
  group.degree = g.n();
  std::vector<int> images(g.n(), -1);
  std::vector<bool> used(g.n(), false);
  search(g, images, used, 0, group.elements);
  std::sort(group.elements.begin(), group.elements.end());

  // The search yields exactly the weight-preserving bijections, so the group
  // axioms hold by construction; assert the cheap ones anyway.
  assert(!group.elements.empty());
  assert(group.elements.front() == Permutation::identity(g.n()) || g.n() == 0);
  if (group.order() <= 200) assert(verify_group(group));
  return group;
}

AutomorphismGroup automorphisms_bruteforce(const WeightedGraph& g, int max_n) {
  check_bound(g, max_n, "automorphisms_bruteforce");
  AutomorphismGroup group;
  group.degree = g.n();
  std::vector<int> images(g.n());
  std::iota(images.begin(), images.end(), 0);
  do {
    if (preserves_weights(g, images)) group.elements.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return group;  // next_permutation order is already sorted
}

bool verify_group(const AutomorphismGroup& group) {
  const auto& els = group.elements;
  if (els.empty()) return false;
  auto contains = [&els](const Permutation& p) {
    return std::binary_search(els.begin(), els.end(), p);
  };
  if (!contains(Permutation::identity(group.degree))) return false;
  for (const Permutation& p : els) {
    if (p.degree() != group.degree) return false;
    if (!contains(p.inverse())) return false;
    for (const Permutation& q : els) {
      if (!contains(p.compose(q))) return false;
    }
  }
  return true;
}

bool is_transitive(const AutomorphismGroup& group) {
  if (group.degree == 0) return true;
  auto orbits = vertex_orbits(group);
  return orbits.size() == 1;
}

bool is_generously_transitive(const AutomorphismGroup& group) {
  const int n = group.degree;
  std::vector<std::vector<bool>> swapped(n, std::vector<bool>(n, false));
  for (const Permutation& p : group.elements) {
    for (int u = 0; u < n; ++u) {
      int v = p(u);
      if (p(v) == u) swapped[u][v] = true;
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (!swapped[u][v]) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> vertex_orbits(const AutomorphismGroup& group) {
  const int n = group.degree;
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < n; ++start) {
    if (owner[start] != -1) continue;
    // Single sweep suffices: the element list is the whole group.
    std::vector<int> orbit;
    for (const Permutation& p : group.elements) {
      int v = p(start);
      if (owner[v] == -1) {
        owner[v] = static_cast<int>(orbits.size());
        orbit.push_back(v);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

long long orbit_count(const AutomorphismGroup& group, int k) {
  if (k < 0) throw input_error("orbit_count: k must be nonnegative");
  Integer total = 0;
  for (const Permutation& p : group.elements) {
    total += integer_pow(p.fixed_point_count(), static_cast<unsigned long>(k));
  }
  Integer order(static_cast<unsigned long>(group.order()));
  assert(total % order == 0);  // Burnside: the average is an integer
  Integer result = total / order;
  assert(result.fits_slong_p());
  return result.get_si();
}

long long orbit_count(const WeightedGraph& g, int k) {
  return orbit_count(automorphisms(g), k);
}

}  // namespace homat
