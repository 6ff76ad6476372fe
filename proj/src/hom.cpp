#include "homat/hom.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <string>

#include "homat/errors.hpp"

namespace homat {
namespace {

// Edge factors attached to the free vertex assigned last, grouped by
// multiplicity so parallel edges cost one power instead of many factors.
struct BackEdge {
  int other;         // already-assigned vertex (pinned or earlier free)
  int multiplicity;
};

struct FreeVertexPlan {
  int vertex = -1;
  int loop_count = 0;
  std::vector<BackEdge> back;
};

Rational b_power(const WeightedGraph& g, int i, int j, int multiplicity) {
  Rational f = g.b(i, j);
  if (multiplicity == 1) return f;
  return rational_pow(f, multiplicity);
}

void sum_maps(const WeightedGraph& g, const std::vector<FreeVertexPlan>& plan,
              std::vector<int>& assigned, std::size_t depth, const Rational& partial,
              Rational& total) {
  if (depth == plan.size()) {
    total += partial;
    return;
  }
  const FreeVertexPlan& p = plan[depth];
  for (int image = 0; image < g.n(); ++image) {
    Rational factor = g.a(image);
    if (p.loop_count > 0) factor *= b_power(g, image, image, p.loop_count);
    for (const BackEdge& e : p.back) {
      if (factor == 0) break;
      factor *= b_power(g, image, assigned[e.other], e.multiplicity);
    }
    if (factor == 0) continue;  // every extension of a zero product is zero
    assigned[p.vertex] = image;
    sum_maps(g, plan, assigned, depth + 1, partial * factor, total);
  }
  assigned[p.vertex] = -1;
}

// --- vertex elimination ---------------------------------------------------

// A function of some F-vertices into rationals; `table` is indexed in mixed
// radix base n, big-endian over the sorted scope.
struct Factor {
  std::vector<int> scope;
  std::vector<Rational> table;
};

std::size_t table_size_checked(std::size_t vars, int n, std::size_t cap) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    size *= static_cast<std::size_t>(n);
    if (size > cap) return 0;  // 0 signals "over budget"
  }
  return size;
}

// Multiply the given factors into one table over the union scope, then sum
// out `victim`. Returns the reduced factor.
Factor eliminate(const std::vector<Factor>& parts, int victim, int n) {
  std::set<int> scope_set;
  for (const Factor& f : parts) scope_set.insert(f.scope.begin(), f.scope.end());
  assert(scope_set.count(victim));
  std::vector<int> scope(scope_set.begin(), scope_set.end());
  const std::size_t s = scope.size();

  std::vector<std::vector<std::size_t>> positions(parts.size());
  for (std::size_t fi = 0; fi < parts.size(); ++fi) {
    for (int v : parts[fi].scope) {
      auto it = std::lower_bound(scope.begin(), scope.end(), v);
      positions[fi].push_back(static_cast<std::size_t>(it - scope.begin()));
    }
  }
  const std::size_t victim_pos = static_cast<std::size_t>(
      std::lower_bound(scope.begin(), scope.end(), victim) - scope.begin());

  Factor out;
  out.scope.reserve(s - 1);
  for (int v : scope) {
    if (v != victim) out.scope.push_back(v);
  }
  std::size_t out_size = 1;
  for (std::size_t i = 0; i + 1 < s; ++i) out_size *= static_cast<std::size_t>(n);
  out.table.assign(out_size, Rational(0));

  std::vector<int> point(s, 0);
  while (true) {
    Rational value = 1;
    for (std::size_t fi = 0; fi < parts.size(); ++fi) {
      std::size_t idx = 0;
      for (std::size_t pos : positions[fi]) idx = idx * n + point[pos];
      value *= parts[fi].table[idx];
      if (value == 0) break;
    }
    if (value != 0) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < s; ++i) {
        if (i != victim_pos) idx = idx * n + point[i];
      }
      out.table[idx] += value;
    }
    std::size_t i = s;
    while (i > 0 && point[i - 1] == n - 1) point[--i] = 0;
    if (i == 0) break;
    ++point[i - 1];
  }
  return out;
}

}  // namespace

Rational hom_pinned(const Multigraph& f, const WeightedGraph& g,
                    const std::vector<int>& pinned, const std::vector<int>& images) {
  if (pinned.size() != images.size()) {
    throw input_error("hom_pinned: pinned and images differ in length");
  }
  const int nf = f.vertex_count();
  std::vector<int> assigned(nf, -1);
  for (std::size_t i = 0; i < pinned.size(); ++i) {
    int v = pinned[i];
    if (v < 0 || v >= nf) throw input_error("hom_pinned: pinned vertex out of range");
    if (assigned[v] != -1) throw input_error("hom_pinned: vertex pinned twice");
    if (images[i] < 0 || images[i] >= g.n()) {
      throw input_error("hom_pinned: image out of range");
    }
    assigned[v] = images[i];
  }

  std::vector<FreeVertexPlan> plan;
  std::vector<int> order(nf, -1);  // free vertex -> plan position
  for (int v = 0; v < nf; ++v) {
    if (assigned[v] != -1) continue;
    order[v] = static_cast<int>(plan.size());
    plan.push_back({v, 0, {}});
  }
  if (g.n() == 0) return plan.empty() ? Rational(1) : Rational(0);

  // Group parallel edges, then attach each bundle to the endpoint assigned
  // later; bundles between two pinned vertices fold into the constant.
  std::map<std::pair<int, int>, int> bundles;
  for (const Edge& e : f.edges()) {
    auto [u, v] = e.normalized();
    ++bundles[{u, v}];
  }
  Rational base = 1;
  for (const auto& [ends, mult] : bundles) {
    auto [u, v] = ends;
    if (u == v) {
      if (order[u] == -1) {
        base *= b_power(g, assigned[u], assigned[u], mult);
      } else {
        plan[order[u]].loop_count += mult;
      }
      continue;
    }
    int later = -1, other = -1;
    if (order[u] == -1 && order[v] == -1) {
      base *= b_power(g, assigned[u], assigned[v], mult);
      continue;
    }
    if (order[u] == -1 || (order[v] != -1 && order[v] > order[u])) {
      later = v;
      other = u;
    } else {
      later = u;
      other = v;
    }
    plan[order[later]].back.push_back({other, mult});
  }
  if (base == 0) return 0;

  Rational total = 0;
  sum_maps(g, plan, assigned, 0, base, total);
  return total;
}

Rational hom(const Multigraph& f, const WeightedGraph& g) {
  return hom_pinned(f, g, {}, {});
}

Rational hom_fast(const Multigraph& f, const WeightedGraph& g, std::size_t max_table_entries) {
  const int nf = f.vertex_count();
  const int n = g.n();
  if (n == 0 || nf == 0) return hom(f, g);

  std::vector<Factor> factors;
  std::vector<int> loop_mult(nf, 0);
  std::map<std::pair<int, int>, int> bundles;
  for (const Edge& e : f.edges()) {
    auto [u, v] = e.normalized();
    if (u == v) {
      ++loop_mult[u];
    } else {
      ++bundles[{u, v}];
    }
  }
  for (int v = 0; v < nf; ++v) {
    Factor unary;
    unary.scope = {v};
    unary.table.reserve(n);
    for (int i = 0; i < n; ++i) {
      Rational value = g.a(i);
      if (loop_mult[v] > 0) value *= b_power(g, i, i, loop_mult[v]);
      unary.table.push_back(std::move(value));
    }
    factors.push_back(std::move(unary));
  }
  for (const auto& [ends, mult] : bundles) {
    auto [u, v] = ends;
    Factor pair;
    pair.scope = {u, v};
    pair.table.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) pair.table.push_back(b_power(g, i, j, mult));
    }
    factors.push_back(std::move(pair));
  }

  // Neighbor sets of the factor graph drive the min-degree order.
  std::vector<std::set<int>> nbr(nf);
  for (const auto& [ends, mult] : bundles) {
    nbr[ends.first].insert(ends.second);
    nbr[ends.second].insert(ends.first);
  }
  std::vector<bool> gone(nf, false);
  for (int step = 0; step < nf; ++step) {
    int victim = -1;
    for (int v = 0; v < nf; ++v) {
      if (gone[v]) continue;
      if (victim == -1 || nbr[v].size() < nbr[victim].size()) victim = v;
    }

    std::vector<Factor> parts;
    std::vector<Factor> rest;
    std::set<int> joined_scope;
    for (Factor& fac : factors) {
      if (std::binary_search(fac.scope.begin(), fac.scope.end(), victim)) {
        joined_scope.insert(fac.scope.begin(), fac.scope.end());
        parts.push_back(std::move(fac));
      } else {
        rest.push_back(std::move(fac));
      }
    }
    if (table_size_checked(joined_scope.size(), n, max_table_entries) == 0) {
      return hom(f, g);  // projected join table over budget
    }
    rest.push_back(eliminate(parts, victim, n));
    factors = std::move(rest);

    gone[victim] = true;
    for (int u : nbr[victim]) nbr[u].erase(victim);
    for (int u : nbr[victim]) {
      for (int w : nbr[victim]) {
        if (u != w) nbr[u].insert(w);
      }
    }
    nbr[victim].clear();
  }

  Rational total = 1;
  for (const Factor& fac : factors) {
    assert(fac.scope.empty() && fac.table.size() == 1);
    total *= fac.table[0];
  }
  return total;
}

Rational h(const Multigraph& f, const WeightedGraph& g) {
  Rational sum = g.weight_sum();
  if (sum == 0) throw input_error("h: sum of vertex weights is zero");
  return hom(f, g) / rational_pow(sum, component_count(f));
}

}  // namespace homat
