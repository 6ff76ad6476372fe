#include "homat/tutte.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "homat/errors.hpp"
#include "homat/hom.hpp"

namespace homat {
namespace {

void check_enumeration_budget(double count, std::size_t cap, const char* what) {
  if (count > static_cast<double>(cap)) {
    throw budget_error(std::string(what) + ": enumeration exceeds the configured budget");
  }
}

// Deletion-contraction works on fresh copies; both operations drop one edge
// and contraction renumbers nothing but the removed vertex.
Multigraph delete_edge(const Multigraph& f, int index) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(f.edge_count()) - 1);
  for (int i = 0; i < f.edge_count(); ++i) {
    if (i != index) edges.push_back(f.edge(i));
  }
  return Multigraph(f.vertex_count(), std::move(edges));
}

Multigraph contract_edge(const Multigraph& f, int index) {
  auto [keep, gone] = f.edge(index).normalized();
  assert(keep != gone);
  auto map_vertex = [keep = keep, gone = gone](int w) {
    if (w == gone) return keep;
    return w > gone ? w - 1 : w;
  };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(f.edge_count()) - 1);
  for (int i = 0; i < f.edge_count(); ++i) {
    if (i == index) continue;
    edges.push_back({map_vertex(f.edge(i).u), map_vertex(f.edge(i).v)});
  }
  return Multigraph(f.vertex_count() - 1, std::move(edges));
}

bool is_bridge(const Multigraph& f, int index) {
  if (f.edge(index).is_loop()) return false;
  return component_count(delete_edge(f, index)) > component_count(f);
}

BivariatePoly delcon(const Multigraph& f, std::size_t& nodes_left) {
  if (nodes_left == 0) {
    throw budget_error("tutte_delcon: recursion budget exhausted");
  }
  --nodes_left;
  if (f.edge_count() == 0) return BivariatePoly::constant(1);
  const int e = 0;
  if (f.edge(e).is_loop()) {
    return BivariatePoly::monomial(0, 1, 1) * delcon(delete_edge(f, e), nodes_left);
  }
  if (is_bridge(f, e)) {
    return BivariatePoly::monomial(1, 0, 1) * delcon(delete_edge(f, e), nodes_left);
  }
  return delcon(delete_edge(f, e), nodes_left) + delcon(contract_edge(f, e), nodes_left);
}

}  // namespace

Orientation canonical_orientation(const Multigraph& f) {
  Orientation orient;
  orient.arcs.reserve(static_cast<std::size_t>(f.edge_count()));
  for (const Edge& e : f.edges()) orient.arcs.push_back(e.normalized());
  return orient;
}

Orientation reversed_orientation(const Orientation& orient) {
  Orientation out;
  out.arcs.reserve(orient.arcs.size());
  for (auto [tail, head] : orient.arcs) out.arcs.push_back({head, tail});
  return out;
}

BivariatePoly tutte_subset(const Multigraph& f) {
  const int m = f.edge_count();
  if (m > kTutteSubsetEdgeBound) {
    throw budget_error("tutte_subset: more than " + std::to_string(kTutteSubsetEdgeBound) +
                       " edges");
  }
  const int full_rank = rank(f);

  // Tally subsets by (corank, nullity); assemble the polynomial afterwards
  // so each power of (x−1) and (y−1) is expanded once.
  std::vector<std::vector<Integer>> tally(static_cast<std::size_t>(full_rank) + 1,
                                          std::vector<Integer>(static_cast<std::size_t>(m) + 1, 0));
  std::vector<int> subset;
  subset.reserve(static_cast<std::size_t>(m));
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    subset.clear();
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) subset.push_back(i);
    }
    int r = rank(f, subset);
    tally[static_cast<std::size_t>(full_rank - r)]
         [subset.size() - static_cast<std::size_t>(r)] += 1;
  }

  std::vector<BivariatePoly> xm1(static_cast<std::size_t>(full_rank) + 1);
  xm1[0] = BivariatePoly::constant(1);
  const BivariatePoly x_minus_1 =
      BivariatePoly::monomial(1, 0, 1) + BivariatePoly::constant(-1);
  for (std::size_t i = 1; i < xm1.size(); ++i) xm1[i] = xm1[i - 1] * x_minus_1;
  std::vector<BivariatePoly> ym1(static_cast<std::size_t>(m) + 1);
  ym1[0] = BivariatePoly::constant(1);
  const BivariatePoly y_minus_1 =
      BivariatePoly::monomial(0, 1, 1) + BivariatePoly::constant(-1);
  for (std::size_t j = 1; j < ym1.size(); ++j) ym1[j] = ym1[j - 1] * y_minus_1;

  BivariatePoly total;
  for (std::size_t i = 0; i < tally.size(); ++i) {
    for (std::size_t j = 0; j < tally[i].size(); ++j) {
      if (tally[i][j] == 0) continue;
      total += (xm1[i] * ym1[j]) * Rational(tally[i][j]);
    }
  }
  return total;
}

BivariatePoly tutte_delcon(const Multigraph& f, std::size_t max_nodes) {
  std::size_t nodes_left = max_nodes;
  return delcon(f, nodes_left);
}

BivariatePoly tutte(const Multigraph& f) {
  if (f.edge_count() <= kTutteSubsetEdgeBound) return tutte_subset(f);
  return tutte_delcon(f);
}

Rational chromatic_value(const Multigraph& f, long n) {
  if (n < 0) throw input_error("chromatic_value: n must be nonnegative");
  const int r = rank(f);
  Rational value = tutte(f).eval(Rational(1 - n), Rational(0));
  value *= rational_pow(Rational(n), component_count(f));
  return (r % 2 == 0) ? value : -value;
}

Integer count_proper_colorings(const Multigraph& f, long n, std::size_t max_maps) {
  if (n < 0) throw input_error("count_proper_colorings: n must be nonnegative");
  const int nv = f.vertex_count();
  for (const Edge& e : f.edges()) {
    if (e.is_loop()) return 0;
  }
  if (n == 0) return nv == 0 ? 1 : 0;
  check_enumeration_budget(std::pow(static_cast<double>(n), nv), max_maps,
                           "count_proper_colorings");

  // Edges attached to their later endpoint, so partial maps prune early.
  std::vector<std::vector<int>> earlier(static_cast<std::size_t>(nv));
  for (const Edge& e : f.edges()) {
    auto [u, v] = e.normalized();
    earlier[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<long> color(static_cast<std::size_t>(nv), -1);
  Integer count = 0;
  auto walk = [&](auto&& self, int v) -> void {
    if (v == nv) {
      count += 1;
      return;
    }
    for (long c = 0; c < n; ++c) {
      bool ok = true;
      for (int u : earlier[static_cast<std::size_t>(v)]) {
        if (color[static_cast<std::size_t>(u)] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      self(self, v + 1);
    }
    color[static_cast<std::size_t>(v)] = -1;
  };
  walk(walk, 0);
  return count;
}

Rational flow_value(const Multigraph& f, long n) {
  if (n < 1) throw input_error("flow_value: n must be positive");
  const int nullity = f.edge_count() - rank(f);
  Rational value = tutte(f).eval(Rational(0), Rational(1 - n));
  return (nullity % 2 == 0) ? value : -value;
}

Integer count_nz_flows(const Multigraph& f, long n, const Orientation& orient,
                       std::size_t max_assignments) {
  if (n < 1) throw input_error("count_nz_flows: n must be positive");
  if (orient.arcs.size() != static_cast<std::size_t>(f.edge_count())) {
    throw input_error("count_nz_flows: orientation covers a different edge count");
  }
  for (int i = 0; i < f.edge_count(); ++i) {
    auto [tail, head] = orient.arcs[static_cast<std::size_t>(i)];
    if (Edge{tail, head}.normalized() != f.edge(i).normalized()) {
      throw input_error("count_nz_flows: orientation disagrees with edge " + std::to_string(i));
    }
  }
  const std::size_t m = static_cast<std::size_t>(f.edge_count());
  if (m == 0) return 1;
  if (n == 1) return 0;  // no nonzero values exist
  check_enumeration_budget(std::pow(static_cast<double>(n - 1), static_cast<double>(m)),
                           max_assignments, "count_nz_flows");

  std::vector<long> value(m, 1);
  std::vector<long> net(static_cast<std::size_t>(f.vertex_count()), 0);
  Integer count = 0;
  while (true) {
    std::fill(net.begin(), net.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      auto [tail, head] = orient.arcs[i];
      net[static_cast<std::size_t>(head)] += value[i];
      net[static_cast<std::size_t>(tail)] -= value[i];
    }
    bool conserved = true;
    for (long x : net) {
      if (x % n != 0) {
        conserved = false;
        break;
      }
    }
    if (conserved) count += 1;

    std::size_t i = m;
    while (i > 0 && value[i - 1] == n - 1) value[--i] = 1;
    if (i == 0) break;
    ++value[i - 1];
  }
  return count;
}

Integer count_nz_flows(const Multigraph& f, long n) {
  return count_nz_flows(f, n, canonical_orientation(f));
}

TutteHomReport verify_tutte_hom_identity(const Multigraph& f, long n, const Rational& y) {
  if (y == 1) {
    throw input_error("verify_tutte_hom_identity: y = 1 makes the x-argument undefined");
  }
  if (n < 1) throw input_error("verify_tutte_hom_identity: n must be positive");
  TutteHomReport report;
  report.hom_side = hom(f, tutte_target(static_cast<int>(n), y));
  const Rational ym1 = y - 1;
  Rational x_arg = (ym1 + Rational(n)) / ym1;
  report.tutte_side = tutte(f).eval(x_arg, y) * rational_pow(ym1, rank(f)) *
                      rational_pow(Rational(n), component_count(f));
  report.equal = report.hom_side == report.tutte_side;
  return report;
}

}  // namespace homat
