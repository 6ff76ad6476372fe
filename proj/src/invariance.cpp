#include "homat/invariance.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "homat/automorphism.hpp"
#include "homat/enumerate.hpp"
#include "homat/errors.hpp"
#include "homat/hom.hpp"
#include "homat/matroid.hpp"
#include "homat/tensor.hpp"

namespace homat {
namespace {

void require_scan_hypotheses(const WeightedGraph& g, const char* what) {
  if (!is_twin_free(g)) {
    throw input_error(std::string(what) + ": target must be twin-free");
  }
  if (g.weight_sum() == 0) {
    throw input_error(std::string(what) + ": sum of vertex weights is zero");
  }
}

enum class ScanKind { multiplicativity, flip };

// Scans all unordered corpus pairs in (v1+v2, e1+e2) order for a violation
// of the pairwise identity. Per corpus graph F1 the identity's defect
// against any partner F2 is a fixed linear functional of the partner's
// tensor:
//   multiplicativity:  hom(F1)·hom(F2) − Σa·hom(F1·F2) = ⟨w1, t2⟩
//       with w1[i] = a_i (hom(F1) − Σa·t1[i]),
//   flip:              hom(F1·F2) − hom(F1^T·F2)        = ⟨w1, t2⟩
//       with w1[ij] = a_i a_j (t1[ij] − t1[ji]),
// so a graph whose w vanishes passes against every partner at once, and
// the remaining pairs cost one dot product each. Tensors are computed
// lazily, so an early witness keeps the scan cheap.
class PairScanner {
public:
  PairScanner(const WeightedGraph& g, const std::vector<LabeledGraph>& corpus, ScanKind kind)
      : g_(g), corpus_(corpus), kind_(kind),
        tensors_(corpus.size()), functionals_(corpus.size()) {}

  // Returns the first violating pair, if any; sets pairs_tested.
  std::optional<std::pair<int, int>> run(long long& pairs_tested) {
    pairs_tested = 0;
    std::map<std::pair<int, int>, std::vector<int>> buckets;
    for (int i = 0; i < static_cast<int>(corpus_.size()); ++i) {
      const Multigraph& f = corpus_[static_cast<std::size_t>(i)].graph();
      buckets[{f.vertex_count(), f.edge_count()}].push_back(i);
    }
    std::vector<std::pair<int, int>> keys;
    for (const auto& [key, members] : buckets) keys.push_back(key);

    struct BucketPair {
      int sum_v, sum_e, p, q;
    };
    std::vector<BucketPair> order;
    for (int p = 0; p < static_cast<int>(keys.size()); ++p) {
      for (int q = p; q < static_cast<int>(keys.size()); ++q) {
        order.push_back({keys[static_cast<std::size_t>(p)].first +
                             keys[static_cast<std::size_t>(q)].first,
                         keys[static_cast<std::size_t>(p)].second +
                             keys[static_cast<std::size_t>(q)].second,
                         p, q});
      }
    }
    std::sort(order.begin(), order.end(), [](const BucketPair& a, const BucketPair& b) {
      return std::tie(a.sum_v, a.sum_e, a.p, a.q) < std::tie(b.sum_v, b.sum_e, b.p, b.q);
    });

    for (const BucketPair& bp : order) {
      const auto& left = buckets[keys[static_cast<std::size_t>(bp.p)]];
      const auto& right = buckets[keys[static_cast<std::size_t>(bp.q)]];
      for (std::size_t li = 0; li < left.size(); ++li) {
        std::size_t rj_start = (bp.p == bp.q) ? li : 0;
        for (std::size_t rj = rj_start; rj < right.size(); ++rj) {
          int i = left[li], j = right[rj];
          ++pairs_tested;
          if (violates(i, j)) return std::pair<int, int>{i, j};
        }
      }
    }
    return std::nullopt;
  }

private:
  const HomTensor& tensor(int i) {
    auto& slot = tensors_[static_cast<std::size_t>(i)];
    if (!slot) slot = hom_tensor(corpus_[static_cast<std::size_t>(i)], g_);
    return *slot;
  }

  const std::vector<Rational>& functional(int i) {
    auto& slot = functionals_[static_cast<std::size_t>(i)];
    if (slot) return *slot;
    const HomTensor& t = tensor(i);
    std::vector<Rational> w(t.entries.size());
    if (kind_ == ScanKind::multiplicativity) {
      Rational hom_full = 0;
      for (int v = 0; v < g_.n(); ++v) hom_full += g_.a(v) * t.entries[static_cast<std::size_t>(v)];
      const Rational total = g_.weight_sum();
      for (int v = 0; v < g_.n(); ++v) {
        w[static_cast<std::size_t>(v)] =
            g_.a(v) * (hom_full - total * t.entries[static_cast<std::size_t>(v)]);
      }
    } else {
      const int n = g_.n();
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          std::size_t xy = static_cast<std::size_t>(x * n + y);
          std::size_t yx = static_cast<std::size_t>(y * n + x);
          w[xy] = g_.a(x) * g_.a(y) * (t.entries[xy] - t.entries[yx]);
        }
      }
    }
    slot = std::move(w);
    return *slot;
  }

  bool violates(int i, int j) {
    const std::vector<Rational>& w = functional(i);
    if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; })) {
      return false;
    }
    const HomTensor& t = tensor(j);
    Rational dot = 0;
    for (std::size_t idx = 0; idx < w.size(); ++idx) {
      if (w[idx] == 0 || t.entries[idx] == 0) continue;
      dot += w[idx] * t.entries[idx];
    }
    return dot != 0;
  }

  const WeightedGraph& g_;
  const std::vector<LabeledGraph>& corpus_;
  ScanKind kind_;
  std::vector<std::optional<HomTensor>> tensors_;
  std::vector<std::optional<std::vector<Rational>>> functionals_;
};

PairWitness make_witness(const WeightedGraph& g, const LabeledGraph& f1, const LabeledGraph& f2,
                         ScanKind kind) {
  PairWitness witness{f1, f2, 0, 0};
  if (kind == ScanKind::multiplicativity) {
    witness.lhs = h(f1.graph(), g) * h(f2.graph(), g);
    witness.rhs = h(glue(f1, f2).graph(), g);
  } else {
    witness.lhs = hom(glue(f1, f2).graph(), g);
    witness.rhs = hom(glue(transpose(f1), f2).graph(), g);
  }
  if (witness.lhs == witness.rhs) {
    throw std::logic_error("pair scan reported a violation the direct recomputation denies");
  }
  return witness;
}

PairScanReport scan_corpus(const WeightedGraph& g, const std::vector<LabeledGraph>& corpus,
                           ScanKind kind, bool group_property) {
  PairScanReport report;
  report.group_property = group_property;
  PairScanner scanner(g, corpus, kind);
  auto violation = scanner.run(report.pairs_tested);
  if (violation) {
    report.identity_everywhere = false;
    report.witness = make_witness(g, corpus[static_cast<std::size_t>(violation->first)],
                                  corpus[static_cast<std::size_t>(violation->second)], kind);
  } else {
    report.identity_everywhere = true;
    if (!group_property) report.inconclusive = true;  // a witness must exist somewhere
  }
  return report;
}

PairScanReport check_with_escalation(const WeightedGraph& g, ScanKind kind, int k,
                                     int base_v, int base_e, int esc_v, int esc_e) {
  bool property = kind == ScanKind::multiplicativity
                      ? is_transitive(automorphisms(g))
                      : is_generously_transitive(automorphisms(g));
  PairScanReport report =
      scan_corpus(g, enumerate_labeled(k, base_v, base_e), kind, property);
  if (report.inconclusive) {
    long long earlier = report.pairs_tested;
    report = scan_corpus(g, enumerate_labeled(k, esc_v, esc_e), kind, property);
    report.pairs_tested += earlier;
  }
  return report;
}

// --- 2-isomorphism pair generator ------------------------------------------

struct EditOp {
  enum Kind { flip, identify, split } kind;
  int a = 0, b = 0;      // flip: the two cut vertices; identify: the two vertices
  int group = 0;         // flip/split: which edge group moves
};

std::vector<EditOp> applicable_ops(const Multigraph& f, int vertex_cap) {
  std::vector<EditOp> ops;
  const int n = f.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      auto groups = edge_groups_at(f, {u, v});
      if (groups.size() < 2) continue;
      for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi) {
        ops.push_back({EditOp::flip, u, v, gi});
      }
    }
  }
  ComponentInfo comp = components(f);
  if (comp.count >= 2) {
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        if (comp.assignment[static_cast<std::size_t>(p)] <
            comp.assignment[static_cast<std::size_t>(q)]) {
          ops.push_back({EditOp::identify, p, q, 0});
        }
      }
    }
  }
  if (n < vertex_cap) {
    for (int c = 0; c < n; ++c) {
      auto groups = edge_groups_at(f, {c});
      if (groups.size() < 2) continue;
      for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi) {
        ops.push_back({EditOp::split, c, 0, gi});
      }
    }
  }
  return ops;
}

Multigraph apply_op(const Multigraph& f, const EditOp& op) {
  std::vector<Edge> edges(f.edges());
  switch (op.kind) {
    case EditOp::flip: {
      auto groups = edge_groups_at(f, {op.a, op.b});
      for (int idx : groups[static_cast<std::size_t>(op.group)]) {
        Edge& e = edges[static_cast<std::size_t>(idx)];
        auto swap_end = [&](int w) { return w == op.a ? op.b : (w == op.b ? op.a : w); };
        e = {swap_end(e.u), swap_end(e.v)};
      }
      return Multigraph(f.vertex_count(), std::move(edges));
    }
    case EditOp::identify: {
      const int keep = op.a, gone = op.b;
      auto map_vertex = [&](int w) {
        if (w == gone) w = keep;
        return w > gone ? w - 1 : w;
      };
      for (Edge& e : edges) e = {map_vertex(e.u), map_vertex(e.v)};
      return Multigraph(f.vertex_count() - 1, std::move(edges));
    }
    case EditOp::split: {
      auto groups = edge_groups_at(f, {op.a});
      const int fresh = f.vertex_count();
      for (int idx : groups[static_cast<std::size_t>(op.group)]) {
        Edge& e = edges[static_cast<std::size_t>(idx)];
        e = {e.u == op.a ? fresh : e.u, e.v == op.a ? fresh : e.v};
      }
      return Multigraph(f.vertex_count() + 1, std::move(edges));
    }
  }
  throw std::logic_error("apply_op: unreachable");
}

}  // namespace

PairScanReport check_multiplicativity(const WeightedGraph& g) {
  require_scan_hypotheses(g, "check_multiplicativity");
  return check_with_escalation(g, ScanKind::multiplicativity, 1, 3, 4, 4, 6);
}

PairScanReport check_multiplicativity(const WeightedGraph& g,
                                      const std::vector<LabeledGraph>& corpus) {
  require_scan_hypotheses(g, "check_multiplicativity");
  for (const LabeledGraph& f : corpus) {
    if (f.k() != 1) throw input_error("check_multiplicativity: corpus must be 1-labelled");
  }
  return scan_corpus(g, corpus, ScanKind::multiplicativity,
                     is_transitive(automorphisms(g)));
}

PairScanReport check_flip_invariance(const WeightedGraph& g) {
  require_scan_hypotheses(g, "check_flip_invariance");
  return check_with_escalation(g, ScanKind::flip, 2, 3, 3, 4, 5);
}

PairScanReport check_flip_invariance(const WeightedGraph& g,
                                     const std::vector<LabeledGraph>& corpus) {
  require_scan_hypotheses(g, "check_flip_invariance");
  for (const LabeledGraph& f : corpus) {
    if (f.k() != 2) throw input_error("check_flip_invariance: corpus must be 2-labelled");
  }
  return scan_corpus(g, corpus, ScanKind::flip, is_generously_transitive(automorphisms(g)));
}

std::vector<TwoIsoPair> generate_two_isomorphic_pairs(int count, int max_vertices,
                                                      int max_edges, unsigned long seed) {
  if (count < 0 || max_vertices < 1 || max_edges < 0) {
    throw input_error("generate_two_isomorphic_pairs: bad bounds");
  }
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);  // bound > 0
  };

  std::vector<TwoIsoPair> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    const int nv = 1 + static_cast<int>(pick(static_cast<std::size_t>(max_vertices)));
    const int ne = static_cast<int>(pick(static_cast<std::size_t>(max_edges) + 1));
    std::vector<Edge> slots;
    for (int u = 0; u < nv; ++u) {
      for (int v = u; v < nv; ++v) slots.push_back({u, v});
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(ne));
    for (int i = 0; i < ne; ++i) edges.push_back(slots[pick(slots.size())]);
    Multigraph base(nv, edges);

    Multigraph current = base;
    int applied = 0;
    const int wanted = static_cast<int>(pick(5));  // 0..4 operations
    for (int step = 0; step < wanted; ++step) {
      auto ops = applicable_ops(current, max_vertices + 4);
      if (ops.empty()) break;
      current = apply_op(current, ops[pick(ops.size())]);
      ++applied;
    }

    std::vector<int> bijection(static_cast<std::size_t>(base.edge_count()));
    std::iota(bijection.begin(), bijection.end(), 0);
    out.push_back({std::move(base), std::move(current), std::move(bijection), applied});
  }
  return out;
}

InvarianceVerdict check_matroid_invariance(const WeightedGraph& g, int generated_pairs,
                                           unsigned long seed) {
  for (int i = 0; i < g.n(); ++i) {
    if (g.a(i) != 1) {
      throw input_error("check_matroid_invariance: vertex weights must all be 1");
    }
  }
  InvarianceVerdict verdict;
  verdict.target = describe(g);

  // Twin reduction preserves hom (hence h) and both group properties, so
  // everything below may run on the reduced target.
  const WeightedGraph reduced = twin_reduce(g);
  AutomorphismGroup group = automorphisms(reduced);
  verdict.transitive = is_transitive(group);
  verdict.generously_transitive = is_generously_transitive(group);

  const Rational total = reduced.weight_sum();
  auto h_fast = [&reduced, &total](const Multigraph& f) -> Rational {
    return hom_fast(f, reduced) / rational_pow(total, component_count(f));
  };

  if (verdict.generously_transitive) {
    auto pairs = generate_two_isomorphic_pairs(generated_pairs, 5, 6, seed);
    verdict.consistent = true;
    for (const TwoIsoPair& pair : pairs) {
      ++verdict.pairs_tested;
      Rational h1 = h_fast(pair.first);
      Rational h2 = h_fast(pair.second);
      if (h1 != h2) {
        verdict.witness = WitnessPair{pair.first, pair.second, pair.edge_bijection, h1, h2};
        verdict.consistent = false;  // would contradict invariance
        break;
      }
    }
    return verdict;
  }

  // Not generously transitive: a violating flip pair must exist. Search the
  // default corpus, escalate once, and report inconclusive if both miss.
  for (auto [max_v, max_e] : {std::pair<int, int>{4, 5}, std::pair<int, int>{5, 7}}) {
    auto corpus = enumerate_labeled(2, max_v, max_e);
    PairScanner scanner(reduced, corpus, ScanKind::flip);
    long long tested = 0;
    auto violation = scanner.run(tested);
    verdict.pairs_tested += tested;
    if (!violation) continue;

    const LabeledGraph& f1 = corpus[static_cast<std::size_t>(violation->first)];
    const LabeledGraph& f2 = corpus[static_cast<std::size_t>(violation->second)];
    Multigraph m1 = glue(f1, f2).graph();
    Multigraph m2 = glue(transpose(f1), f2).graph();
    std::vector<int> bijection(static_cast<std::size_t>(m1.edge_count()));
    std::iota(bijection.begin(), bijection.end(), 0);

    WitnessPair witness{m1, m2, bijection, h(m1, reduced), h(m2, reduced)};
    bool h_differs = witness.h_first != witness.h_second;
    bool matroids_match = is_matroid_isomorphism(m1, m2, bijection);
    if (m1.edge_count() <= kMatroidIsoEdgeBound) {
      matroids_match = matroids_match && matroid_isomorphic(m1, m2).has_value();
    }
    verdict.witness = std::move(witness);
    verdict.consistent = h_differs && matroids_match;
    return verdict;
  }
  verdict.inconclusive = true;
  verdict.consistent = false;
  return verdict;
}

std::vector<SurveyRow> exhaustive_survey(int max_vertices, int jobs) {
  if (max_vertices < 1 || max_vertices > 6) {
    throw input_error("exhaustive_survey: max_vertices must be in [1, 6]");
  }
  if (jobs < 1) throw input_error("exhaustive_survey: jobs must be positive");

  std::vector<Multigraph> graphs = enumerate_simple_graphs(max_vertices);
  std::vector<SurveyRow> rows(graphs.size());

  auto build_row = [&graphs](int index) {
    const Multigraph& graph = graphs[static_cast<std::size_t>(index)];
    SurveyRow row;
    row.index = index;
    row.graph = graph;

    WeightedGraph raw = from_simple_graph(graph);
    WeightedGraph reduced = twin_reduce(raw);
    AutomorphismGroup raw_group = automorphisms(raw);
    AutomorphismGroup red_group = automorphisms(reduced);
    row.transitive = is_transitive(raw_group);
    row.generously_transitive = is_generously_transitive(raw_group);
    // Both group properties must transfer across twin reduction.
    bool transfer_ok = row.transitive == is_transitive(red_group) &&
                       row.generously_transitive == is_generously_transitive(red_group);

    row.multiplicativity = check_multiplicativity(reduced);
    row.flip_invariance = check_flip_invariance(reduced);
    row.matroid_invariance = check_matroid_invariance(raw);

    row.consistent = transfer_ok && row.multiplicativity.consistent() &&
                     row.flip_invariance.consistent() && row.matroid_invariance.consistent &&
                     row.multiplicativity.group_property == row.transitive &&
                     row.flip_invariance.group_property == row.generously_transitive &&
                     row.matroid_invariance.generously_transitive == row.generously_transitive;
    return row;
  };

  if (jobs == 1) {
    for (int i = 0; i < static_cast<int>(graphs.size()); ++i) {
      rows[static_cast<std::size_t>(i)] = build_row(i);
    }
    return rows;
  }

  std::atomic<int> next{0};
  auto worker = [&]() {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= static_cast<int>(graphs.size())) break;
      rows[static_cast<std::size_t>(i)] = build_row(i);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return rows;
}

}  // namespace homat
