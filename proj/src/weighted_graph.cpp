#include "homat/weighted_graph.hpp"

#include <map>
#include <sstream>

#include "homat/errors.hpp"

namespace homat {

WeightedGraph::WeightedGraph(std::vector<Rational> a, std::vector<std::vector<Rational>> b)
    : n_(static_cast<int>(a.size())), a_(std::move(a)), b_(std::move(b)) {
  if (n_ < 1) throw input_error("weighted graph needs at least one vertex");
  if (static_cast<int>(b_.size()) != n_)
    throw input_error("B has " + std::to_string(b_.size()) + " rows, expected " +
                      std::to_string(n_));
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(b_[i].size()) != n_)
      throw input_error("B[" + std::to_string(i) + "] has " + std::to_string(b_[i].size()) +
                        " entries, expected " + std::to_string(n_));
    if (a_[i] == 0) throw input_error("a[" + std::to_string(i) + "] must be nonzero");
  }
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (b_[i][j] != b_[j][i])
        throw input_error("B[" + std::to_string(i) + "][" + std::to_string(j) +
                          "] != B[" + std::to_string(j) + "][" + std::to_string(i) +
                          "] (B must be symmetric)");
}

WeightedGraph WeightedGraph::empty() { return WeightedGraph(); }

Rational WeightedGraph::weight_sum() const {
  Rational sum = 0;
  for (const Rational& w : a_) sum += w;
  return sum;
}

WeightedGraph from_simple_graph(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw input_error("from_simple_graph: target needs at least one vertex");
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n, Rational(0)));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) throw input_error("from_simple_graph: loops are not allowed");
    if (b[e.u][e.v] != 0) throw input_error("from_simple_graph: parallel edges are not allowed");
    b[e.u][e.v] = 1;
    b[e.v][e.u] = 1;
  }
  return WeightedGraph(std::vector<Rational>(n, Rational(1)), std::move(b));
}

WeightedGraph complete_graph(int n) {
  if (n < 1) throw input_error("complete_graph: n must be positive");
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n, Rational(1)));
  for (int i = 0; i < n; ++i) b[i][i] = 0;
  return WeightedGraph(std::vector<Rational>(n, Rational(1)), std::move(b));
}

WeightedGraph tutte_target(int n, const Rational& y) {
  if (n < 1) throw input_error("tutte_target: n must be positive");
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n, Rational(1)));
  for (int i = 0; i < n; ++i) b[i][i] = y;  // (y-1)I + J has y on the diagonal
  return WeightedGraph(std::vector<Rational>(n, Rational(1)), std::move(b));
}

WeightedGraph cayley_cyclic(int m, const std::vector<int>& s) {
  if (m < 1) throw input_error("cayley_cyclic: modulus must be positive");
  std::vector<bool> in_s(m, false);
  for (int r : s) {
    int x = ((r % m) + m) % m;
    in_s[x] = true;
  }
  for (int x = 0; x < m; ++x)
    if (in_s[x] != in_s[(m - x) % m])
      throw input_error("cayley_cyclic: connection set is not symmetric (S != -S): residue " +
                        std::to_string(x));
  std::vector<std::vector<Rational>> b(m, std::vector<Rational>(m, Rational(0)));
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      if (in_s[((v - u) % m + m) % m]) b[u][v] = 1;
  return WeightedGraph(std::vector<Rational>(m, Rational(1)), std::move(b));
}

std::vector<std::vector<int>> twin_classes(const WeightedGraph& g) {
  std::map<std::vector<Rational>, int> row_class;
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < g.n(); ++i) {
    auto [it, inserted] = row_class.try_emplace(g.b()[i],
                                                static_cast<int>(classes.size()));
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(i);
  }
  return classes;  // ordered by smallest member (first occurrence)
}

bool is_twin_free(const WeightedGraph& g) {
  return static_cast<int>(twin_classes(g).size()) == g.n();
}

WeightedGraph twin_reduce(const WeightedGraph& g) {
  // Dropping a cancelled class removes its columns, which can merge rows
  // that differed only there, so the pass repeats until nothing changes.
  // Each pass preserves hom(F, .) for every F and shrinks n, so the loop
  // terminates with pairwise-distinct rows.
  WeightedGraph current = g;
  while (current.n() > 0 && !is_twin_free(current)) {
    auto classes = twin_classes(current);
    std::vector<int> reps;
    std::vector<Rational> a;
    for (const auto& cls : classes) {
      Rational sum = 0;
      for (int i : cls) sum += current.a(i);
      if (sum == 0) continue;  // fully cancelled class disappears
      reps.push_back(cls.front());
      a.push_back(sum);
    }
    if (reps.empty()) return WeightedGraph::empty();
    const int m = static_cast<int>(reps.size());
    std::vector<std::vector<Rational>> b(m, std::vector<Rational>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) b[i][j] = current.b(reps[i], reps[j]);
    current = WeightedGraph(std::move(a), std::move(b));
  }
  return current;
}

std::string describe(const WeightedGraph& g) {
  std::ostringstream os;
  os << "G(n=" << g.n() << ", a=[";
  for (int i = 0; i < g.n(); ++i) {
    if (i) os << ',';
    os << rational_str(g.a(i));
  }
  os << "])";
  return os.str();
}

}  // namespace homat
