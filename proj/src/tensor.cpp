#include "homat/tensor.hpp"

#include <algorithm>
#include <string>

#include "homat/enumerate.hpp"
#include "homat/errors.hpp"
#include "homat/hom.hpp"

namespace homat {
namespace {

std::size_t power_checked(int n, int k, std::size_t cap) {
  std::size_t size = 1;
  for (int i = 0; i < k; ++i) {
    if (n != 0 && size > cap / static_cast<std::size_t>(n)) {
      throw budget_error("hom_tensor: n^k exceeds the entry budget");
    }
    size *= static_cast<std::size_t>(n);
  }
  return size;
}

void require_same_shape(const HomTensor& t1, const HomTensor& t2) {
  if (t1.k != t2.k || t1.n != t2.n) {
    throw input_error("tensor shape mismatch: (k=" + std::to_string(t1.k) +
                      ",n=" + std::to_string(t1.n) + ") vs (k=" + std::to_string(t2.k) +
                      ",n=" + std::to_string(t2.n) + ")");
  }
}

}  // namespace

std::size_t HomTensor::index_of(const std::vector<int>& phi) const {
  if (static_cast<int>(phi.size()) != k) {
    throw input_error("tensor index: expected " + std::to_string(k) + " images, got " +
                      std::to_string(phi.size()));
  }
  std::size_t index = 0;
  for (int image : phi) {
    if (image < 0 || image >= n) {
      throw input_error("tensor index: image " + std::to_string(image) +
                        " outside [0, " + std::to_string(n) + ")");
    }
    index = index * static_cast<std::size_t>(n) + static_cast<std::size_t>(image);
  }
  return index;
}

std::vector<int> HomTensor::phi_at(std::size_t index) const {
  std::vector<int> phi(k);
  for (int i = k - 1; i >= 0; --i) {
    phi[i] = static_cast<int>(index % static_cast<std::size_t>(n));
    index /= static_cast<std::size_t>(n);
  }
  return phi;
}

HomTensor hom_tensor(const LabeledGraph& f, const WeightedGraph& g, std::size_t max_entries) {
  HomTensor t;
  t.k = f.k();
  t.n = g.n();
  std::size_t size = power_checked(t.n, t.k, max_entries);
  if (t.k == 0) {
    t.entries.push_back(hom(f.graph(), g));
    return t;
  }
  t.entries.reserve(size);
  for (std::size_t index = 0; index < size; ++index) {
    t.entries.push_back(hom_pinned(f.graph(), g, f.labels(), t.phi_at(index)));
  }
  return t;
}

Rational pairing(const HomTensor& t1, const HomTensor& t2) {
  require_same_shape(t1, t2);
  Rational total = 0;
  for (std::size_t i = 0; i < t1.entries.size(); ++i) {
    if (t1.entries[i] == 0 || t2.entries[i] == 0) continue;
    total += t1.entries[i] * t2.entries[i];
  }
  return total;
}

Rational pairing_a(const HomTensor& t1, const HomTensor& t2, const WeightedGraph& g) {
  require_same_shape(t1, t2);
  if (t1.n != g.n()) throw input_error("pairing_a: tensor size differs from target size");
  Rational total = 0;
  for (std::size_t i = 0; i < t1.entries.size(); ++i) {
    if (t1.entries[i] == 0 || t2.entries[i] == 0) continue;
    Rational term = t1.entries[i] * t2.entries[i];
    for (int image : t1.phi_at(i)) term *= g.a(image);
    total += term;
  }
  return total;
}

HomTensor group_average(const HomTensor& t, const AutomorphismGroup& group) {
  if (group.degree != t.n) {
    throw input_error("group_average: group degree differs from tensor size");
  }
  if (group.elements.empty()) throw input_error("group_average: empty element list");
  HomTensor out;
  out.k = t.k;
  out.n = t.n;
  out.entries.assign(t.entries.size(), Rational(0));
  std::vector<int> mapped(t.k);
  for (std::size_t index = 0; index < t.entries.size(); ++index) {
    std::vector<int> phi = t.phi_at(index);
    // out[φ] = (1/|Γ|) Σ_γ t[γ∘φ]; summing γ or γ⁻¹ is the same set.
    Rational sum = 0;
    for (const Permutation& p : group.elements) {
      for (int i = 0; i < t.k; ++i) mapped[i] = p(phi[i]);
      sum += t.entries[out.index_of(mapped)];
    }
    out.entries[index] = sum / Rational(static_cast<unsigned long>(group.order()));
  }
  return out;
}

long long invariant_rank(const WeightedGraph& g, int k,
                         const std::vector<LabeledGraph>& corpus) {
  if (!is_twin_free(g)) {
    throw input_error("invariant_rank: target is not twin-free");
  }
  if (k < 0) throw input_error("invariant_rank: k must be nonnegative");

  // Incremental exact elimination: keep pivot rows normalized to a leading 1
  // at strictly increasing pivot positions is not required; any echelon set
  // works. Reduce each tensor against the pivots, keep nonzero remainders.
  std::vector<std::vector<Rational>> pivots;
  std::vector<std::size_t> pivot_pos;
  for (const LabeledGraph& f : corpus) {
    if (f.k() != k) throw input_error("invariant_rank: corpus graph with wrong label count");
    std::vector<Rational> row = hom_tensor(f, g).entries;
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      const Rational& coeff = row[pivot_pos[p]];
      if (coeff == 0) continue;
      Rational scale = coeff;  // pivots are scaled to 1 at their position
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (pivots[p][j] != 0) row[j] -= scale * pivots[p][j];
      }
    }
    auto lead = std::find_if(row.begin(), row.end(),
                             [](const Rational& x) { return x != 0; });
    if (lead == row.end()) continue;
    std::size_t pos = static_cast<std::size_t>(lead - row.begin());
    Rational inv = *lead;
    for (Rational& x : row) {
      if (x != 0) x /= inv;
    }
    pivots.push_back(std::move(row));
    pivot_pos.push_back(pos);
  }
  return static_cast<long long>(pivots.size());
}

int invariant_rank_default_vertices(int k) { return k + 2; }
int invariant_rank_default_edges(int k) { return k + 3; }

long long invariant_rank(const WeightedGraph& g, int k) {
  return invariant_rank(g, k,
                        enumerate_labeled(k, invariant_rank_default_vertices(k),
                                          invariant_rank_default_edges(k)));
}

}  // namespace homat
