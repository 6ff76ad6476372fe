#include "homat/tension.hpp"

#include <cmath>
#include <stdexcept>

#include "homat/errors.hpp"

namespace homat {

Integer count_tensions(const Multigraph& f, long m, const std::vector<long>& s,
                       const Orientation& orient, std::size_t max_potentials) {
  if (m < 1) throw input_error("count_tensions: modulus must be positive");
  if (orient.arcs.size() != static_cast<std::size_t>(f.edge_count())) {
    throw input_error("count_tensions: orientation covers a different edge count");
  }
  for (int i = 0; i < f.edge_count(); ++i) {
    auto [tail, head] = orient.arcs[static_cast<std::size_t>(i)];
    if (Edge{tail, head}.normalized() != f.edge(i).normalized()) {
      throw input_error("count_tensions: orientation disagrees with edge " + std::to_string(i));
    }
  }
  std::vector<bool> in_s(static_cast<std::size_t>(m), false);
  for (long residue : s) in_s[static_cast<std::size_t>(((residue % m) + m) % m)] = true;

  const int nv = f.vertex_count();
  if (std::pow(static_cast<double>(m), nv) > static_cast<double>(max_potentials)) {
    throw budget_error("count_tensions: m^|V| exceeds the configured budget");
  }

  // Every tension lifts to exactly m^{c} potentials (one free constant per
  // component), so counting qualifying potentials and dividing is exact.
  std::vector<long> potential(static_cast<std::size_t>(nv), 0);
  Integer qualifying = 0;
  while (true) {
    bool all_in_s = true;
    for (const auto& arc : orient.arcs) {
      long delta = potential[static_cast<std::size_t>(arc.second)] -
                   potential[static_cast<std::size_t>(arc.first)];
      if (!in_s[static_cast<std::size_t>(((delta % m) + m) % m)]) {
        all_in_s = false;
        break;
      }
    }
    if (all_in_s) qualifying += 1;

    std::size_t i = static_cast<std::size_t>(nv);
    while (i > 0 && potential[i - 1] == m - 1) potential[--i] = 0;
    if (i == 0) break;
    ++potential[i - 1];
  }

  Integer fiber = integer_pow(m, static_cast<unsigned long>(component_count(f)));
  if (qualifying % fiber != 0) {
    throw std::logic_error("count_tensions: potential count not divisible by fiber size");
  }
  return qualifying / fiber;
}

Integer count_tensions(const Multigraph& f, long m, const std::vector<long>& s) {
  return count_tensions(f, m, s, canonical_orientation(f));
}

}  // namespace homat
