#pragma once

#include <cstddef>
#include <vector>

#include "homat/multigraph.hpp"
#include "homat/rational.hpp"
#include "homat/tutte.hpp"

namespace homat {

// Number of edge functions E -> S that are Z_m-tensions under the given
// orientation, i.e. functions of the form p(head) − p(tail) (mod m) for a
// vertex potential p: V -> Z_m. Counted by enumerating the m^{|V|}
// potentials and dividing by the fiber size m^{c(F)}; the division is
// always exact. `s` holds residues mod m (any integers accepted).
// Independent of the orientation whenever s = −s (mod m).
Integer count_tensions(const Multigraph& f, long m, const std::vector<long>& s,
                       const Orientation& orient,
                       std::size_t max_potentials = kDefaultEnumerationBudget);
Integer count_tensions(const Multigraph& f, long m, const std::vector<long>& s);

}  // namespace homat
