#pragma once

// Shared helpers for the test suites: random even lattices and small
// conveniences for building theories.

#include <random>

#include "spinlink/lattice.hpp"

namespace spinlink::testutil {

// Random even symmetric integer matrix of the given rank with entries in
// [-entry_bound, entry_bound] (diagonal even). Rejects degenerate matrices
// and determinants above det_cap.
inline GramLattice random_even_lattice(std::mt19937& rng, int rank, int entry_bound,
                                       long long det_cap) {
  std::uniform_int_distribution<int> entry(-entry_bound, entry_bound);
  std::uniform_int_distribution<int> half(-(entry_bound / 2), entry_bound / 2);
  for (;;) {
    IntMat g(rank, rank);
    for (int i = 0; i < rank; ++i) {
      g(i, i) = Int(2 * half(rng));
      for (int j = i + 1; j < rank; ++j) g(i, j) = g(j, i) = Int(entry(rng));
    }
    Int d = det(g);
    if (d.is_zero()) continue;
    if (abs(d) > Int(det_cap)) continue;
    return GramLattice(std::move(g));
  }
}

inline GramLattice hyperbolic_plane() {
  IntMat h(2, 2);
  h << Int(0), Int(1), Int(1), Int(0);
  return GramLattice(std::move(h));
}

}  // namespace spinlink::testutil
