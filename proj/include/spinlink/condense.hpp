#pragma once

// Anyon condensation: bosons, isotropic and Lagrangian subgroups,
// annihilators, the condensed quotient theory with its wall data, and the
// linking-matrix realization of Wall's surgery.

#include "spinlink/kirby.hpp"

namespace spinlink {

std::vector<GroupElement> bosons(const AnyonTheory& t,
                                 std::int64_t bound = kDefaultEnumerationBound);

bool is_isotropic(const AnyonTheory& t, const Subgroup& a);

// { b : L(a, b) = 0 for all a in A }; contains A whenever A is isotropic.
Subgroup annihilator(const AnyonTheory& t, const Subgroup& a,
                     std::int64_t bound = kDefaultEnumerationBound);

class CondensationResult {
 public:
  const AnyonTheory& condensed() const { return condensed_; }
  const FinAbGroup& wall_anyons() const { return wall_.group; }
  const Subgroup& annihilator() const { return ann_; }

  // Bulk anyon to its wall class in D/A.
  GroupElement to_wall(const GroupElement& bulk) const;
  // Surviving anyon (member of the annihilator) to the condensed theory.
  GroupElement to_condensed(const GroupElement& surviving) const;
  // Ambient coefficients of one representative of a condensed anyon.
  std::vector<Int> lift_to_bulk(const GroupElement& condensed_anyon) const;

  friend CondensationResult condense(const AnyonTheory& t, const Subgroup& a, std::int64_t bound);

 private:
  AnyonTheory condensed_;
  Subgroup ann_;
  AbstractSubgroup ann_abs_;
  QuotientResult wall_;
  GroupHom abs_to_condensed_;
  std::vector<std::vector<Int>> condensed_gen_bulk_lifts_;
};

// Condense the isotropic subgroup A; the result is (Ann_A / A, q') together
// with the gapped-wall data D/A.
CondensationResult condense(const AnyonTheory& t, const Subgroup& a,
                            std::int64_t bound = kDefaultEnumerationBound);

// All isotropic subgroups (q vanishes identically), smallest first.
std::vector<Subgroup> isotropic_subgroups(const AnyonTheory& t, std::int64_t bound = 4096);

// Isotropic subgroups of order sqrt(|D|); empty when |D| is not a perfect
// square or none exist.
std::vector<Subgroup> lagrangians(const AnyonTheory& t, std::int64_t bound = 4096);

// Indicator vector of the Lagrangian subgroup A over the canonical element
// enumeration; the twisted partition vector of the gapped boundary.
std::vector<int> gapped_boundary_vector(const AnyonTheory& t, const Subgroup& a);

// Attach one surgery component along the torsion class with meridian
// coordinates c: the extended matrix [[G, c], [c^T, f]] with f = c^T G^{-1} c.
// Requires the class to be a boson; f is then an even integer.
GramLattice wall_surgery(const GramLattice& g, const IntVec& c);

// Iterated surgery, one meridian vector at a time; each vector is given in
// the original coordinates and padded with zeros over the components added
// before it. Intermediate matrices may be degenerate.
GramLattice wall_surgery_iterate(const GramLattice& g, const std::vector<IntVec>& meridians);

}  // namespace spinlink
