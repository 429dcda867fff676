#pragma once

// Composite boundaries: a gapped wall from condensing a subgroup of mutual
// bosons, followed by a gapless boundary of the condensed phase built from a
// residual lattice with a polarization. Folding turns a wall between two
// phases into such a boundary of source x conjugate(target).

#include "spinlink/condense.hpp"
#include "spinlink/narain.hpp"

namespace spinlink {

// Normalization of the composite twisted partition function. CosetWeighted
// multiplies by |A| (the preimage-counting convention); Indicator drops that
// factor so a purely gapped boundary gives the plain 0/1 vector. Both appear
// in the literature; the engine exposes the switch rather than choosing.
enum class Normalization { CosetWeighted, Indicator };

class BordismBoundaryData {
 public:
  // Validates the whole bundle: A must consist of mutual bosons, the
  // residual lattice must be even and nondegenerate with the polarization
  // living on it, and `identification` must be a group isomorphism from the
  // residual discriminant group to the condensed phase matching spins and
  // braidings exactly.
  BordismBoundaryData(AnyonTheory bulk, Subgroup condensed_subgroup, GramLattice residual,
                      IntMat identification, Polarization polarization);

  const AnyonTheory& bulk() const { return bulk_; }
  const Subgroup& condensed_subgroup() const { return a_; }
  const GramLattice& residual() const { return residual_; }
  const Polarization& polarization() const { return pol_; }
  const CondensationResult& condensation() const { return cond_; }
  const DiscriminantData& residual_disc() const { return disc_; }
  const IntMat& identification() const { return ident_; }

  GroupElement identify(const GroupElement& residual_anyon) const;
  GroupElement identify_inverse(const GroupElement& condensed_anyon) const;

 private:
  AnyonTheory bulk_;
  Subgroup a_;
  GramLattice residual_;
  IntMat ident_;
  Polarization pol_;
  CondensationResult cond_;
  DiscriminantData disc_;
  std::vector<std::vector<Int>> inverse_table_;  // by condensed element index
};

// Z^a of the composite boundary: zero off the annihilator, otherwise the
// residual-lattice twisted partition function at the identified anyon,
// scaled by |A| under the CosetWeighted convention.
PartitionValue composite_twisted_partition(const BordismBoundaryData& data,
                                           const GroupElement& bulk_anyon, const TauPoint& tau,
                                           const ThetaParams& params,
                                           Normalization norm = Normalization::CosetWeighted);

class DomainWall {
 public:
  DomainWall(AnyonTheory source, AnyonTheory target, BordismBoundaryData folded,
             IntMat pair_embedding);

  const AnyonTheory& source() const { return source_; }
  const AnyonTheory& target() const { return target_; }
  const BordismBoundaryData& folded_boundary() const { return folded_; }

  // Product-theory anyon for the pair (source anyon, target anyon).
  GroupElement pair_anyon(const GroupElement& src, const GroupElement& tgt) const;
  PartitionValue pair_partition(const GroupElement& src, const GroupElement& tgt,
                                const TauPoint& tau, const ThetaParams& params,
                                Normalization norm = Normalization::CosetWeighted) const;

 private:
  AnyonTheory source_;
  AnyonTheory target_;
  BordismBoundaryData folded_;
  IntMat pair_embedding_;
};

// Wraps a boundary of source x conjugate(target) as a wall from source to
// target; the boundary's bulk theory must equal that product exactly.
DomainWall fold(const AnyonTheory& source, const AnyonTheory& target,
                BordismBoundaryData boundary);

}  // namespace spinlink
