#pragma once

// Integer symmetric bilinear forms (K-matrices / linking matrices): exact
// signature, radical quotients, dual coordinates, and the passage to the
// discriminant group with its quadratic form.
//
// Convention: on discriminant classes we take L([w1],[w2]) = w1^T G w2 mod 1
// and q([w]) = (1/2) w^T G w mod 1. The opposite orientation of the pairing
// corresponds to conjugate() of the resulting theory.

#include "spinlink/snf.hpp"
#include "spinlink/toporder.hpp"

namespace spinlink {

class GramLattice {
 public:
  GramLattice() : gram_(0, 0) {}
  explicit GramLattice(IntMat gram);

  const IntMat& gram() const { return gram_; }
  Eigen::Index rank() const { return gram_.rows(); }
  bool is_even() const;

  friend bool operator==(const GramLattice& a, const GramLattice& b) {
    return a.gram_.rows() == b.gram_.rows() && a.gram_ == b.gram_;
  }

 private:
  IntMat gram_;
};

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Exact Sylvester counts via rational congruence diagonalization.
Signature signature(const GramLattice& l);

struct RadicalQuotientResult {
  GramLattice lattice;   // induced nondegenerate form
  IntMat radical_basis;  // n x (n-r), columns span ker G as a direct summand
  IntMat embedding;      // n x r, quotient basis expressed in original coordinates
  IntMat projection;     // r x n, original coordinates -> quotient coordinates
};

RadicalQuotientResult radical_quotient(const GramLattice& l);

// Solves G w = c exactly; the element of the dual lattice with meridian
// (dual-basis) coordinates c. Requires det G != 0.
RatVec dual_coords(const GramLattice& l, const IntVec& c);

// The discriminant group of an even lattice with its induced spins and
// braidings, plus the concrete generator lifts everything downstream needs.
class DiscriminantData {
 public:
  const AnyonTheory& theory() const { return theory_; }
  const GramLattice& nondegenerate_lattice() const { return quotient_; }
  const RatMat& gen_lifts() const { return gen_lifts_; }      // columns w_i
  const IntMat& radical_basis() const { return radical_basis_; }
  const IntMat& projection() const { return projection_; }    // original -> quotient coords
  const IntMat& embedding() const { return embedding_; }

  // Class of the functional with dual coordinates c on the nondegenerate
  // quotient lattice.
  GroupElement anyon_from_dual(const IntVec& c) const;
  // Same, for meridian coordinates on the original (possibly degenerate)
  // lattice; rejects non-torsion classes.
  GroupElement anyon_from_meridian(const IntVec& c) const;
  // Dual coordinates (on the quotient lattice) of an anyon's standard lift.
  IntVec dual_of_anyon(const GroupElement& a) const;
  // The standard lift sum_i x_i w_i in quotient-lattice coordinates.
  RatVec lift_of_anyon(const GroupElement& a) const;

  friend DiscriminantData discriminant_theory(const GramLattice& l);

 private:
  AnyonTheory theory_;
  GramLattice quotient_;
  RatMat gen_lifts_{0, 0};
  IntMat radical_basis_{0, 0};
  IntMat embedding_{0, 0};
  IntMat projection_{0, 0};
  IntMat class_map_{0, 0};  // k x r: dual coords -> generator coefficients
  IntMat duals_{0, 0};      // r x k: columns are G * w_i
};

// Rejects odd lattices (those present fermionic data, out of scope here).
DiscriminantData discriminant_theory(const GramLattice& l);

// Block sum with the hyperbolic plane [[0,1],[1,0]].
GramLattice stabilize_hyperbolic(const GramLattice& l);

// P^T G P for unimodular P; preserves evenness, signature, discriminant.
GramLattice congruent_transform(const GramLattice& l, const IntMat& p);

}  // namespace spinlink
