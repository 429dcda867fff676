#pragma once

// Anyon theories (D, q): a finite abelian group of anyons with an exact
// quadratic form giving topological spins, and the bilinear braiding form it
// refines. Modular S/T data, the Gauss-Milgram sum, Deligne products,
// conjugates, and small-instance equivalence testing live here.

#include <complex>
#include <optional>

#include "spinlink/abelian.hpp"

namespace spinlink {

class AnyonTheory {
 public:
  AnyonTheory() = default;  // trivial theory

  // Validating constructor. `l_full` is the full symmetric matrix of braiding
  // values on generators; its diagonal must equal 2*q_gen.
  static AnyonTheory make(FinAbGroup group, std::vector<RationalMod1> q_gen, QzMat l_full);

  // Convenience: only the off-diagonal entries of `l_offdiag` are read; the
  // diagonal is filled in as 2*q_gen.
  static AnyonTheory make_offdiag(FinAbGroup group, std::vector<RationalMod1> q_gen,
                                  const QzMat& l_offdiag);

  const FinAbGroup& group() const { return group_; }
  const std::vector<RationalMod1>& q_gen() const { return q_gen_; }
  const QzMat& l_gen() const { return l_gen_; }
  bool nondegenerate() const { return nondegenerate_; }

  friend bool operator==(const AnyonTheory& a, const AnyonTheory& b);

 private:
  FinAbGroup group_;
  std::vector<RationalMod1> q_gen_;
  QzMat l_gen_{0, 0};
  bool nondegenerate_ = true;
};

// q on raw coefficient vectors; valid for any integer representatives.
RationalMod1 q_eval_coeffs(const AnyonTheory& t, const std::vector<Int>& coeffs);
RationalMod1 braiding_coeffs(const AnyonTheory& t, const std::vector<Int>& a,
                             const std::vector<Int>& b);

RationalMod1 q_eval(const AnyonTheory& t, const GroupElement& a);
// L(a,b) = q(a+b) - q(a) - q(b); symmetric and bi-additive.
RationalMod1 braiding(const AnyonTheory& t, const GroupElement& a, const GroupElement& b);

struct ModularData {
  Eigen::MatrixXcd s_matrix;  // unnormalized, S(a,b) = e^{2 pi i L(a,b)}
  Eigen::VectorXcd t_vector;  // theta_a = e^{2 pi i q(a)}
  RationalMod1 sigma_over_8;  // signature mod 8, as sigma/8 in Q/Z

  int sigma_mod8() const;
  Eigen::MatrixXcd normalized_s() const;  // unitary when the form is nondegenerate
};

// Rows/columns follow the canonical element enumeration of the group.
ModularData modular_data(const AnyonTheory& t, std::int64_t bound = 4096);

// |D|^{-1/2} sum_a e^{2 pi i q(a)}. Modulus 1 for nondegenerate forms, and
// the phase is sigma/8; degenerate forms give modulus < 1 (returned, never
// thrown). Phases are accumulated exactly in Q/Z before exponentiation.
std::complex<double> gauss_milgram(const AnyonTheory& t,
                                   std::int64_t bound = kDefaultEnumerationBound);

struct DelignePair {
  AnyonTheory theory;
  // product coefficients from concatenated (t1, t2) coefficients:
  // theory.rank x (rank1 + rank2), reduced mod the product orders.
  IntMat embedding;
};

DelignePair deligne_product_with_embedding(const AnyonTheory& t1, const AnyonTheory& t2);
AnyonTheory deligne_product(const AnyonTheory& t1, const AnyonTheory& t2);
AnyonTheory conjugate(const AnyonTheory& t);

// Searches for a group isomorphism phi with q2(phi(x)) = q1(x). The witness
// matrix maps coefficient vectors of t1 to coefficient vectors of t2
// (columns are the images of t1's canonical generators).
std::optional<IntMat> equivalent_small(const AnyonTheory& t1, const AnyonTheory& t2,
                                       std::int64_t bound = 4096);

}  // namespace spinlink
