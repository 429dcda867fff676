#pragma once

// Numerical boundary data: polarizations of indefinite lattices, the split
// H/K norms, Dedekind eta, coset lattice sums (Siegel theta), twisted
// partition functions, and the modular-covariance verifier.
//
// The lattice sum is evaluated in the convergent form
//   Theta^a(tau) = sum_{v in L + w_a, H(v) <= R} e^{-pi y H(v) + i pi x K(v)},
// i.e. with the weight e^{-pi y H} that makes the series converge on the
// upper half-plane, and Z^a = Theta^a / (eta^p conj(eta)^q).

#include <complex>
#include <functional>

#include "spinlink/lattice.hpp"

namespace spinlink {

struct TauPoint {
  double x = 0.0;
  double y = 1.0;

  TauPoint() = default;
  TauPoint(double x_, double y_) : x(x_), y(y_) {
    if (!(y > 0.0)) fail(ErrorKind::InvalidArgument, "tau must lie in the upper half-plane");
  }
  std::complex<double> value() const { return {x, y}; }

  TauPoint shifted() const { return {x + 1.0, y}; }  // tau + 1
  TauPoint inverted() const {                        // -1/tau
    double n = x * x + y * y;
    return {-x / n, y / n};
  }
};

struct ThetaParams {
  double radius = 0.0;   // cutoff on H(v); 0 means adaptive from tol
  int eta_terms = 64;
  double tol = 1e-8;
};

struct HkNorms {
  double k = 0.0;  // indefinite norm v^T G v
  double h = 0.0;  // positive-definite companion |v+|^2 + |v-|^2
};

class Polarization {
 public:
  // pos_basis columns must span a maximal positive-definite subspace; its
  // dimension must equal the positive signature count.
  Polarization(GramLattice lattice, Eigen::MatrixXd pos_basis);

  // The canonical polarization of a definite lattice (the only one).
  static Polarization unique_definite(const GramLattice& lattice);

  const GramLattice& lattice() const { return lattice_; }
  const Eigen::MatrixXd& pos_basis() const { return pos_basis_; }
  const Eigen::MatrixXd& h_form() const { return h_form_; }
  int central_plus() const { return p_; }
  int central_minus() const { return m_; }

  HkNorms norms(const Eigen::VectorXd& v) const;

 private:
  GramLattice lattice_;
  Eigen::MatrixXd pos_basis_;
  Eigen::MatrixXd g_real_;
  Eigen::MatrixXd h_form_;
  int p_ = 0;
  int m_ = 0;
};

struct EtaValue {
  std::complex<double> value;
  double trunc_bound = 0.0;  // absolute bound from the omitted product tail
};

// e^{pi i tau / 12} prod_{n=1}^{terms} (1 - e^{2 pi i n tau}).
EtaValue eta(const TauPoint& tau, int terms);

// All v = u + shift, u integral, with H(v) <= radius; complete and
// duplicate-free, enumerated in a deterministic order.
std::vector<Eigen::VectorXd> coset_points(const Polarization& pol, const Eigen::VectorXd& shift,
                                          double radius);

// Cutoff radius making the estimated tail sum_{H(v)>R} e^{-pi y H} < bound.
double adaptive_radius(const Polarization& pol, double y, double bound);

struct PartitionValue {
  std::complex<double> value;
  double error_bound = 0.0;
};

// Twisted partition function Z^a(tau) of the Narain boundary specified by
// the polarization, at the anyon a of the lattice's discriminant theory.
PartitionValue twisted_partition(const Polarization& pol, const DiscriminantData& disc,
                                 const GroupElement& a, const TauPoint& tau,
                                 const ThetaParams& params);

struct CovarianceReport {
  double t_residual = 0.0;
  double s_residual_plus = 0.0;   // with phases e^{+2 pi i L(a,b)}
  double s_residual_minus = 0.0;  // conjugate orientation
  char orientation = '+';         // which S orientation fits better
  bool pass = false;
  double tol = 0.0;

  double s_residual() const { return std::min(s_residual_plus, s_residual_minus); }
};

// Checks the two covariance relations
//   Z^a(tau+1) = e^{-2 pi i (c+ - c-)/24} e^{2 pi i q(a)} Z^a(tau)
//   Z^a(-1/tau) = |D|^{-1/2} sum_b e^{+-2 pi i L(a,b)} Z^b(tau)
// on the supplied twisted partition vector. Both S orientations are
// evaluated and reported; the check passes if either does.
CovarianceReport modular_covariance_check(
    const AnyonTheory& theory,
    const std::function<std::complex<double>(const GroupElement&, const TauPoint&)>& z,
    std::pair<int, int> central, const TauPoint& tau, double tol);

// Polarization of the hyperbolic pairing induced by the product round metric
// with radii r1, r2: the positive line R (e1 + (r1/r2) e2).
Polarization hodge_polarization_s2xs2(double r1, double r2);

}  // namespace spinlink
