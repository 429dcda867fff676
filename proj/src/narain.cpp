#include "spinlink/narain.hpp"

#include <cmath>
#include <numbers>

namespace spinlink {

namespace {

constexpr double kPi = std::numbers::pi;

struct KahanSum {
  double value = 0.0;
  double carry = 0.0;
  void add(double x) {
    double t = x - carry;
    double s = value + t;
    carry = (s - value) - t;
    value = s;
  }
};

// Upper incomplete gamma for half-integer s >= 1/2, via the recurrence
// G(s+1, z) = s G(s, z) + z^s e^{-z}.
double upper_gamma(double s, double z) {
  double base;
  double t0;
  if (std::abs(s - std::round(s)) < 0.25) {
    base = std::exp(-z);  // G(1, z)
    t0 = 1.0;
  } else {
    base = std::sqrt(kPi) * std::erfc(std::sqrt(z));  // G(1/2, z)
    t0 = 0.5;
  }
  for (double t = t0; t + 0.5 < s; t += 1.0) base = t * base + std::pow(z, t) * std::exp(-z);
  return base;
}

}  // namespace

Polarization::Polarization(GramLattice lattice, Eigen::MatrixXd pos_basis)
    : lattice_(std::move(lattice)), pos_basis_(std::move(pos_basis)) {
  Signature sig = signature(lattice_);
  if (sig.zero != 0)
    fail(ErrorKind::DegenerateForm, "polarizations require a nondegenerate lattice");
  p_ = sig.positive;
  m_ = sig.negative;
  if (pos_basis_.rows() != lattice_.rank() || pos_basis_.cols() != p_)
    fail(ErrorKind::InvalidArgument,
         "positive basis must have one column per positive signature direction");
  g_real_ = to_real(lattice_.gram());
  Eigen::MatrixXd restricted = pos_basis_.transpose() * g_real_ * pos_basis_;
  if (p_ > 0) {
    Eigen::LLT<Eigen::MatrixXd> llt(restricted);
    if (llt.info() != Eigen::Success)
      fail(ErrorKind::InvalidArgument, "basis does not span a positive-definite subspace");
  }
  Eigen::MatrixXd proj;
  if (p_ > 0) {
    proj = pos_basis_ * restricted.inverse() * pos_basis_.transpose() * g_real_;
  } else {
    proj = Eigen::MatrixXd::Zero(lattice_.rank(), lattice_.rank());
  }
  Eigen::MatrixXd anti = Eigen::MatrixXd::Identity(lattice_.rank(), lattice_.rank()) - proj;
  h_form_ = proj.transpose() * g_real_ * proj - anti.transpose() * g_real_ * anti;
  h_form_ = 0.5 * (h_form_ + h_form_.transpose().eval());
}

Polarization Polarization::unique_definite(const GramLattice& lattice) {
  Signature sig = signature(lattice);
  if (sig.zero != 0 || (sig.positive != 0 && sig.negative != 0))
    fail(ErrorKind::InvalidArgument,
         "only definite lattices have a canonical polarization; supply one explicitly");
  if (sig.negative == 0)
    return Polarization(lattice,
                        Eigen::MatrixXd::Identity(lattice.rank(), lattice.rank()));
  return Polarization(lattice, Eigen::MatrixXd::Zero(lattice.rank(), 0));
}

HkNorms Polarization::norms(const Eigen::VectorXd& v) const {
  if (v.size() != lattice_.rank())
    fail(ErrorKind::InvalidArgument, "vector length does not match lattice rank");
  HkNorms out;
  out.k = v.dot(g_real_ * v);
  out.h = v.dot(h_form_ * v);
  return out;
}

EtaValue eta(const TauPoint& tau, int terms) {
  if (terms < 1) fail(ErrorKind::InvalidArgument, "eta needs at least one product term");
  std::complex<double> itau(tau.x, tau.y);
  std::complex<double> q = std::exp(std::complex<double>(0, 2.0 * kPi) * itau);
  std::complex<double> prod = std::exp(std::complex<double>(0, kPi / 12.0) * itau);
  std::complex<double> qn(1.0, 0.0);
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    prod *= (1.0 - qn);
  }
  double absq = std::abs(q);
  double tail = std::pow(absq, terms + 1) / (1.0 - absq);
  EtaValue out;
  out.value = prod;
  out.trunc_bound = std::abs(prod) * std::expm1(tail);
  return out;
}

std::vector<Eigen::VectorXd> coset_points(const Polarization& pol, const Eigen::VectorXd& shift,
                                          double radius) {
  if (radius < 0) fail(ErrorKind::InvalidArgument, "radius must be nonnegative");
  const Eigen::Index n = pol.lattice().rank();
  if (shift.size() != n)
    fail(ErrorKind::InvalidArgument, "coset shift length does not match rank");
  std::vector<Eigen::VectorXd> out;
  if (n == 0) {
    out.emplace_back(0);
    return out;
  }
  Eigen::LLT<Eigen::MatrixXd> llt(pol.h_form());
  if (llt.info() != Eigen::Success)
    fail(ErrorKind::InvalidArgument, "H form is not positive definite");
  Eigen::MatrixXd u = llt.matrixL().transpose();  // upper triangular, H = u^T u
  const double bound = radius * (1.0 + 1e-12) + 1e-12;

  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  // partial(i) = sum of squares of rows > i.
  std::vector<double> partial(static_cast<std::size_t>(n), 0.0);
  std::function<void(Eigen::Index)> descend = [&](Eigen::Index i) {
    double t = partial[static_cast<std::size_t>(i)];
    double rest = bound - t;
    if (rest < 0) return;
    // row i contribution: (u_ii v_i + c)^2 with c from the fixed tail
    double c = 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j) c += u(i, j) * v(j);
    double uii = u(i, i);  // positive: Cholesky of a positive-definite form
    double half = std::sqrt(rest);
    double lo = (-half - c) / uii - shift(i);
    double hi = (half - c) / uii - shift(i);
    for (long k = static_cast<long>(std::ceil(lo - 1e-12)); k <= static_cast<long>(std::floor(hi + 1e-12)); ++k) {
      v(i) = static_cast<double>(k) + shift(i);
      double term = uii * v(i) + c;
      double total = t + term * term;
      if (total > bound) continue;
      if (i == 0) {
        out.push_back(v);
      } else {
        partial[static_cast<std::size_t>(i - 1)] = total;
        descend(i - 1);
      }
    }
  };
  partial[static_cast<std::size_t>(n - 1)] = 0.0;
  descend(n - 1);
  return out;
}

double adaptive_radius(const Polarization& pol, double y, double bound) {
  const Eigen::Index n = pol.lattice().rank();
  if (n == 0) return 1.0;
  double det_h = pol.h_form().determinant();
  double s = static_cast<double>(n) / 2.0;
  double density = std::pow(kPi, s) / (std::tgamma(s + 1.0) * std::sqrt(det_h));
  auto tail = [&](double r) {
    return density * s * std::pow(kPi * y, -s) * upper_gamma(s, kPi * y * r);
  };
  double r = 1.0;
  while (tail(r) > bound && r < 1e9) r *= 2.0;
  // walk back down a little for economy
  while (r > 1.0 && tail(r * 0.75) <= bound) r *= 0.75;
  return r;
}

PartitionValue twisted_partition(const Polarization& pol, const DiscriminantData& disc,
                                 const GroupElement& a, const TauPoint& tau,
                                 const ThetaParams& params) {
  if (!(pol.lattice() == disc.nondegenerate_lattice()))
    fail(ErrorKind::InvalidArgument, "polarization and discriminant data disagree on the lattice");
  if (!(a.group() == disc.theory().group()))
    fail(ErrorKind::InvalidArgument, "anyon does not belong to the lattice's discriminant group");
  if (params.radius <= 0 && !(params.tol > 0))
    fail(ErrorKind::InvalidArgument, "adaptive truncation needs a positive tolerance");

  const double radius =
      params.radius > 0 ? params.radius : adaptive_radius(pol, tau.y, params.tol / 10.0);
  Eigen::VectorXd shift = to_real(disc.lift_of_anyon(a));
  auto points = coset_points(pol, shift, radius);

  KahanSum re, im;
  for (const auto& v : points) {
    HkNorms n = pol.norms(v);
    double mag = std::exp(-kPi * tau.y * n.h);
    double ang = kPi * tau.x * n.k;
    re.add(mag * std::cos(ang));
    im.add(mag * std::sin(ang));
  }
  std::complex<double> theta(re.value, im.value);

  const int p = pol.central_plus();
  const int m = pol.central_minus();
  EtaValue e = eta(tau, params.eta_terms);
  std::complex<double> denom =
      std::pow(e.value, p) * std::pow(std::conj(e.value), m);

  // Tail of the lattice sum plus the eta truncation, both propagated through
  // the quotient.
  double det_h = pol.h_form().determinant();
  double s = static_cast<double>(pol.lattice().rank()) / 2.0;
  double tail = 0.0;
  if (pol.lattice().rank() > 0) {
    double density = std::pow(kPi, s) / (std::tgamma(s + 1.0) * std::sqrt(det_h));
    tail = density * s * std::pow(kPi * tau.y, -s) * upper_gamma(s, kPi * tau.y * radius);
  }
  double abs_denom = std::abs(denom);
  double eta_rel = std::abs(e.value) > 0 ? (p + m) * e.trunc_bound / std::abs(e.value) : 0.0;

  PartitionValue out;
  out.value = theta / denom;
  out.error_bound = tail / abs_denom + std::abs(out.value) * eta_rel;
  return out;
}

CovarianceReport modular_covariance_check(
    const AnyonTheory& theory,
    const std::function<std::complex<double>(const GroupElement&, const TauPoint&)>& z,
    std::pair<int, int> central, const TauPoint& tau, double tol) {
  auto elems = enumerate_coeffs(theory.group(), 4096);
  const std::size_t n = elems.size();
  std::vector<GroupElement> anyons;
  anyons.reserve(n);
  for (const auto& c : elems) anyons.emplace_back(theory.group(), c);

  std::vector<std::complex<double>> at_tau(n), at_t(n), at_s(n);
  TauPoint tp = tau.shifted();
  TauPoint ts = tau.inverted();
  for (std::size_t i = 0; i < n; ++i) {
    at_tau[i] = z(anyons[i], tau);
    at_t[i] = z(anyons[i], tp);
    at_s[i] = z(anyons[i], ts);
  }

  CovarianceReport rep;
  rep.tol = tol;
  const double cc = static_cast<double>(central.first - central.second);
  std::complex<double> central_phase = std::polar(1.0, -2.0 * kPi * cc / 24.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> expect = central_phase * phase(q_eval_coeffs(theory, elems[i])) * at_tau[i];
    rep.t_residual = std::max(rep.t_residual, std::abs(at_t[i] - expect));
  }

  const double root = std::sqrt(to_double(theory.group().order()));
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> plus(0, 0), minus(0, 0);
    for (std::size_t j = 0; j < n; ++j) {
      std::complex<double> w = phase(braiding_coeffs(theory, elems[i], elems[j]));
      plus += w * at_tau[j];
      minus += std::conj(w) * at_tau[j];
    }
    rep.s_residual_plus = std::max(rep.s_residual_plus, std::abs(at_s[i] - plus / root));
    rep.s_residual_minus = std::max(rep.s_residual_minus, std::abs(at_s[i] - minus / root));
  }
  rep.orientation = rep.s_residual_plus <= rep.s_residual_minus ? '+' : '-';
  rep.pass = rep.t_residual <= tol && rep.s_residual() <= tol;
  return rep;
}

Polarization hodge_polarization_s2xs2(double r1, double r2) {
  if (!(r1 > 0.0) || !(r2 > 0.0))
    fail(ErrorKind::InvalidArgument, "sphere radii must be positive");
  IntMat h(2, 2);
  h << Int(0), Int(1), Int(1), Int(0);
  Eigen::MatrixXd basis(2, 1);
  basis << 1.0, r1 / r2;
  return Polarization(GramLattice(std::move(h)), std::move(basis));
}

}  // namespace spinlink
