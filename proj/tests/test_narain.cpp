#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "spinlink/condense.hpp"
#include "spinlink/narain.hpp"
#include "util.hpp"

using namespace spinlink;
using spinlink::testutil::hyperbolic_plane;
using std::complex;

namespace {

constexpr double kPi = std::numbers::pi;

Polarization hyperbolic_polarization(double r) {
  Eigen::MatrixXd basis(2, 1);
  basis << 1.0, r;
  return Polarization(hyperbolic_plane(), basis);
}

AnyonTheory toric_code() {
  FinAbGroup g = group_from_orders({Int(2), Int(2)});
  QzMat l(2, 2);
  l(0, 1) = l(1, 0) = RationalMod1(1, 2);
  return AnyonTheory::make_offdiag(g, {RationalMod1(), RationalMod1()}, l);
}

// Independent oracle: compact-boson spectrum sum with momentum/winding
// energies n^2/rho^2 + w^2 rho^2 and momentum 2 n w.
complex<double> compact_boson_z(double rho, const TauPoint& tau, int box, int eta_terms) {
  complex<double> theta(0, 0);
  for (int n = -box; n <= box; ++n) {
    for (int w = -box; w <= box; ++w) {
      double h = n * n / (rho * rho) + w * w * rho * rho;
      double k = 2.0 * n * w;
      theta += std::exp(-kPi * tau.y * h) *
               std::exp(complex<double>(0, kPi * tau.x * k));
    }
  }
  complex<double> e = eta(tau, eta_terms).value;
  return theta / (e * std::conj(e));
}

}  // namespace

TEST_CASE("tau points") {
  CHECK_THROWS_AS(TauPoint(0.0, -1.0), Error);
  TauPoint t(0.3, 0.8);
  TauPoint s = t.inverted();
  complex<double> expect = -1.0 / t.value();
  CHECK(s.x == doctest::Approx(expect.real()));
  CHECK(s.y == doctest::Approx(expect.imag()));
}

TEST_CASE("eta special value at tau = i") {
  // Gamma(1/4) / (2 pi^{3/4})
  double expect = std::tgamma(0.25) / (2.0 * std::pow(kPi, 0.75));
  EtaValue e30 = eta(TauPoint(0, 1), 30);
  CHECK(std::abs(e30.value - complex<double>(expect, 0)) < 1e-9);
  EtaValue e200 = eta(TauPoint(0, 1), 200);
  CHECK(std::abs(e30.value - e200.value) < 1e-12);
  CHECK(std::abs(e200.value.imag()) < 1e-15);
}

TEST_CASE("eta shift identity and small-nome limit") {
  TauPoint t(0.3, 0.8);
  EtaValue a = eta(t.shifted(), 80);
  EtaValue b = eta(t, 80);
  complex<double> twist = std::exp(complex<double>(0, kPi / 12.0));
  CHECK(std::abs(a.value - twist * b.value) < 1e-10);

  TauPoint far(0.1, 30.0);
  complex<double> leading =
      std::exp(complex<double>(0, kPi / 12.0) * far.value());
  CHECK(std::abs(eta(far, 8).value - leading) < 1e-30);
  CHECK(eta(far, 8).trunc_bound < 1e-60);
}

TEST_CASE("polarization validation") {
  CHECK_THROWS_AS(hodge_polarization_s2xs2(-1.0, 2.0), Error);
  // wrong dimension
  CHECK_THROWS_AS(Polarization(hyperbolic_plane(), Eigen::MatrixXd::Identity(2, 2)), Error);
  // negative line is not positive definite
  Eigen::MatrixXd bad(2, 1);
  bad << 1.0, -1.0;  // H(1,-1) = -2
  CHECK_THROWS_AS(Polarization(hyperbolic_plane(), bad), Error);
  // degenerate lattice has no polarization
  CHECK_THROWS_AS(Polarization(GramLattice(IntMat::Zero(1, 1)), Eigen::MatrixXd::Zero(1, 0)),
                  Error);
}

TEST_CASE("norms on the positive-definite (2) lattice") {
  IntMat two(1, 1);
  two << Int(2);
  Polarization pol = Polarization::unique_definite(GramLattice(two));
  CHECK(pol.central_plus() == 1);
  CHECK(pol.central_minus() == 0);
  Eigen::VectorXd v(1);
  v << 1.5;
  HkNorms n = pol.norms(v);
  CHECK(n.k == doctest::Approx(4.5));
  CHECK(n.h == doctest::Approx(4.5));
  v << 0.0;
  n = pol.norms(v);
  CHECK(n.k == 0.0);
  CHECK(n.h == 0.0);
}

TEST_CASE("hyperbolic norms against the explicit projection formula") {
  // With the positive line R(e1 + r e2): H(n, w) = r n^2 + w^2 / r, K = 2nw.
  std::mt19937 rng(83);
  std::uniform_real_distribution<double> radius(0.3, 3.0);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    double r = radius(rng);
    Polarization pol = hyperbolic_polarization(r);
    Eigen::VectorXd v(2);
    int n = coord(rng), w = coord(rng);
    v << n, w;
    HkNorms norms = pol.norms(v);
    CHECK(norms.k == doctest::Approx(2.0 * n * w).epsilon(1e-10));
    CHECK(norms.h == doctest::Approx(r * n * n + w * w / r).epsilon(1e-10));
    CHECK(norms.h >= std::abs(norms.k) - 1e-10);
  }
  HkNorms unit = hyperbolic_polarization(1.7).norms(Eigen::Vector2d(1, 0));
  CHECK(unit.k == doctest::Approx(0.0));
  CHECK(unit.h == doctest::Approx(1.7));
}

TEST_CASE("split norms recombine to the lattice norm") {
  // |v+|^2 - |v-|^2 computed from the explicit projector must reproduce
  // v^T G v, and |v+|^2 + |v-|^2 must reproduce H, for random vectors and
  // polarizations.
  std::mt19937 rng(97);
  std::uniform_real_distribution<double> radius(0.3, 3.0), comp(-4.0, 4.0);
  for (int trial = 0; trial < 60; ++trial) {
    Polarization pol = hyperbolic_polarization(radius(rng));
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2, 2);
    g(0, 1) = g(1, 0) = 1.0;
    const Eigen::MatrixXd& b = pol.pos_basis();
    Eigen::MatrixXd proj = b * (b.transpose() * g * b).inverse() * b.transpose() * g;
    Eigen::VectorXd v(2);
    v << comp(rng), comp(rng);
    Eigen::VectorXd vp = proj * v;
    Eigen::VectorXd vm = v - vp;
    double plus = vp.dot(g * vp);
    double minus = -vm.dot(g * vm);
    CHECK(plus >= -1e-12);
    CHECK(minus >= -1e-12);
    HkNorms n = pol.norms(v);
    CHECK(std::abs((plus - minus) - n.k) < 1e-10);
    CHECK(std::abs((plus + minus) - n.h) < 1e-10);
    CHECK(std::abs(n.k - v.dot(g * v)) < 1e-12);
  }
}

TEST_CASE("coset enumeration matches a brute-force box oracle") {
  std::mt19937 rng(89);
  std::uniform_real_distribution<double> radius(0.5, 12.0), sh(-0.9, 0.9);
  std::uniform_int_distribution<int> rank(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    int n = rank(rng);
    GramLattice l = [&] {
      for (;;) {
        GramLattice cand = spinlink::testutil::random_even_lattice(rng, n, 4, 100000);
        Signature s = signature(cand);
        if (s.zero == 0) return cand;
      }
    }();
    Signature s = signature(l);
    // random-ish polarization: for definite lattices the canonical one; for
    // indefinite hyperbolic-plane instances skip (covered elsewhere)
    if (s.positive != 0 && s.negative != 0) continue;
    Polarization pol = Polarization::unique_definite(l);
    double R = radius(rng);
    Eigen::VectorXd shift(n);
    for (int i = 0; i < n; ++i) shift(i) = sh(rng);
    auto pts = coset_points(pol, shift, R);
    // brute force box
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(pol.h_form());
    double lambda_min = es.eigenvalues().minCoeff();
    int box = static_cast<int>(std::sqrt(R / lambda_min)) + 2;
    std::set<std::vector<long>> expect, got;
    std::vector<long> idx(static_cast<std::size_t>(n), -box);
    for (;;) {
      Eigen::VectorXd v(n);
      for (int i = 0; i < n; ++i) v(i) = static_cast<double>(idx[static_cast<std::size_t>(i)]) + shift(i);
      if (pol.norms(v).h <= R) expect.insert(idx);
      int j = 0;
      for (; j < n; ++j) {
        if (++idx[static_cast<std::size_t>(j)] <= box) break;
        idx[static_cast<std::size_t>(j)] = -box;
      }
      if (j == n) break;
    }
    for (const auto& v : pts) {
      std::vector<long> key(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) key[static_cast<std::size_t>(i)] = std::lround(v(i) - shift(i));
      CHECK(got.insert(key).second);  // duplicate-free
    }
    CHECK(expect == got);
  }
}

TEST_CASE("coset corner cases") {
  Polarization pol = hyperbolic_polarization(1.0);
  // shifted coset with radius below the shortest vector: empty
  Eigen::VectorXd half(2);
  half << 0.5, 0.0;
  CHECK(coset_points(pol, half, 0.1).empty());
  // zero shift, zero radius: just the origin
  auto only = coset_points(pol, Eigen::VectorXd::Zero(2), 0.0);
  REQUIRE(only.size() == 1);
  CHECK(only[0].norm() == 0.0);
}

TEST_CASE("theta sum against direct summation on the (2) lattice") {
  IntMat two(1, 1);
  two << Int(2);
  GramLattice l(two);
  DiscriminantData d = discriminant_theory(l);
  Polarization pol = Polarization::unique_definite(l);
  GroupElement a(d.theory().group(), {Int(1)});
  TauPoint tau(0, 1);
  ThetaParams params{30.0, 64, 1e-10};
  PartitionValue z = twisted_partition(pol, d, a, tau, params);
  // oracle: sum over half-integers k with |k| <= 20 of e^{-2 pi k^2}
  double theta = 0.0;
  for (int j = -20; j <= 20; ++j) {
    double k = j + 0.5;
    theta += std::exp(-2.0 * kPi * k * k);
  }
  complex<double> expect = theta / eta(tau, 64).value;
  CHECK(std::abs(z.value - expect) < 1e-12);
  CHECK(z.error_bound < 1e-8);
}

TEST_CASE("empty theta sum reports a dominant error bound") {
  IntMat big(1, 1);
  big << Int(100);
  GramLattice l(big);
  DiscriminantData d = discriminant_theory(l);
  Polarization pol = Polarization::unique_definite(l);
  GroupElement a(d.theory().group(), {Int(50)});  // shortest coset vector has H = 25
  PartitionValue z = twisted_partition(pol, d, a, TauPoint(0, 1), ThetaParams{10.0, 32, 1e-8});
  CHECK(z.value == complex<double>(0, 0));
  CHECK(z.error_bound > 0.0);
}

TEST_CASE("full partition function matches the compact boson") {
  TauPoint tau(0, 1);
  double r = 1.3;
  GramLattice h = hyperbolic_plane();
  DiscriminantData d = discriminant_theory(h);
  REQUIRE(d.theory().group().is_trivial());
  GroupElement vac = identity_element(d.theory().group());
  ThetaParams params{0.0, 64, 1e-9};

  PartitionValue z = twisted_partition(hyperbolic_polarization(r), d, vac, tau, params);
  complex<double> oracle = compact_boson_z(std::sqrt(r), tau, 14, 64);
  CHECK(std::abs(z.value - oracle) < 1e-6);

  PartitionValue dual = twisted_partition(hyperbolic_polarization(1.0 / r), d, vac, tau, params);
  CHECK(std::abs(z.value - dual.value) < 1e-6);
}

TEST_CASE("positive-definite partition functions are chiral") {
  IntMat two(1, 1);
  two << Int(2);
  GramLattice l(two);
  DiscriminantData d = discriminant_theory(l);
  Polarization pol = Polarization::unique_definite(l);
  ThetaParams params{25.0, 64, 1e-9};
  for (int coeff : {0, 1}) {
    GroupElement a(d.theory().group(), {Int(coeff)});
    PartitionValue plus = twisted_partition(pol, d, a, TauPoint(0.37, 0.9), params);
    PartitionValue minus = twisted_partition(pol, d, a, TauPoint(-0.37, 0.9), params);
    CHECK(std::abs(minus.value - std::conj(plus.value)) < 1e-10);
  }
}

TEST_CASE("gapped boundary vectors are exactly covariant exactly when Lagrangian") {
  AnyonTheory toric = toric_code();
  Subgroup ae = subgroup_generate_coeffs(toric.group(), {{Int(1), Int(0)}});
  std::vector<int> vec = gapped_boundary_vector(toric, ae);
  auto elems = enumerate_coeffs(toric.group());
  auto z_of = [&](const std::vector<int>& v) {
    return [&, v](const GroupElement& a, const TauPoint&) {
      return complex<double>(v[static_cast<std::size_t>(element_index(a.group(), a.coeffs()))], 0);
    };
  };
  TauPoint tau(0.2, 1.1);
  CovarianceReport good = modular_covariance_check(toric, z_of(vec), {0, 0}, tau, 0.0);
  CHECK(good.pass);
  CHECK(good.t_residual == 0.0);
  CHECK(good.s_residual() == 0.0);

  // the fermion pair {1, f} is self-annihilating but not isotropic: the
  // S-relation holds on the nose while the T-relation fails by 2
  std::vector<int> fermion_pair = {1, 0, 0, 1};
  CovarianceReport bad = modular_covariance_check(toric, z_of(fermion_pair), {0, 0}, tau, 1e-9);
  CHECK(!bad.pass);
  CHECK(bad.t_residual == doctest::Approx(2.0));
  CHECK(bad.s_residual() == 0.0);

  // an isotropic-but-small subgroup fails the S-relation instead
  std::vector<int> too_small = {1, 0, 0, 0};
  CovarianceReport small = modular_covariance_check(toric, z_of(too_small), {0, 0}, tau, 1e-9);
  CHECK(!small.pass);
  CHECK(small.t_residual == 0.0);
  CHECK(small.s_residual() == doctest::Approx(0.5));
}

TEST_CASE("theta partition vector of the chiral Z2 boundary is covariant") {
  GramLattice l = to_gram(lens_diagram(Int(2)));
  DiscriminantData d = discriminant_theory(l);
  Polarization pol = Polarization::unique_definite(l);
  ThetaParams params{0.0, 96, 1e-7};
  auto z = [&](const GroupElement& a, const TauPoint& t) {
    return twisted_partition(pol, d, a, t, params).value;
  };
  CovarianceReport rep =
      modular_covariance_check(d.theory(), z, {1, 0}, TauPoint(0.1, 1.2), 1e-4);
  CHECK(rep.pass);
  CHECK(rep.t_residual < 1e-4);
  CHECK(rep.s_residual() < 1e-4);
}

TEST_CASE("product-metric polarization depends only on the radius ratio") {
  Polarization a = hodge_polarization_s2xs2(1.5, 0.5);
  Polarization b = hodge_polarization_s2xs2(3.0, 1.0);
  CHECK((a.pos_basis() - b.pos_basis()).norm() == 0.0);
  Polarization self_dual = hodge_polarization_s2xs2(2.0, 2.0);
  CHECK(self_dual.pos_basis()(1, 0) == doctest::Approx(1.0));

  // matches the compact boson at the radius ratio
  TauPoint tau(0, 1);
  GramLattice h = hyperbolic_plane();
  DiscriminantData d = discriminant_theory(h);
  GroupElement vac = identity_element(d.theory().group());
  PartitionValue z =
      twisted_partition(hodge_polarization_s2xs2(1.4, 0.7), d, vac, tau, ThetaParams{});
  complex<double> oracle = compact_boson_z(std::sqrt(2.0), tau, 14, 64);
  CHECK(std::abs(z.value - oracle) < 1e-6);
}

TEST_CASE("adaptive truncation meets its tolerance") {
  GramLattice h = hyperbolic_plane();
  DiscriminantData d = discriminant_theory(h);
  GroupElement vac = identity_element(d.theory().group());
  Polarization pol = hyperbolic_polarization(1.3);
  ThetaParams loose{0.0, 64, 1e-4};
  ThetaParams tight{0.0, 64, 1e-10};
  PartitionValue a = twisted_partition(pol, d, vac, TauPoint(0.3, 0.9), loose);
  PartitionValue b = twisted_partition(pol, d, vac, TauPoint(0.3, 0.9), tight);
  CHECK(std::abs(a.value - b.value) < 1e-4);
  CHECK(a.error_bound < 1e-4);
  CHECK(b.error_bound < 1e-9);
}
