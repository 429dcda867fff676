#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>

#include "spinlink/lattice.hpp"
#include "util.hpp"

using namespace spinlink;
using spinlink::testutil::hyperbolic_plane;
using spinlink::testutil::random_even_lattice;

namespace {

IntMat mat2(long a, long b, long c, long d) {
  IntMat m(2, 2);
  m << Int(a), Int(b), Int(c), Int(d);
  return m;
}

IntMat mat1(long a) {
  IntMat m(1, 1);
  m << Int(a);
  return m;
}

GramLattice toric_matrix() { return GramLattice(mat2(0, 2, 2, 0)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("smith normal form on pinned cases") {
  SnfResult r1 = snf(mat1(2));
  CHECK(r1.s == mat1(2));

  SnfResult r2 = snf(mat2(0, 2, 2, 0));
  CHECK(r2.s(0, 0) == Int(2));
  CHECK(r2.s(1, 1) == Int(2));
  CHECK(r2.s(0, 1).is_zero());

  SnfResult r3 = snf(IntMat::Zero(2, 2));
  CHECK(r3.s == IntMat::Zero(2, 2));
  CHECK(r3.rank() == 0);
}

TEST_CASE("smith normal form invariants on random matrices") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> entry(-9, 9), rows(1, 5), cols(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    IntMat a(rows(rng), cols(rng));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = Int(entry(rng));
    SnfResult r = snf(a);
    CHECK(r.u * a * r.v == r.s);
    CHECK(abs(det(r.u)) == Int(1));
    CHECK(abs(det(r.v)) == Int(1));
    const Eigen::Index n = std::min(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < n; ++i) {
      CHECK(r.s(i, i) >= Int(0));
      if (i + 1 < n && !r.s(i, i).is_zero())
        CHECK((r.s(i + 1, i + 1) % r.s(i, i)).is_zero());
      if (i + 1 < n && r.s(i, i).is_zero()) CHECK(r.s(i + 1, i + 1).is_zero());
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        if (i != j) CHECK(r.s(i, j).is_zero());
    }
    // deterministic
    SnfResult again = snf(a);
    CHECK(again.s == r.s);
    CHECK(again.u == r.u);
    CHECK(again.v == r.v);
  }
}

TEST_CASE("integer linear solve") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> entry(-6, 6), rows(1, 4), cols(1, 4);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    IntMat a(rows(rng), cols(rng));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = Int(entry(rng));
    // plant a solution
    IntVec x(a.cols());
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = Int(entry(rng));
    IntVec b = a * x;
    auto sol = int_solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b);
    ++solved;
    // perturbed right-hand sides must either solve exactly or be rejected
    IntVec b2 = b;
    b2(0) += Int(1);
    auto sol2 = int_solve(a, b2);
    if (sol2) CHECK(a * *sol2 == b2);
  }
  CHECK(solved == 200);
}

TEST_CASE("integer kernel") {
  IntMat m(3, 3);
  m << Int(0), Int(2), Int(0), Int(2), Int(0), Int(1), Int(0), Int(1), Int(0);
  IntMat k = int_kernel(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).isZero(0));
  // kernel vector proportional to (1, 0, -2)
  CHECK(k(1, 0).is_zero());
  CHECK(k(0, 0) * Int(-2) == k(2, 0));
}

TEST_CASE("signature on pinned cases") {
  for (long n : {2L, 4L, 6L}) {
    Signature s = signature(GramLattice(mat1(n)));
    CHECK(s.positive == 1);
    CHECK(s.negative == 0);
    CHECK(s.zero == 0);
  }
  Signature h = signature(hyperbolic_plane());
  CHECK(h.positive == 1);
  CHECK(h.negative == 1);
  CHECK(h.zero == 0);
  Signature z = signature(GramLattice(IntMat::Zero(3, 3)));
  CHECK(z.zero == 3);
  Signature t = signature(toric_matrix());
  CHECK(t.positive == 1);
  CHECK(t.negative == 1);
}

TEST_CASE("signature agrees with floating eigenvalues away from zero") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> rank(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    GramLattice l = random_even_lattice(rng, rank(rng), 8, 2'000'000);
    Signature s = signature(l);
    CHECK(s.positive + s.negative + s.zero == l.rank());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_real(l.gram()));
    int p = 0, m = 0;
    bool clean = true;
    for (Eigen::Index i = 0; i < l.rank(); ++i) {
      double ev = es.eigenvalues()(i);
      if (std::abs(ev) < 1e-6) { clean = false; break; }
      (ev > 0 ? p : m)++;
    }
    if (clean) {
      CHECK(s.positive == p);
      CHECK(s.negative == m);
    }
  }
}

TEST_CASE("radical quotient") {
  GramLattice t = toric_matrix();
  RadicalQuotientResult same = radical_quotient(t);
  CHECK(same.lattice == t);
  CHECK(same.radical_basis.cols() == 0);

  IntMat wall(3, 3);
  wall << Int(0), Int(2), Int(0), Int(2), Int(0), Int(1), Int(0), Int(1), Int(0);
  RadicalQuotientResult rq = radical_quotient(GramLattice(wall));
  CHECK(rq.lattice.rank() == 2);
  CHECK(abs(det(rq.lattice.gram())) == Int(1));
  CHECK(rq.lattice.is_even());
  CHECK((wall * rq.radical_basis).isZero(0));
  // projection * embedding = identity on the quotient
  IntMat pe = rq.projection * rq.embedding;
  CHECK(pe == IntMat::Identity(2, 2));

  RadicalQuotientResult zero = radical_quotient(GramLattice(IntMat::Zero(2, 2)));
  CHECK(zero.lattice.rank() == 0);
}

TEST_CASE("dual coordinates") {
  GramLattice t = toric_matrix();
  IntVec c(2);
  c << Int(0), Int(1);
  RatVec w = dual_coords(t, c);
  CHECK(w(0) == Rat(1, 2));
  CHECK(w(1) == Rat(0));

  IntVec zero = IntVec::Zero(2);
  CHECK(to_real(dual_coords(t, zero)).norm() == 0.0);

  RatVec w4 = dual_coords(GramLattice(mat1(4)), mat1(1).col(0));
  CHECK(w4(0) == Rat(1, 4));

  CHECK(kind_of([&] { dual_coords(GramLattice(IntMat::Zero(2, 2)), zero); }) ==
        ErrorKind::DegenerateForm);
}

TEST_CASE("discriminant theory of cyclic lattices") {
  for (long n : {2L, 4L, 6L}) {
    DiscriminantData d = discriminant_theory(GramLattice(mat1(n)));
    CHECK(d.theory().group().orders() == std::vector<Int>{Int(n)});
    for (const auto& c : enumerate_coeffs(d.theory().group())) {
      GroupElement a(d.theory().group(), c);
      CHECK(q_eval(d.theory(), a) == RationalMod1(c[0] * c[0], Int(2 * n)));
    }
  }
  // negative definite: q(1) = -1/8 mod 1 = 7/8
  DiscriminantData neg = discriminant_theory(GramLattice(mat1(-4)));
  CHECK(neg.theory().group().orders() == std::vector<Int>{Int(4)});
  GroupElement one(neg.theory().group(), {Int(1)});
  CHECK(q_eval(neg.theory(), one) == RationalMod1(7, 8));
  // braiding of the rank-one (4) lattice
  DiscriminantData four = discriminant_theory(GramLattice(mat1(4)));
  GroupElement g1(four.theory().group(), {Int(1)});
  CHECK(braiding(four.theory(), g1, g1) == RationalMod1(1, 4));
}

TEST_CASE("discriminant theory of the toric matrix is the toric code") {
  DiscriminantData d = discriminant_theory(toric_matrix());
  CHECK(d.theory().group().orders() == std::vector<Int>{Int(2), Int(2)});
  FinAbGroup g = group_from_orders({Int(2), Int(2)});
  QzMat l(2, 2);
  l(0, 1) = l(1, 0) = RationalMod1(1, 2);
  AnyonTheory toric = AnyonTheory::make_offdiag(g, {RationalMod1(), RationalMod1()}, l);
  CHECK(equivalent_small(d.theory(), toric).has_value());
}

TEST_CASE("unimodular even lattices give the trivial theory") {
  DiscriminantData h = discriminant_theory(hyperbolic_plane());
  CHECK(h.theory().group().is_trivial());
  DiscriminantData hh = discriminant_theory(stabilize_hyperbolic(hyperbolic_plane()));
  CHECK(hh.theory().group().is_trivial());
}

TEST_CASE("hyperbolic stabilization") {
  CHECK(stabilize_hyperbolic(GramLattice()) == hyperbolic_plane());
  GramLattice two(mat1(2));
  GramLattice stab = stabilize_hyperbolic(two);
  CHECK(stab.rank() == 3);
  CHECK(stab.is_even());
  CHECK(equivalent_small(discriminant_theory(two).theory(),
                         discriminant_theory(stab).theory())
            .has_value());
}

TEST_CASE("congruence by plus or minus identity is inert") {
  GramLattice t = toric_matrix();
  CHECK(congruent_transform(t, IntMat::Identity(2, 2)) == t);
  IntMat neg = IntMat::Identity(2, 2);
  neg(0, 0) = neg(1, 1) = Int(-1);
  CHECK(congruent_transform(t, neg) == t);
}

TEST_CASE("odd lattices are rejected") {
  CHECK(kind_of([&] { discriminant_theory(GramLattice(mat1(3))); }) == ErrorKind::OddLattice);
}

TEST_CASE("discriminant data invariants") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> rank(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    GramLattice l = random_even_lattice(rng, rank(rng), 6, 4000);
    DiscriminantData d = discriminant_theory(l);
    CHECK(abs(det(d.nondegenerate_lattice().gram())) == d.theory().group().order());
    CHECK(d.theory().nondegenerate());
    if (d.theory().group().order() <= Int(48)) {
      Eigen::MatrixXcd s = modular_data(d.theory()).normalized_s();
      CHECK((s * s.adjoint() - Eigen::MatrixXcd::Identity(s.rows(), s.cols()))
                .cwiseAbs()
                .maxCoeff() < 1e-9);
    }
    const RatMat& w = d.gen_lifts();
    RatMat gw = to_rat(d.nondegenerate_lattice().gram()) * w;
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      // lifts are dual vectors: G w integral
      for (Eigen::Index i = 0; i < gw.rows(); ++i) CHECK(gw(i, j).is_integer());
      // class of w_j has exactly the advertised order
      GroupElement gen(d.theory().group(),
                       [&] {
                         std::vector<Int> c(static_cast<std::size_t>(w.cols()), Int(0));
                         c[static_cast<std::size_t>(j)] = Int(1);
                         return c;
                       }());
      CHECK(element_order(gen) == d.theory().group().orders()[static_cast<std::size_t>(j)]);
      // round trip dual coords -> anyon
      IntVec dual(gw.rows());
      for (Eigen::Index i = 0; i < gw.rows(); ++i) dual(i) = gw(i, j).num();
      CHECK(d.anyon_from_dual(dual) == gen);
    }
  }
}

TEST_CASE("q-values are independent of the generator lift choice") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> rank(1, 4), shift(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    GramLattice l = random_even_lattice(rng, rank(rng), 6, 4000);
    DiscriminantData d = discriminant_theory(l);
    RatMat g = to_rat(d.nondegenerate_lattice().gram());
    for (Eigen::Index j = 0; j < d.gen_lifts().cols(); ++j) {
      RatVec w = d.gen_lifts().col(j);
      RatVec wz = w;
      for (Eigen::Index i = 0; i < wz.size(); ++i) wz(i) += Rat(shift(rng));
      auto half_norm = [&](const RatVec& v) {
        Rat acc(0);
        for (Eigen::Index i = 0; i < v.size(); ++i)
          for (Eigen::Index k = 0; k < v.size(); ++k) acc += v(i) * g(i, k) * v(k);
        return RationalMod1(acc / Rat(2));
      };
      CHECK(half_norm(w) == half_norm(wz));
    }
  }
}

TEST_CASE("element order from dual coordinates matches lift denominators") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> rank(1, 4), entry(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    GramLattice l = random_even_lattice(rng, rank(rng), 6, 4000);
    DiscriminantData d = discriminant_theory(l);
    IntVec c(l.rank());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = Int(entry(rng));
    RatVec w = dual_coords(l, c);
    Int denom(1);
    for (Eigen::Index i = 0; i < w.size(); ++i) denom = lcm(denom, w(i).den());
    CHECK(element_order(d.anyon_from_dual(c)) == denom);
  }
}

TEST_CASE("gauss-milgram phase equals signature mod 8") {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> rank(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    GramLattice l = random_even_lattice(rng, rank(rng), 8, 60000);
    DiscriminantData d = discriminant_theory(l);
    Signature s = signature(l);
    std::complex<double> gm = gauss_milgram(d.theory());
    double angle = 2.0 * std::numbers::pi * (s.positive - s.negative) / 8.0;
    std::complex<double> expect = std::polar(1.0, angle);
    CHECK(std::abs(gm - expect) < 1e-9);
  }
}

TEST_CASE("discriminant theory is a congruence invariant") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> rank(2, 4), pick(0, 3), sgn(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rank(rng);
    GramLattice l = random_even_lattice(rng, n, 5, 2000);
    // random unimodular: product of elementary column operations
    IntMat p = IntMat::Identity(n, n);
    for (int step = 0; step < 6; ++step) {
      int i = pick(rng) % n, j = pick(rng) % n;
      if (i == j) continue;
      IntMat e = IntMat::Identity(n, n);
      e(i, j) = Int(sgn(rng) ? 1 : -1);
      p = p * e;
    }
    GramLattice moved = congruent_transform(l, p);
    CHECK(moved.is_even());
    Signature a = signature(l), b = signature(moved);
    CHECK(a.positive == b.positive);
    CHECK(a.negative == b.negative);
    CHECK(equivalent_small(discriminant_theory(l).theory(),
                           discriminant_theory(moved).theory())
              .has_value());
    GramLattice stab = stabilize_hyperbolic(l);
    CHECK(stab.is_even());
    CHECK(equivalent_small(discriminant_theory(l).theory(),
                           discriminant_theory(stab).theory())
              .has_value());
  }
  CHECK(kind_of([&] {
          congruent_transform(toric_matrix(), IntMat::Zero(2, 2));
        }) == ErrorKind::InvalidArgument);
}
