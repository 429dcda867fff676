#include "spinlink/lattice.hpp"

namespace spinlink {

GramLattice::GramLattice(IntMat gram) : gram_(std::move(gram)) {
  if (!is_symmetric(gram_))
    fail(ErrorKind::InvalidArgument, "Gram matrix must be symmetric");
}

bool GramLattice::is_even() const {
  for (Eigen::Index i = 0; i < gram_.rows(); ++i)
    if (gram_(i, i).is_odd()) return false;
  return true;
}

Signature signature(const GramLattice& l) {
  const Eigen::Index n = l.rank();
  RatMat m = to_rat(l.gram());
  Signature sig;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (m(i, i).is_zero()) {
      Eigen::Index pivot = -1;
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (!m(j, j).is_zero()) { pivot = j; break; }
      if (pivot >= 0) {
        m.row(i).swap(m.row(pivot));
        m.col(i).swap(m.col(pivot));
      } else {
        // No diagonal pivot left; synthesize one from an off-diagonal entry
        // (congruence by adding one row/column into another).
        Eigen::Index a = -1, b = -1;
        for (Eigen::Index r = i; r < n && a < 0; ++r)
          for (Eigen::Index c = r + 1; c < n; ++c)
            if (!m(r, c).is_zero()) { a = r; b = c; break; }
        if (a < 0) {
          sig.zero += static_cast<int>(n - i);
          return sig;
        }
        if (a != i) {
          m.row(i).swap(m.row(a));
          m.col(i).swap(m.col(a));
          if (b == i) b = a;
        }
        m.row(i) += m.row(b);
        m.col(i) += m.col(b);
      }
    }
    const Rat pivot = m(i, i);
    if (pivot.sign() > 0) ++sig.positive; else ++sig.negative;
    for (Eigen::Index r = i + 1; r < n; ++r) {
      if (m(r, i).is_zero()) continue;
      Rat f = m(r, i) / pivot;
      m.row(r) -= f * m.row(i);
      m.col(r) -= f * m.col(i);
    }
  }
  return sig;
}

RadicalQuotientResult radical_quotient(const GramLattice& l) {
  const Eigen::Index n = l.rank();
  SnfResult r = snf(l.gram());
  const Eigen::Index rank = r.rank();
  RadicalQuotientResult out;
  if (rank == n) {
    out.lattice = l;
    out.radical_basis = IntMat(n, 0);
    out.embedding = IntMat::Identity(n, n);
    out.projection = IntMat::Identity(n, n);
    return out;
  }
  out.radical_basis = r.v.rightCols(n - rank);
  out.embedding = r.v.leftCols(rank);
  IntMat vinv = unimodular_inverse(r.v);
  out.projection = vinv.topRows(rank);
  IntMat reduced = out.embedding.transpose() * l.gram() * out.embedding;
  out.lattice = GramLattice(std::move(reduced));
  return out;
}

RatVec dual_coords(const GramLattice& l, const IntVec& c) {
  if (c.size() != l.rank())
    fail(ErrorKind::InvalidArgument, "dual_coords: vector length does not match rank");
  auto inv = rat_inverse(to_rat(l.gram()));
  if (!inv) fail(ErrorKind::DegenerateForm, "dual_coords requires a nondegenerate form");
  return *inv * to_rat(c);
}

GroupElement DiscriminantData::anyon_from_dual(const IntVec& c) const {
  if (c.size() != quotient_.rank())
    fail(ErrorKind::InvalidArgument, "dual coordinate length does not match lattice rank");
  const int k = theory_.group().rank();
  std::vector<Int> x(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    Int acc(0);
    for (Eigen::Index j = 0; j < c.size(); ++j) acc += class_map_(i, j) * c(j);
    x[static_cast<std::size_t>(i)] = acc;  // GroupElement reduces
  }
  return GroupElement(theory_.group(), std::move(x));
}

GroupElement DiscriminantData::anyon_from_meridian(const IntVec& c) const {
  if (c.size() != radical_basis_.rows())
    fail(ErrorKind::InvalidArgument, "meridian coordinate length does not match lattice rank");
  IntVec pairing = radical_basis_.transpose() * c;
  for (Eigen::Index i = 0; i < pairing.size(); ++i)
    if (!pairing(i).is_zero())
      fail(ErrorKind::InvalidArgument, "meridian class is not torsion");
  IntVec reduced = embedding_.transpose() * c;
  return anyon_from_dual(reduced);
}

IntVec DiscriminantData::dual_of_anyon(const GroupElement& a) const {
  if (!(a.group() == theory_.group()))
    fail(ErrorKind::InvalidArgument, "anyon does not belong to this discriminant group");
  IntVec c = IntVec::Zero(quotient_.rank());
  for (int j = 0; j < theory_.group().rank(); ++j)
    c += a.coeffs()[static_cast<std::size_t>(j)] * duals_.col(j);
  return c;
}

RatVec DiscriminantData::lift_of_anyon(const GroupElement& a) const {
  if (!(a.group() == theory_.group()))
    fail(ErrorKind::InvalidArgument, "anyon does not belong to this discriminant group");
  RatVec w = RatVec::Zero(quotient_.rank());
  for (int j = 0; j < theory_.group().rank(); ++j)
    w += Rat(a.coeffs()[static_cast<std::size_t>(j)]) * gen_lifts_.col(j);
  return w;
}

DiscriminantData discriminant_theory(const GramLattice& l) {
  if (!l.is_even())
    fail(ErrorKind::OddLattice, "discriminant theory requires an even lattice");
  DiscriminantData out;
  RadicalQuotientResult rq = radical_quotient(l);
  out.quotient_ = rq.lattice;
  out.radical_basis_ = rq.radical_basis;
  out.embedding_ = rq.embedding;
  out.projection_ = rq.projection;

  const IntMat& g = rq.lattice.gram();
  const Eigen::Index r = g.rows();
  SnfResult s = snf(g);
  std::vector<Int> orders;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < r; ++i) {
    if (s.s(i, i) > Int(1)) {
      orders.push_back(s.s(i, i));
      kept.push_back(i);
    }
  }
  const auto k = static_cast<Eigen::Index>(kept.size());
  FinAbGroup group = FinAbGroup::from_canonical(orders);

  out.gen_lifts_ = RatMat(r, k);
  for (Eigen::Index j = 0; j < k; ++j)
    for (Eigen::Index i = 0; i < r; ++i)
      out.gen_lifts_(i, j) = Rat(s.v(i, kept[static_cast<std::size_t>(j)]), s.s(kept[static_cast<std::size_t>(j)], kept[static_cast<std::size_t>(j)]));

  IntMat uinv = unimodular_inverse(s.u);
  out.duals_ = IntMat(r, k);
  for (Eigen::Index j = 0; j < k; ++j) out.duals_.col(j) = uinv.col(kept[static_cast<std::size_t>(j)]);
  out.class_map_ = IntMat(k, r);
  for (Eigen::Index i = 0; i < k; ++i) out.class_map_.row(i) = s.u.row(kept[static_cast<std::size_t>(i)]);

  // Spins and braidings of the generator classes, exactly.
  std::vector<RationalMod1> q(static_cast<std::size_t>(k));
  QzMat lmat(k, k);
  RatMat gr = to_rat(g);
  for (Eigen::Index a = 0; a < k; ++a) {
    RatVec ga = gr * out.gen_lifts_.col(a);
    for (Eigen::Index b = 0; b < k; ++b) {
      Rat pairing(0);
      for (Eigen::Index i = 0; i < r; ++i) pairing += out.gen_lifts_(i, b) * ga(i);
      lmat(a, b) = RationalMod1(pairing);
      if (a == b) q[static_cast<std::size_t>(a)] = RationalMod1(pairing / Rat(2));
    }
  }
  out.theory_ = AnyonTheory::make(group, std::move(q), std::move(lmat));
  if (!out.theory_.nondegenerate())
    fail(ErrorKind::DegenerateForm, "discriminant form unexpectedly degenerate");
  if (!(abs(det(g)) == group.order()))
    fail(ErrorKind::InvalidForm, "discriminant group order does not match determinant");
  return out;
}

GramLattice stabilize_hyperbolic(const GramLattice& l) {
  const Eigen::Index n = l.rank();
  IntMat g = IntMat::Zero(n + 2, n + 2);
  g.topLeftCorner(n, n) = l.gram();
  g(n, n + 1) = Int(1);
  g(n + 1, n) = Int(1);
  return GramLattice(std::move(g));
}

GramLattice congruent_transform(const GramLattice& l, const IntMat& p) {
  if (p.rows() != l.rank() || p.cols() != l.rank())
    fail(ErrorKind::InvalidArgument, "basis change has wrong dimensions");
  Int d = det(p);
  if (!(d == Int(1) || d == Int(-1)))
    fail(ErrorKind::InvalidArgument, "basis change must be unimodular");
  IntMat g = p.transpose() * l.gram() * p;
  return GramLattice(std::move(g));
}

}  // namespace spinlink
