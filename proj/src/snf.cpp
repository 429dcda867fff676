#include "spinlink/snf.hpp"

namespace spinlink {

namespace {

bool is_lone(const IntMat& d, Eigen::Index k) {
  for (Eigen::Index i = k + 1; i < d.rows(); ++i)
    if (!d(i, k).is_zero()) return false;
  for (Eigen::Index j = k + 1; j < d.cols(); ++j)
    if (!d(k, j).is_zero()) return false;
  return true;
}

bool find_min_nonzero(const IntMat& d, Eigen::Index k, Eigen::Index& irow, Eigen::Index& icol) {
  bool found = false;
  Int best(0);
  for (Eigen::Index i = k; i < d.rows(); ++i) {
    for (Eigen::Index j = k; j < d.cols(); ++j) {
      if (d(i, j).is_zero()) continue;
      Int v = abs(d(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        irow = i;
        icol = j;
      }
    }
  }
  return found;
}

}  // namespace

SnfResult snf(const IntMat& a) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  SnfResult r;
  r.u = IntMat::Identity(m, m);
  r.v = IntMat::Identity(n, n);
  r.s = a;
  IntMat& d = r.s;

  const Eigen::Index steps = std::min(m, n);
  for (Eigen::Index k = 0; k < steps; ++k) {
    Eigen::Index irow = k, icol = k;
    if (!find_min_nonzero(d, k, irow, icol)) break;  // lower-right block is zero
    for (;;) {
      // Move the smallest nonzero entry to the pivot position.
      find_min_nonzero(d, k, irow, icol);
      if (irow != k) { d.row(k).swap(d.row(irow)); r.u.row(k).swap(r.u.row(irow)); }
      if (icol != k) { d.col(k).swap(d.col(icol)); r.v.col(k).swap(r.v.col(icol)); }

      bool reduced = true;
      for (Eigen::Index i = k + 1; i < m; ++i) {
        if (d(i, k).is_zero()) continue;
        Int q = d(i, k) / d(k, k);
        if (!q.is_zero()) { d.row(i) -= q * d.row(k); r.u.row(i) -= q * r.u.row(k); }
        if (!d(i, k).is_zero()) reduced = false;
      }
      for (Eigen::Index j = k + 1; j < n; ++j) {
        if (d(k, j).is_zero()) continue;
        Int q = d(k, j) / d(k, k);
        if (!q.is_zero()) { d.col(j) -= q * d.col(k); r.v.col(j) -= q * r.v.col(k); }
        if (!d(k, j).is_zero()) reduced = false;
      }
      if (!reduced || !is_lone(d, k)) continue;

      // Pivot must divide every remaining entry; if not, fold the offending
      // row in and keep reducing.
      Eigen::Index bi = -1;
      for (Eigen::Index i = k + 1; i < m && bi < 0; ++i)
        for (Eigen::Index j = k + 1; j < n; ++j)
          if (!(d(i, j) % d(k, k)).is_zero()) { bi = i; break; }
      if (bi < 0) break;
      d.row(k) += d.row(bi);
      r.u.row(k) += r.u.row(bi);
    }
    if (d(k, k).sign() < 0) {
      d.row(k) = -d.row(k);
      r.u.row(k) = -r.u.row(k);
    }
  }
  return r;
}

IntMat int_kernel(const IntMat& a) {
  SnfResult r = snf(a);
  const Eigen::Index rank = r.rank();
  const Eigen::Index n = a.cols();
  return r.v.rightCols(n - rank);
}

std::optional<IntVec> int_solve(const IntMat& a, const IntVec& b) {
  if (a.rows() != b.size()) fail(ErrorKind::InvalidArgument, "int_solve: dimension mismatch");
  SnfResult r = snf(a);
  IntVec ub = r.u * b;
  IntVec y = IntVec::Zero(a.cols());
  const Eigen::Index n = std::min(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const Int& s = i < n ? r.s(i, i) : Int(0);
    if (s.is_zero()) {
      if (!ub(i).is_zero()) return std::nullopt;
      continue;
    }
    if (!(ub(i) % s).is_zero()) return std::nullopt;
    y(i) = ub(i) / s;
  }
  return IntVec(r.v * y);
}

IntMat unimodular_inverse(const IntMat& p) {
  auto inv = rat_inverse(to_rat(p));
  if (!inv) fail(ErrorKind::InvalidArgument, "unimodular_inverse: matrix is singular");
  IntMat out(p.rows(), p.cols());
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      const Rat& x = (*inv)(i, j);
      if (!x.is_integer())
        fail(ErrorKind::InvalidArgument, "unimodular_inverse: matrix is not unimodular");
      out(i, j) = x.num();
    }
  }
  return out;
}

}  // namespace spinlink
