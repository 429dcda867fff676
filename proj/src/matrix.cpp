#include "spinlink/matrix.hpp"

namespace spinlink {

RatMat to_rat(const IntMat& a) {
  RatMat r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
  return r;
}

RatVec to_rat(const IntVec& a) {
  RatVec r(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) r(i) = Rat(a(i));
  return r;
}

Eigen::MatrixXd to_real(const IntMat& a) {
  Eigen::MatrixXd r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = to_double(a(i, j));
  return r;
}

Eigen::VectorXd to_real(const RatVec& a) {
  Eigen::VectorXd r(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) r(i) = to_double(a(i));
  return r;
}

Eigen::MatrixXd to_real(const RatMat& a) {
  Eigen::MatrixXd r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = to_double(a(i, j));
  return r;
}

Int det(const IntMat& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::InvalidArgument, "det: matrix not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return Int(1);
  IntMat m = a;
  Int prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      Eigen::Index pivot = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero()) { pivot = i; break; }
      if (pivot < 0) return Int(0);
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Int(0);
    }
    prev = m(k, k);
  }
  Int d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

namespace {

// Row-reduce [a | rhs] in place; returns pivot columns.
std::vector<Eigen::Index> eliminate(RatMat& m, Eigen::Index lhs_cols) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < lhs_cols && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    Rat inv = Rat(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Rat f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<RatMat> rat_inverse(const RatMat& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::InvalidArgument, "rat_inverse: matrix not square");
  const Eigen::Index n = a.rows();
  RatMat m(n, 2 * n);
  m.leftCols(n) = a;
  m.rightCols(n) = RatMat::Identity(n, n);
  auto pivots = eliminate(m, n);
  if (static_cast<Eigen::Index>(pivots.size()) != n) return std::nullopt;
  return RatMat(m.rightCols(n));
}

std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b) {
  if (a.rows() != b.size()) fail(ErrorKind::InvalidArgument, "rat_solve: dimension mismatch");
  RatMat m(a.rows(), a.cols() + 1);
  m.leftCols(a.cols()) = a;
  m.col(a.cols()) = b;
  auto pivots = eliminate(m, a.cols());
  // Inconsistent iff a nonzero rhs entry remains on a zero lhs row.
  for (Eigen::Index i = pivots.size(); i < m.rows(); ++i)
    if (!m(i, a.cols()).is_zero()) return std::nullopt;
  RatVec x = RatVec::Zero(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x(pivots[k]) = m(k, a.cols());
  return x;
}

bool is_symmetric(const IntMat& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j)
      if (!(a(i, j) == a(j, i))) return false;
  return true;
}

}  // namespace spinlink
