#pragma once

// Smith normal form over the integers with full transform tracking, and the
// integer-kernel computation derived from it.

#include "spinlink/matrix.hpp"

namespace spinlink {

struct SnfResult {
  IntMat u;  // unimodular, rows x rows
  IntMat s;  // diagonal, s(i,i) >= 0 and s(i,i) | s(i+1,i+1)
  IntMat v;  // unimodular, cols x cols
  // Invariant: u * a * v == s for the input a.

  Eigen::Index rank() const {
    Eigen::Index r = 0;
    const Eigen::Index n = std::min(s.rows(), s.cols());
    for (Eigen::Index i = 0; i < n; ++i)
      if (!s(i, i).is_zero()) ++r;
    return r;
  }
};

SnfResult snf(const IntMat& a);

// Basis of { x : a x = 0 } as matrix columns; the basis spans a direct
// summand of Z^cols (it comes from unimodular columns of the SNF transform).
IntMat int_kernel(const IntMat& a);

// Exact inverse of a unimodular integer matrix.
IntMat unimodular_inverse(const IntMat& p);

// One integer solution of a x = b, or nullopt when none exists.
std::optional<IntVec> int_solve(const IntMat& a, const IntVec& b);

}  // namespace spinlink
