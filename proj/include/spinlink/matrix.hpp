#pragma once

// Eigen dense types over the exact scalars, plus the exact linear-algebra
// helpers the rest of the engine is built on (fraction-free determinant,
// rational elimination, integer kernels).

#include <Eigen/Dense>

#include <optional>

#include "spinlink/numeric.hpp"

namespace Eigen {

template <>
struct NumTraits<spinlink::Int> : GenericNumTraits<spinlink::Int> {
  typedef spinlink::Int Real;
  typedef spinlink::Int NonInteger;
  typedef spinlink::Int Nested;
  typedef spinlink::Int Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60,
  };
  static inline Real epsilon() { return spinlink::Int(0); }
  static inline Real dummy_precision() { return spinlink::Int(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<spinlink::Rat> : GenericNumTraits<spinlink::Rat> {
  typedef spinlink::Rat Real;
  typedef spinlink::Rat NonInteger;
  typedef spinlink::Rat Nested;
  typedef spinlink::Rat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 100,
    MulCost = 100,
  };
  static inline Real epsilon() { return spinlink::Rat(0); }
  static inline Real dummy_precision() { return spinlink::Rat(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace spinlink {

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

RatMat to_rat(const IntMat& a);
RatVec to_rat(const IntVec& a);
Eigen::MatrixXd to_real(const IntMat& a);
Eigen::VectorXd to_real(const RatVec& a);
Eigen::MatrixXd to_real(const RatMat& a);

// Exact determinant (Bareiss fraction-free elimination).
Int det(const IntMat& a);

// Exact inverse of a square rational matrix; nullopt if singular.
std::optional<RatMat> rat_inverse(const RatMat& a);

// One exact solution of A x = b, free variables set to zero; nullopt if the
// system is inconsistent.
std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b);

bool is_symmetric(const IntMat& a);

}  // namespace spinlink
