#pragma once

// Exact arithmetic for Q/Z and finite abelian groups in Smith canonical form:
// elements, subgroup closure, quotients, and presentation normalization.

#include <complex>
#include <cstdint>
#include <vector>

#include "spinlink/snf.hpp"

namespace spinlink {

inline constexpr std::int64_t kDefaultEnumerationBound = std::int64_t(1) << 20;

// An exact element of Q/Z, kept as the canonical representative n/d with
// 0 <= n < d and gcd(n, d) = 1.
class RationalMod1 {
 public:
  RationalMod1() : num_(0), den_(1) {}
  RationalMod1(int) : num_(0), den_(1) {}  // integers are 0 mod 1
  RationalMod1(const Int& n, const Int& d);
  explicit RationalMod1(const Rat& r);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  Rat to_rat() const { return Rat(num_, den_); }
  bool is_zero() const { return num_.is_zero(); }
  double value() const { return to_double(to_rat()); }

  friend RationalMod1 operator+(const RationalMod1& a, const RationalMod1& b) {
    return RationalMod1(a.to_rat() + b.to_rat());
  }
  friend RationalMod1 operator-(const RationalMod1& a, const RationalMod1& b) {
    return RationalMod1(a.to_rat() - b.to_rat());
  }
  RationalMod1 operator-() const { return RationalMod1(Rat(-num_, den_)); }
  friend RationalMod1 operator*(const Int& k, const RationalMod1& a) {
    return RationalMod1(Rat(k) * a.to_rat());
  }
  RationalMod1& operator+=(const RationalMod1& o) { return *this = *this + o; }

  friend bool operator==(const RationalMod1& a, const RationalMod1& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const RationalMod1& a, const RationalMod1& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string str() const { return num_.str() + "/" + den_.str(); }

 private:
  Int num_;
  Int den_;
};

inline RationalMod1 qz_make(const Int& n, const Int& d) { return RationalMod1(n, d); }

// e^{2 pi i x}, exact for quarter-integer x.
std::complex<double> phase(const RationalMod1& x);

// Finite abelian group presented by its elementary-divisor chain
// d_1 | d_2 | ... | d_k with every d_i >= 2. The trivial group has rank 0.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  // Normalizing constructor: drops order-1 factors and merges the rest into
  // the canonical divisibility chain (Z2 x Z3 becomes Z6).
  static FinAbGroup from_orders(std::vector<Int> orders);

  // Trusted fast path for orders already in canonical form.
  static FinAbGroup from_canonical(std::vector<Int> orders);

  int rank() const { return static_cast<int>(orders_.size()); }
  const std::vector<Int>& orders() const { return orders_; }
  Int order() const;
  bool is_trivial() const { return orders_.empty(); }

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  std::vector<Int> orders_;
};

inline FinAbGroup group_from_orders(std::vector<Int> orders) {
  return FinAbGroup::from_orders(std::move(orders));
}

class GroupElement {
 public:
  GroupElement(FinAbGroup group, std::vector<Int> coeffs);  // reduces mod orders

  const FinAbGroup& group() const { return group_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_identity() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

 private:
  FinAbGroup group_;
  std::vector<Int> coeffs_;
};

GroupElement identity_element(const FinAbGroup& g);
GroupElement element_add(const GroupElement& a, const GroupElement& b);
GroupElement element_neg(const GroupElement& a);
GroupElement element_scale(const Int& k, const GroupElement& a);
Int element_order(const GroupElement& a);

// Canonical enumeration order: index i enumerates coefficients mixed-radix
// with the first coordinate varying fastest.
std::vector<std::vector<Int>> enumerate_coeffs(const FinAbGroup& g,
                                               std::int64_t bound = kDefaultEnumerationBound);
std::int64_t element_index(const FinAbGroup& g, const std::vector<Int>& coeffs);

// Subgroup with a cached, canonically sorted member enumeration. Each member
// also carries one representation in terms of the listed generators, which
// downstream quotient constructions rely on.
class Subgroup {
 public:
  const FinAbGroup& group() const { return group_; }
  const std::vector<std::vector<Int>>& generators() const { return gens_; }
  const std::vector<std::vector<Int>>& members() const { return members_; }
  Int order() const { return Int(static_cast<long long>(members_.size())); }
  bool contains(const std::vector<Int>& coeffs) const;
  // Representation of a member as an integer combination of generators().
  const std::vector<Int>& rep_of(const std::vector<Int>& coeffs) const;

  friend Subgroup subgroup_generate_coeffs(const FinAbGroup&, std::vector<std::vector<Int>>,
                                           std::int64_t);

 private:
  FinAbGroup group_;
  std::vector<std::vector<Int>> gens_;
  std::vector<std::vector<Int>> members_;
  std::vector<std::vector<Int>> reps_;
};

Subgroup subgroup_generate(const FinAbGroup& g, const std::vector<GroupElement>& gens,
                           std::int64_t bound = kDefaultEnumerationBound);
Subgroup subgroup_generate_coeffs(const FinAbGroup& g, std::vector<std::vector<Int>> gens,
                                  std::int64_t bound = kDefaultEnumerationBound);

// Homomorphism given on canonical coordinates: x -> reduce(matrix * x).
struct GroupHom {
  FinAbGroup domain;
  FinAbGroup codomain;
  IntMat matrix;  // codomain.rank() x domain.rank()

  std::vector<Int> apply(const std::vector<Int>& coeffs) const;
  GroupElement operator()(const GroupElement& a) const;
};

struct QuotientResult {
  FinAbGroup group;
  GroupHom projection;                       // ambient -> quotient
  std::vector<std::vector<Int>> gen_lifts;   // quotient generators lifted to the ambient group
};

QuotientResult quotient(const FinAbGroup& g, const Subgroup& sub);

// Smith-canonical form of Z^k modulo the column span of `relations`,
// with coordinate maps in both directions. The quotient must be finite.
struct Presentation {
  FinAbGroup group;
  IntMat to_canonical;  // group.rank() x k
  IntMat gen_lifts;     // k x group.rank(); columns lift the canonical generators
};

Presentation normalize_presentation(Eigen::Index k, const IntMat& relations);

// A subgroup re-expressed as an abstract group in canonical form, with maps
// back and forth.
struct AbstractSubgroup {
  FinAbGroup group;
  std::vector<std::vector<Int>> gen_lifts;  // canonical generators as ambient coefficients
  IntMat coord_matrix;                      // group.rank() x #subgroup-generators

  // Abstract coordinates of an ambient member of the subgroup.
  std::vector<Int> coords_of(const Subgroup& sub, const std::vector<Int>& member) const;
};

AbstractSubgroup subgroup_to_abstract(const Subgroup& sub);

}  // namespace spinlink

namespace Eigen {

template <>
struct NumTraits<spinlink::RationalMod1> : GenericNumTraits<spinlink::RationalMod1> {
  typedef spinlink::RationalMod1 Real;
  typedef spinlink::RationalMod1 NonInteger;
  typedef spinlink::RationalMod1 Nested;
  typedef spinlink::RationalMod1 Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 100,
    MulCost = 100,
  };
  static inline Real epsilon() { return spinlink::RationalMod1(); }
  static inline Real dummy_precision() { return spinlink::RationalMod1(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace spinlink {
using QzMat = Eigen::Matrix<RationalMod1, Eigen::Dynamic, Eigen::Dynamic>;
}
