#pragma once

// Exact scalars used throughout the engine: arbitrary-precision integers and
// rationals wrapped as plain value types so they can serve as Eigen matrix
// scalars. All exact linear algebra in the project runs on Eigen dense
// matrices over these types; floating point only enters in the theta/eta
// machinery.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "spinlink/error.hpp"

namespace spinlink {

namespace mp = boost::multiprecision;

class Int {
 public:
  Int() : v_(0) {}
  Int(int v) : v_(v) {}
  Int(long v) : v_(v) {}
  Int(long long v) : v_(v) {}
  Int(unsigned v) : v_(v) {}
  Int(unsigned long v) : v_(v) {}
  Int(unsigned long long v) : v_(v) {}
  explicit Int(const mp::cpp_int& v) : v_(v) {}
  explicit Int(mp::cpp_int&& v) : v_(std::move(v)) {}
  explicit Int(const std::string& decimal) : v_(decimal) {}

  const mp::cpp_int& raw() const { return v_; }

  friend Int operator+(const Int& a, const Int& b) { return Int(mp::cpp_int(a.v_ + b.v_)); }
  friend Int operator-(const Int& a, const Int& b) { return Int(mp::cpp_int(a.v_ - b.v_)); }
  friend Int operator*(const Int& a, const Int& b) { return Int(mp::cpp_int(a.v_ * b.v_)); }
  // Truncated toward zero, like built-in integers.
  friend Int operator/(const Int& a, const Int& b) { return Int(mp::cpp_int(a.v_ / b.v_)); }
  friend Int operator%(const Int& a, const Int& b) { return Int(mp::cpp_int(a.v_ % b.v_)); }
  Int operator-() const { return Int(mp::cpp_int(-v_)); }

  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
  Int& operator/=(const Int& o) { v_ /= o.v_; return *this; }
  Int& operator%=(const Int& o) { v_ %= o.v_; return *this; }
  Int& operator++() { ++v_; return *this; }
  Int& operator--() { --v_; return *this; }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
    int c = a.v_.compare(b.v_);
    return c <=> 0;
  }

  bool is_zero() const { return v_.is_zero(); }
  bool is_odd() const { return mp::bit_test(mp::cpp_int(mp::abs(v_)), 0); }
  bool is_even() const { return !is_odd(); }
  int sign() const { return v_.sign(); }

  std::string str() const { return v_.str(); }
  friend std::ostream& operator<<(std::ostream& os, const Int& x);

 private:
  mp::cpp_int v_;
};

inline Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Remainder in [0, n) for n > 0.
Int mod_floor(const Int& a, const Int& n);

// Checked narrowing; throws ResourceLimit if out of range.
std::int64_t to_int64(const Int& a);
double to_double(const Int& a);

class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int v) : v_(v) {}
  Rat(long v) : v_(v) {}
  Rat(const Int& v) : v_(v.raw()) {}
  Rat(const Int& num, const Int& den);
  explicit Rat(const mp::cpp_rational& v) : v_(v) {}

  const mp::cpp_rational& raw() const { return v_; }
  Int num() const { return Int(mp::cpp_int(numerator(v_))); }
  Int den() const { return Int(mp::cpp_int(denominator(v_))); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mp::cpp_rational(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mp::cpp_rational(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mp::cpp_rational(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { return Rat(mp::cpp_rational(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = a.v_.compare(b.v_);
    return c <=> 0;
  }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator(v_) == 1; }
  int sign() const { return v_.sign(); }

  // Largest integer <= value.
  Int floor() const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rat& x);

 private:
  mp::cpp_rational v_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }
double to_double(const Rat& a);

}  // namespace spinlink
