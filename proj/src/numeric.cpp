#include "spinlink/numeric.hpp"

#include <limits>
#include <ostream>

namespace spinlink {

std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.v_; }

Int gcd(const Int& a, const Int& b) { return Int(mp::gcd(a.raw(), b.raw())); }

Int lcm(const Int& a, const Int& b) { return Int(mp::lcm(a.raw(), b.raw())); }

Int mod_floor(const Int& a, const Int& n) {
  if (n <= Int(0)) fail(ErrorKind::InvalidArgument, "mod_floor: modulus must be positive");
  Int r = a % n;
  if (r.sign() < 0) r += n;
  return r;
}

std::int64_t to_int64(const Int& a) {
  static const Int lo(std::numeric_limits<std::int64_t>::min());
  static const Int hi(std::numeric_limits<std::int64_t>::max());
  if (a < lo || a > hi)
    fail(ErrorKind::ResourceLimit, "integer too large for 64-bit conversion: " + a.str());
  return a.raw().convert_to<std::int64_t>();
}

double to_double(const Int& a) { return a.raw().convert_to<double>(); }

Rat::Rat(const Int& num, const Int& den) {
  if (den.is_zero()) fail(ErrorKind::InvalidArgument, "rational with zero denominator");
  v_ = mp::cpp_rational(num.raw(), den.raw());
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidArgument, "rational division by zero");
  return Rat(mp::cpp_rational(a.v_ / b.v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) fail(ErrorKind::InvalidArgument, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Int Rat::floor() const {
  mp::cpp_int q = numerator(v_) / denominator(v_);
  if (v_.sign() < 0 && q * denominator(v_) != numerator(v_)) --q;
  return Int(q);
}

std::string Rat::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

double to_double(const Rat& a) { return a.raw().convert_to<double>(); }

}  // namespace spinlink
