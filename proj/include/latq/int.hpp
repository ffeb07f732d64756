#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "latq/error.hpp"

namespace latq {

namespace mp = boost::multiprecision;

// Arbitrary-precision integer. Thin value wrapper around cpp_int: keeps
// Eigen's overload resolution away from boost's own conversion machinery
// and gives the scalar a fixed, minimal surface.
class Int {
 public:
  Int() : v_(0) {}
  Int(int x) : v_(x) {}                // NOLINT: implicit by design (literals)
  Int(long x) : v_(x) {}               // NOLINT
  Int(long long x) : v_(x) {}          // NOLINT
  Int(unsigned long long x) : v_(x) {} // NOLINT
  explicit Int(const std::string& s) : v_(s) {}
  explicit Int(mp::cpp_int v) : v_(std::move(v)) {}

  friend Int operator+(const Int& a, const Int& b) { return Int(a.v_ + b.v_); }
  friend Int operator-(const Int& a, const Int& b) { return Int(a.v_ - b.v_); }
  friend Int operator*(const Int& a, const Int& b) { return Int(a.v_ * b.v_); }
  // Truncated division, like built-in integers.
  friend Int operator/(const Int& a, const Int& b) { return Int(a.v_ / b.v_); }
  friend Int operator%(const Int& a, const Int& b) { return Int(a.v_ % b.v_); }
  Int operator-() const { return Int(-v_); }

  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
  Int& operator/=(const Int& o) { v_ /= o.v_; return *this; }
  Int& operator%=(const Int& o) { v_ %= o.v_; return *this; }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
  friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_odd() const { return mp::bit_test(v_, 0); }
  bool is_even() const { return !is_odd(); }
  int sign() const { return v_.sign(); }

  bool fits_int64() const {
    return v_ >= (std::numeric_limits<std::int64_t>::min)() &&
           v_ <= (std::numeric_limits<std::int64_t>::max)();
  }
  std::int64_t to_int64() const {
    require(fits_int64(), "integer does not fit in 64 bits: " + str());
    return v_.convert_to<std::int64_t>();
  }
  double to_double() const { return v_.convert_to<double>(); }
  std::string str() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const Int& a) {
    return os << a.v_;
  }

  friend Int abs(const Int& a) { return Int(mp::abs(a.v_)); }
  friend Int gcd(const Int& a, const Int& b) { return Int(mp::gcd(a.v_, b.v_)); }
  friend Int lcm(const Int& a, const Int& b) { return Int(mp::lcm(a.v_, b.v_)); }

  // Floor square root of a nonnegative integer.
  friend Int isqrt(const Int& a) {
    require(a >= 0, "isqrt of negative integer");
    return Int(mp::sqrt(a.v_));
  }

  const mp::cpp_int& raw() const { return v_; }

 private:
  mp::cpp_int v_;
};

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (!(a % b).is_zero() && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  return -floor_div(-a, b);
}

// Nonnegative remainder: a - floor_div(a,b)*b for b > 0.
inline Int mod_floor(const Int& a, const Int& b) {
  Int r = a % b;
  if (r < 0) r += abs(b);
  return r;
}

inline Int pow2(int k) {
  Int r = 1;
  for (int i = 0; i < k; ++i) r *= 2;
  return r;
}

// Exact rational, always stored reduced with positive denominator.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int x) : v_(x) {}       // NOLINT
  Rat(long long x) : v_(x) {} // NOLINT
  Rat(const Int& x) : v_(x.raw()) {} // NOLINT
  Rat(const Int& num, const Int& den) : v_(num.raw(), den.raw()) {
    require(!den.is_zero(), "rational with zero denominator");
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    require(!b.is_zero(), "division by zero rational");
    return Rat(a.v_ / b.v_);
  }
  Rat operator-() const { return Rat(-v_); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    require(!o.is_zero(), "division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator(v_) == 1; }
  Int num() const { return Int(numerator(v_)); }
  Int den() const { return Int(denominator(v_)); }
  double to_double() const { return v_.convert_to<double>(); }

  std::string str() const {
    if (is_integer()) return numerator(v_).str();
    return numerator(v_).str() + "/" + denominator(v_).str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& a) {
    return os << a.str();
  }

  friend Rat abs(const Rat& a) { return Rat(mp::abs(a.v_)); }

 private:
  explicit Rat(mp::cpp_rational v) : v_(std::move(v)) {}
  mp::cpp_rational v_;
};

inline Int rat_floor(const Rat& a) { return floor_div(a.num(), a.den()); }
inline Int rat_ceil(const Rat& a) { return ceil_div(a.num(), a.den()); }

}  // namespace latq
