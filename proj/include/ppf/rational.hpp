#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ppf::num {

// Exact rational arithmetic on 64-bit numerator/denominator with overflow
// checks.  All quantities in this project are desk scale, so a checked
// int64 is preferred over arbitrary precision for speed and simplicity.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(std::int64_t n) : num_(n), den_(1) {}
  Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  std::int64_t as_integer() const {
    if (den_ != 1) throw std::runtime_error("Rat: not an integer: " + str());
    return num_;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::runtime_error("Rat: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat operator-() const { return Rat(-num_, den_); }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }

  // Serialized as "num" for integers and "num/den" otherwise.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  using i128 = __int128;

  static Rat make(i128 n, i128 d) {
    if (d < 0) { n = -n; d = -d; }
    if (d == 0) throw std::runtime_error("Rat: zero denominator");
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r;
    r.num_ = checked(n);
    r.den_ = checked(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  static std::int64_t checked(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("Rat: 64-bit overflow");
    return static_cast<std::int64_t>(v);
  }

  void normalize() {
    *this = make(num_, den_);
  }

  std::int64_t num_;
  std::int64_t den_;
};

} // namespace ppf::num
