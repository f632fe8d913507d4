// Exact rational arithmetic on checked 64-bit integers.
// Any overflow throws instead of wrapping.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pseudoflat {

namespace detail {

inline std::int64_t checked_narrow(__int128 v, const char* what) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
    throw std::overflow_error(what);
  return static_cast<std::int64_t>(v);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  return checked_narrow(static_cast<__int128>(a) + b, "rational addition overflow");
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  return checked_narrow(static_cast<__int128>(a) * b, "rational multiplication overflow");
}

}  // namespace detail

// Normalized fraction: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}  // implicit: integers embed in the field
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const {
    Rational r;
    r.num_ = detail::checked_narrow(-static_cast<__int128>(num_), "rational negation overflow");
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 den = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(num, den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return from_wide(static_cast<__int128>(a.num_) * b.den_,
                     static_cast<__int128>(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  static Rational from_wide(__int128 num, __int128 den) {
    if (den < 0) { num = -num; den = -den; }
    __int128 g = wide_gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    Rational r;
    r.num_ = detail::checked_narrow(num, "rational overflow");
    r.den_ = detail::checked_narrow(den, "rational overflow");
    if (r.num_ == 0) r.den_ = 1;
    return r;
  }

  static __int128 wide_gcd(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = detail::checked_narrow(-static_cast<__int128>(num_), "rational overflow");
      den_ = detail::checked_narrow(-static_cast<__int128>(den_), "rational overflow");
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace pseudoflat
