#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hradon {

struct overflow_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer add overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer sub overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer mul overflow");
  return r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

/// Arbitrary rational with eagerly normalized int64 components.
/// Denominator is always positive and gcd(num, den) == 1, so equality
/// is plain component comparison.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    std::int64_t g = detail::gcd64(a.den_, b.den_);
    std::int64_t da = a.den_ / g;
    std::int64_t db = b.den_ / g;
    std::int64_t n = detail::checked_add(detail::checked_mul(a.num_, db),
                                         detail::checked_mul(b.num_, da));
    std::int64_t d = detail::checked_mul(detail::checked_mul(a.den_, db), 1);
    return Rational(n, d);
  }

  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && (a.num_ == 1 || a.num_ == -1))
      return a.num_ == 1 ? b : -b;
    if (b.den_ == 1 && (b.num_ == 1 || b.num_ == -1))
      return b.num_ == 1 ? a : -a;
    std::int64_t g1 = detail::gcd64(a.num_, b.den_);
    std::int64_t g2 = detail::gcd64(b.num_, a.den_);
    std::int64_t n = detail::checked_mul(a.num_ / g1, b.num_ / g2);
    std::int64_t d = detail::checked_mul(a.den_ / g2, b.den_ / g1);
    return Rational(n, d);
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero rational");
    return a * Rational(b.den_, b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// 2-adic valuation; requires a nonzero value.
  int ord2() const;

  std::string to_string() const;
  static Rational parse(const std::string& s);

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = detail::gcd64(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace hradon
