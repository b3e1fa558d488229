#pragma once

#include <array>
#include <string>

#include "hradon/rational.hpp"

namespace hradon {

/// Quaternion over the rationals, coordinates on the basis 1, i, j, k.
/// Real scalars sit in w; complex scalars in (w, x).
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(Rational w) : w_(w) {}
  Quaternion(Rational w, Rational x) : w_(w), x_(x) {}
  Quaternion(Rational w, Rational x, Rational y, Rational z)
      : w_(w), x_(x), y_(y), z_(z) {}

  static Quaternion zero() { return Quaternion(); }
  static Quaternion one() { return Quaternion(Rational(1)); }
  static Quaternion i() { return Quaternion(Rational(0), Rational(1)); }
  static Quaternion j() {
    return Quaternion(Rational(0), Rational(0), Rational(1), Rational(0));
  }
  static Quaternion k() {
    return Quaternion(Rational(0), Rational(0), Rational(0), Rational(1));
  }

  const Rational& w() const { return w_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& z() const { return z_; }

  bool is_zero() const {
    return w_.is_zero() && x_.is_zero() && y_.is_zero() && z_.is_zero();
  }
  bool is_real() const { return x_.is_zero() && y_.is_zero() && z_.is_zero(); }
  bool is_complex() const { return y_.is_zero() && z_.is_zero(); }

  Quaternion conj() const { return Quaternion(w_, -x_, -y_, -z_); }
  Rational norm2() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }

  Quaternion inverse() const {
    Rational n = norm2();
    if (n.is_zero()) throw std::domain_error("inverse of zero quaternion");
    Quaternion c = conj();
    return Quaternion(c.w_ / n, c.x_ / n, c.y_ / n, c.z_ / n);
  }

  Quaternion operator-() const { return Quaternion(-w_, -x_, -y_, -z_); }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return Quaternion(a.w_ + b.w_, a.x_ + b.x_, a.y_ + b.y_, a.z_ + b.z_);
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return a + (-b);
  }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    // Hamilton product, ij = k.
    return Quaternion(
        a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
        a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
        a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
        a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_);
  }

  Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w_ == b.w_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) {
    return !(a == b);
  }

  /// Split q = alpha + j*beta with alpha, beta complex; returns
  /// {Re alpha, Im alpha, Re beta, Im beta}. Note j*(y - z i) = y j + z k.
  std::array<Rational, 4> complex_split() const {
    return {w_, x_, y_, -z_};
  }
  static Quaternion from_complex_split(const Rational& ar, const Rational& ai,
                                       const Rational& br, const Rational& bi) {
    return Quaternion(ar, ai, br, -bi);
  }

  std::string to_string() const;

 private:
  Rational w_, x_, y_, z_;
};

}  // namespace hradon
