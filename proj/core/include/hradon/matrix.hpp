#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hradon/quaternion.hpp"

namespace hradon {

enum class Field { Real, Complex, Quaternion };

std::string field_name(Field f);

struct dimension_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct field_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dense matrix over R, C or H with exact rational components.
/// Entries are stored as quaternions; the field tag restricts which
/// components may be nonzero. Scalars act on the left.
class ExactMatrix {
 public:
  ExactMatrix() : field_(Field::Real), rows_(0), cols_(0) {}
  ExactMatrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols) {}

  static ExactMatrix zero(Field f, std::size_t n, std::size_t m) {
    return ExactMatrix(f, n, m);
  }
  static ExactMatrix identity(Field f, std::size_t n);
  /// diag(I_p, -I_q)
  static ExactMatrix ipq(Field f, std::size_t p, std::size_t q);
  /// [[0, -I],[I, 0]] of size n (n even)
  static ExactMatrix j_form(Field f, std::size_t n);
  static ExactMatrix scalar(Field f, std::size_t n, const Quaternion& c);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Quaternion& at(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }
  Quaternion& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

  void set(std::size_t r, std::size_t c, const Quaternion& v);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  ExactMatrix operator-() const;
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) {
    return !(a == b);
  }

  /// Left scalar multiple c * A.
  ExactMatrix scaled(const Quaternion& c) const;

  ExactMatrix transpose() const;
  ExactMatrix conj_transpose() const;
  ExactMatrix entrywise_conj() const;

  Quaternion trace() const;
  Rational real_trace() const { return trace().w(); }

  bool is_hermitian() const { return *this == conj_transpose(); }

  /// Widen R -> C or C -> H. Entries are unchanged.
  ExactMatrix with_field(Field f) const;

  /// Embeds into complex matrices: R entrywise, H via the 2x2 block
  /// convention A + jB |-> [[A, -conj B],[B, conj A]]. C passes through.
  ExactMatrix complexify() const;

  /// 2x2 block assembly; all blocks must agree in size and field.
  static ExactMatrix block2(const ExactMatrix& a, const ExactMatrix& b,
                            const ExactMatrix& c, const ExactMatrix& d);

  /// Kronecker product (left factor indexes the coarse blocks).
  static ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

  ExactMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                        std::size_t nc) const;

  std::string to_string() const;

 private:
  void check_entry_field(const Quaternion& v) const;

  Field field_;
  std::size_t rows_, cols_;
  std::vector<Quaternion> e_;
};

/// a*b + b*a
ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace hradon
