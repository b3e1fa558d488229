#include "hradon/matrix.hpp"

#include <sstream>

namespace hradon {

std::string field_name(Field f) {
  switch (f) {
    case Field::Real: return "R";
    case Field::Complex: return "C";
    case Field::Quaternion: return "H";
  }
  return "?";
}

void ExactMatrix::check_entry_field(const Quaternion& v) const {
  switch (field_) {
    case Field::Real:
      if (!v.is_real()) throw field_mismatch("non-real entry in R matrix");
      break;
    case Field::Complex:
      if (!v.is_complex()) throw field_mismatch("non-complex entry in C matrix");
      break;
    case Field::Quaternion:
      break;
  }
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Quaternion& v) {
  check_entry_field(v);
  e_[r * cols_ + c] = v;
}

ExactMatrix ExactMatrix::identity(Field f, std::size_t n) {
  ExactMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Quaternion::one();
  return m;
}

ExactMatrix ExactMatrix::ipq(Field f, std::size_t p, std::size_t q) {
  ExactMatrix m(f, p + q, p + q);
  for (std::size_t i = 0; i < p; ++i) m.at(i, i) = Quaternion::one();
  for (std::size_t i = p; i < p + q; ++i) m.at(i, i) = -Quaternion::one();
  return m;
}

ExactMatrix ExactMatrix::j_form(Field f, std::size_t n) {
  if (n % 2 != 0) throw dimension_mismatch("j_form needs even size");
  std::size_t h = n / 2;
  ExactMatrix m(f, n, n);
  for (std::size_t i = 0; i < h; ++i) {
    m.at(i, h + i) = -Quaternion::one();
    m.at(h + i, i) = Quaternion::one();
  }
  return m;
}

ExactMatrix ExactMatrix::scalar(Field f, std::size_t n, const Quaternion& c) {
  ExactMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, c);
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
  return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field_ != b.field_) throw field_mismatch("matrix add: field mismatch");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw dimension_mismatch("matrix add: shape mismatch");
  ExactMatrix m(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
  return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  return a + (-b);
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field_ != b.field_) throw field_mismatch("matrix mul: field mismatch");
  if (a.cols_ != b.rows_) throw dimension_mismatch("matrix mul: shape mismatch");
  ExactMatrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Quaternion& aik = a.e_[i * a.cols_ + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Quaternion& bkj = b.e_[k * b.cols_ + j];
        if (bkj.is_zero()) continue;
        m.e_[i * m.cols_ + j] += aik * bkj;
      }
    }
  }
  return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.e_ == b.e_;
}

ExactMatrix ExactMatrix::scaled(const Quaternion& c) const {
  ExactMatrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    Quaternion v = c * e_[i];
    m.check_entry_field(v);
    m.e_[i] = v;
  }
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

ExactMatrix ExactMatrix::conj_transpose() const {
  ExactMatrix m(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c).conj();
  return m;
}

ExactMatrix ExactMatrix::entrywise_conj() const {
  ExactMatrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i].conj();
  return m;
}

Quaternion ExactMatrix::trace() const {
  if (!is_square()) throw dimension_mismatch("trace of non-square matrix");
  Quaternion t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

ExactMatrix ExactMatrix::with_field(Field f) const {
  ExactMatrix m(f, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    m.check_entry_field(e_[i]);
    m.e_[i] = e_[i];
  }
  return m;
}

ExactMatrix ExactMatrix::complexify() const {
  if (field_ == Field::Real || field_ == Field::Complex)
    return with_field(Field::Complex);
  // X = A + jB: quaternionic entry q = alpha + j beta.
  std::size_t n = rows_, m = cols_;
  ExactMatrix out(Field::Complex, 2 * n, 2 * m);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      auto s = at(r, c).complex_split();
      Quaternion alpha(s[0], s[1]);
      Quaternion beta(s[2], s[3]);
      out.at(r, c) = alpha;
      out.at(r, m + c) = -beta.conj();
      out.at(n + r, c) = beta;
      out.at(n + r, m + c) = alpha.conj();
    }
  }
  return out;
}

ExactMatrix ExactMatrix::block2(const ExactMatrix& a, const ExactMatrix& b,
                                const ExactMatrix& c, const ExactMatrix& d) {
  std::size_t n = a.rows(), m = a.cols();
  if (b.rows() != n || c.cols() != m || b.cols() != d.cols() ||
      c.rows() != d.rows())
    throw dimension_mismatch("block2: inconsistent blocks");
  Field f = a.field();
  ExactMatrix out(f, n + c.rows(), m + b.cols());
  auto put = [&out](const ExactMatrix& src, std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < src.rows(); ++r)
      for (std::size_t c = 0; c < src.cols(); ++c)
        out.at(r0 + r, c0 + c) = src.at(r, c);
  };
  put(a, 0, 0);
  put(b, 0, m);
  put(c, n, 0);
  put(d, n, m);
  return out;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field() != b.field()) throw field_mismatch("kron: field mismatch");
  ExactMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          out.at(i * b.rows() + r, j * b.cols() + c) = a.at(i, j) * b.at(r, c);
    }
  return out;
}

ExactMatrix ExactMatrix::submatrix(std::size_t r0, std::size_t c0,
                                   std::size_t nr, std::size_t nc) const {
  ExactMatrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out.at(r, c) = at(r0 + r, c0 + c);
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ") << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << at(r, c).to_string();
    }
    os << "]" << (r + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b) {
  return a * b + b * a;
}

}  // namespace hradon
