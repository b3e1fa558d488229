#include "hradon/algebra.hpp"

#include <sstream>

namespace hradon {

ClassicalAlgebra ClassicalAlgebra::sized(Family f, std::size_t n) {
  ClassicalAlgebra g;
  g.family = f;
  g.n = n;
  if (n == 0) throw std::invalid_argument("algebra size must be positive");
  switch (f) {
    case Family::SU:
    case Family::SO:
    case Family::SP:
      throw std::invalid_argument("signature family needs (p,q)");
    default:
      break;
  }
  return g;
}

ClassicalAlgebra ClassicalAlgebra::signature(Family f, std::size_t p,
                                             std::size_t q) {
  if (f != Family::SU && f != Family::SO && f != Family::SP)
    throw std::invalid_argument("not a signature family");
  if (p + q == 0) throw std::invalid_argument("empty signature");
  ClassicalAlgebra g;
  g.family = f;
  g.p = p;
  g.q = q;
  g.n = p + q;
  return g;
}

std::size_t ClassicalAlgebra::complex_dim() const {
  switch (family) {
    case Family::SL_R:
    case Family::GL_R:
    case Family::SL_C:
    case Family::GL_C:
    case Family::SO_C:
      return n;
    case Family::SL_H:
    case Family::GL_H:
      return 2 * n;
    case Family::SU:
    case Family::SO:
      return p + q;
    case Family::SP:
      return 2 * (p + q);
    case Family::SP_R:
    case Family::SP_C:
      return 2 * n;
    case Family::SO_STAR:
      return 2 * n;
  }
  return 0;
}

Field ClassicalAlgebra::matrix_field() const {
  switch (family) {
    case Family::SL_R:
    case Family::GL_R:
    case Family::SO:
    case Family::SP_R:
      return Field::Real;
    case Family::SL_C:
    case Family::GL_C:
    case Family::SU:
    case Family::SP_C:
    case Family::SO_C:
      return Field::Complex;
    case Family::SL_H:
    case Family::GL_H:
    case Family::SP:
    case Family::SO_STAR:
      return Field::Quaternion;
  }
  return Field::Real;
}

std::size_t ClassicalAlgebra::matrix_size() const {
  switch (family) {
    case Family::SL_R:
    case Family::GL_R:
    case Family::SL_C:
    case Family::GL_C:
    case Family::SL_H:
    case Family::GL_H:
    case Family::SO_C:
    case Family::SO_STAR:
      return n;
    case Family::SU:
    case Family::SO:
    case Family::SP:
      return p + q;
    case Family::SP_R:
    case Family::SP_C:
      return 2 * n;
  }
  return 0;
}

bool ClassicalAlgebra::is_simple() const {
  switch (family) {
    case Family::SO:
      if (p + q <= 2) return false;            // so(1,1), so(2,0) abelian
      if (p == 2 && q == 2) return false;      // so(2,2)
      if ((p == 4 && q == 0) || (p == 0 && q == 4)) return false;
      return true;
    case Family::SO_C:
      return n == 3 || n >= 5;  // so(1,C), so(2,C), so(4,C) not simple
    case Family::SO_STAR:
      return n >= 3;  // so*(2), so*(4) not simple
    case Family::SL_R:
    case Family::SL_C:
      return n >= 2;
    case Family::SL_H:
      return n >= 1;  // sl(1,H) = sp(1), compact simple
    case Family::GL_R:
    case Family::GL_C:
    case Family::GL_H:
      return false;  // reductive with center
    case Family::SU:
      return p + q >= 2;
    case Family::SP:
      return p + q >= 1;
    case Family::SP_R:
    case Family::SP_C:
      return n >= 1;
  }
  return false;
}

std::string ClassicalAlgebra::to_string() const {
  std::ostringstream os;
  switch (family) {
    case Family::SL_R: os << "sl(" << n << ",R)"; break;
    case Family::SL_C: os << "sl(" << n << ",C)"; break;
    case Family::SL_H: os << "sl(" << n << ",H)"; break;
    case Family::GL_R: os << "gl(" << n << ",R)"; break;
    case Family::GL_C: os << "gl(" << n << ",C)"; break;
    case Family::GL_H: os << "gl(" << n << ",H)"; break;
    case Family::SU: os << "su(" << p << "," << q << ")"; break;
    case Family::SO: os << "so(" << p << "," << q << ")"; break;
    case Family::SP: os << "sp(" << p << "," << q << ")"; break;
    case Family::SP_R: os << "sp(" << n << ",R)"; break;
    case Family::SP_C: os << "sp(" << n << ",C)"; break;
    case Family::SO_C: os << "so(" << n << ",C)"; break;
    case Family::SO_STAR: os << "so*(" << 2 * n << ")"; break;
  }
  return os.str();
}

std::optional<ClassicalAlgebra> parse_algebra(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  if (!(is >> tag)) return std::nullopt;
  auto read1 = [&is]() -> std::optional<std::size_t> {
    long long v;
    if (!(is >> v) || v < 0) return std::nullopt;
    return static_cast<std::size_t>(v);
  };
  try {
    if (tag == "so" || tag == "su" || tag == "sp") {
      auto p = read1(), q = read1();
      if (!p || !q) return std::nullopt;
      Family f = tag == "so" ? Family::SO : (tag == "su" ? Family::SU : Family::SP);
      return ClassicalAlgebra::signature(f, *p, *q);
    }
    auto n = read1();
    if (!n || *n == 0) return std::nullopt;
    if (tag == "sl-r") return ClassicalAlgebra::sized(Family::SL_R, *n);
    if (tag == "sl-c") return ClassicalAlgebra::sized(Family::SL_C, *n);
    if (tag == "sl-h") return ClassicalAlgebra::sized(Family::SL_H, *n);
    if (tag == "gl-r") return ClassicalAlgebra::sized(Family::GL_R, *n);
    if (tag == "gl-c") return ClassicalAlgebra::sized(Family::GL_C, *n);
    if (tag == "gl-h") return ClassicalAlgebra::sized(Family::GL_H, *n);
    if (tag == "sp-r") return ClassicalAlgebra::sized(Family::SP_R, *n);
    if (tag == "sp-c") return ClassicalAlgebra::sized(Family::SP_C, *n);
    if (tag == "so-c") return ClassicalAlgebra::sized(Family::SO_C, *n);
    if (tag == "so-star") {
      if (*n % 2 != 0) return std::nullopt;  // so*(2N) needs the even full size
      return ClassicalAlgebra::sized(Family::SO_STAR, *n / 2);
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return std::nullopt;
}

namespace {

ExactMatrix defining_form(const ClassicalAlgebra& g) {
  switch (g.family) {
    case Family::SO:
      return ExactMatrix::ipq(Field::Real, g.p, g.q);
    case Family::SU:
      return ExactMatrix::ipq(Field::Complex, g.p, g.q);
    case Family::SP:
      return ExactMatrix::ipq(Field::Quaternion, g.p, g.q);
    case Family::SP_R:
      return ExactMatrix::j_form(Field::Real, 2 * g.n);
    case Family::SP_C:
      return ExactMatrix::j_form(Field::Complex, 2 * g.n);
    default:
      throw std::logic_error("no defining form for this family");
  }
}

}  // namespace

bool algebra_contains(const ClassicalAlgebra& g, const ExactMatrix& x) {
  if (!x.is_square() || x.rows() != g.matrix_size() ||
      x.field() != g.matrix_field())
    return false;
  switch (g.family) {
    case Family::GL_R:
    case Family::GL_C:
    case Family::GL_H:
      return true;
    case Family::SL_R:
    case Family::SL_C:
      return x.trace().is_zero();
    case Family::SL_H:
      return x.real_trace().is_zero();
    case Family::SO: {
      ExactMatrix f = defining_form(g);
      return (x.transpose() * f + f * x).is_zero();
    }
    case Family::SU: {
      ExactMatrix f = defining_form(g);
      return (x.conj_transpose() * f + f * x).is_zero() && x.trace().is_zero();
    }
    case Family::SP: {
      ExactMatrix f = defining_form(g);
      return (x.conj_transpose() * f + f * x).is_zero();
    }
    case Family::SP_R:
    case Family::SP_C: {
      ExactMatrix f = defining_form(g);
      return (x.transpose() * f + f * x).is_zero();
    }
    case Family::SO_C:
      return (x.transpose() + x).is_zero();
    case Family::SO_STAR: {
      ExactMatrix jj = ExactMatrix::scalar(Field::Quaternion, g.n, Quaternion::j());
      return (x.conj_transpose() * jj + jj * x).is_zero();
    }
  }
  return false;
}

bool p_part_contains(const ClassicalAlgebra& g, const ExactMatrix& x) {
  return algebra_contains(g, x) && x.is_hermitian();
}

namespace {

void herm_pair_basis(std::vector<ExactMatrix>& out, Field f, std::size_t n) {
  // Hermitian matrices over the given field.
  std::vector<Quaternion> units = {Quaternion::one()};
  if (f != Field::Real) units.push_back(Quaternion::i());
  if (f == Field::Quaternion) {
    units.push_back(Quaternion::j());
    units.push_back(Quaternion::k());
  }
  for (std::size_t a = 0; a < n; ++a) {
    ExactMatrix d(f, n, n);
    d.at(a, a) = Quaternion::one();
    out.push_back(d);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (const auto& u : units) {
        ExactMatrix m(f, n, n);
        m.set(a, b, u);
        m.set(b, a, u.conj());
        out.push_back(m);
      }
}

}  // namespace

std::vector<ExactMatrix> p_part_basis(const ClassicalAlgebra& g) {
  std::vector<ExactMatrix> out;
  std::size_t n = g.matrix_size();
  Field f = g.matrix_field();
  switch (g.family) {
    case Family::GL_R:
    case Family::GL_C:
    case Family::GL_H:
      herm_pair_basis(out, f, n);
      break;
    case Family::SL_R:
    case Family::SL_C:
    case Family::SL_H: {
      // Traceless hermitian: off-diagonal pairs plus E_aa - E_{a+1,a+1}.
      std::vector<ExactMatrix> herm;
      herm_pair_basis(herm, f, n);
      for (const auto& m : herm)
        if (m.trace().is_zero()) out.push_back(m);
      for (std::size_t a = 0; a + 1 < n; ++a) {
        ExactMatrix m(f, n, n);
        m.at(a, a) = Quaternion::one();
        m.at(a + 1, a + 1) = -Quaternion::one();
        out.push_back(m);
      }
      break;
    }
    case Family::SO: {
      // [[0, A],[A^T, 0]] in the (p,q) block split.
      for (std::size_t a = 0; a < g.p; ++a)
        for (std::size_t b = 0; b < g.q; ++b) {
          ExactMatrix m(f, n, n);
          m.at(a, g.p + b) = Quaternion::one();
          m.at(g.p + b, a) = Quaternion::one();
          out.push_back(m);
        }
      break;
    }
    case Family::SU:
    case Family::SP: {
      std::vector<Quaternion> units = {Quaternion::one(), Quaternion::i()};
      if (g.family == Family::SP) {
        units.push_back(Quaternion::j());
        units.push_back(Quaternion::k());
      }
      for (std::size_t a = 0; a < g.p; ++a)
        for (std::size_t b = 0; b < g.q; ++b)
          for (const auto& u : units) {
            ExactMatrix m(f, n, n);
            m.set(a, g.p + b, u);
            m.set(g.p + b, a, u.conj());
            out.push_back(m);
          }
      break;
    }
    case Family::SP_R: {
      // [[A, B],[B, -A]] with A, B symmetric.
      std::size_t h = g.n;
      std::vector<ExactMatrix> sym;
      herm_pair_basis(sym, Field::Real, h);
      for (const auto& s : sym) {
        out.push_back(ExactMatrix::block2(s, ExactMatrix::zero(f, h, h),
                                          ExactMatrix::zero(f, h, h), -s));
        out.push_back(ExactMatrix::block2(ExactMatrix::zero(f, h, h), s, s,
                                          ExactMatrix::zero(f, h, h)));
      }
      break;
    }
    case Family::SP_C: {
      // [[A, B],[B*, -conj A]] with A hermitian, B complex symmetric.
      std::size_t h = g.n;
      std::vector<ExactMatrix> herm;
      herm_pair_basis(herm, Field::Complex, h);
      for (const auto& a : herm)
        out.push_back(ExactMatrix::block2(a, ExactMatrix::zero(f, h, h),
                                          ExactMatrix::zero(f, h, h),
                                          -a.entrywise_conj()));
      for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = r; c < h; ++c)
          for (const auto& u : {Quaternion::one(), Quaternion::i()}) {
            ExactMatrix b(f, h, h);
            b.set(r, c, u);
            b.set(c, r, u);
            out.push_back(ExactMatrix::block2(ExactMatrix::zero(f, h, h), b,
                                              b.conj_transpose(),
                                              ExactMatrix::zero(f, h, h)));
          }
      break;
    }
    case Family::SO_C: {
      // i * (real skew).
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
          ExactMatrix m(f, n, n);
          m.set(a, b, Quaternion::i());
          m.set(b, a, -Quaternion::i());
          out.push_back(m);
        }
      break;
    }
    case Family::SO_STAR: {
      // Hermitian with entries in span{i, k}; diagonal forced to zero.
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          for (const auto& u : {Quaternion::i(), Quaternion::k()}) {
            ExactMatrix m(f, n, n);
            m.set(a, b, u);
            m.set(b, a, u.conj());
            out.push_back(m);
          }
      break;
    }
  }
  return out;
}

}  // namespace hradon
