#pragma once

#include <optional>
#include <string>

#include "hradon/matrix.hpp"

namespace hradon {

enum class Family {
  SL_R,     // sl(N,R)
  SL_C,     // sl(N,C)
  SL_H,     // sl(N,H)
  GL_R,     // gl(N,R)
  GL_C,     // gl(N,C)
  GL_H,     // gl(N,H)
  SU,       // su(p,q)
  SO,       // so(p,q)
  SP,       // sp(p,q), quaternionic
  SP_R,     // sp(N,R)
  SP_C,     // sp(N,C)
  SO_C,     // so(N,C)
  SO_STAR,  // so*(2N), stored by N
};

/// Symbolic descriptor of a classical real or complex Lie algebra together
/// with its standard representation.
struct ClassicalAlgebra {
  Family family;
  // Size N for the one-parameter families. For SO_STAR this is the
  // quaternionic size N of so*(2N).
  std::size_t n = 0;
  // Signature for SU / SO / SP.
  std::size_t p = 0, q = 0;

  static ClassicalAlgebra sized(Family f, std::size_t n);
  static ClassicalAlgebra signature(Family f, std::size_t p, std::size_t q);

  bool has_signature() const {
    return family == Family::SU || family == Family::SO || family == Family::SP;
  }

  /// Dimension of the standard representation over C (quaternionic families
  /// double).
  std::size_t complex_dim() const;

  /// Entry field of the defining matrix realization.
  Field matrix_field() const;
  /// Matrix size over the entry field.
  std::size_t matrix_size() const;

  bool is_simple() const;

  std::string to_string() const;

  friend bool operator==(const ClassicalAlgebra& a, const ClassicalAlgebra& b) {
    return a.family == b.family && a.n == b.n && a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(const ClassicalAlgebra& a, const ClassicalAlgebra& b) {
    return !(a == b);
  }
};

/// Parses descriptors like "so 4 4", "sp-r 2", "so-star 16", "gl-h 3".
/// so-star takes the full size 2N on the command line.
std::optional<ClassicalAlgebra> parse_algebra(const std::string& text);

/// Membership predicate of the defining realization.
bool algebra_contains(const ClassicalAlgebra& g, const ExactMatrix& x);
/// Cartan p-part membership: in the algebra and fixed by conjugate transpose.
bool p_part_contains(const ClassicalAlgebra& g, const ExactMatrix& x);

/// Basis of the p-part of the defining realization (spanning set over R).
std::vector<ExactMatrix> p_part_basis(const ClassicalAlgebra& g);

}  // namespace hradon
