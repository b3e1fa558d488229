#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hradon/matrix.hpp"
#include "hradon/rational.hpp"

namespace hradon {

struct signature_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Element of the Clifford algebra C(p,q): finite rational combination of
/// basis monomials e_S, S a subset of {1..p+q} encoded as a bitmask with
/// ascending index order. Generators square to +1 for index <= p and to -1
/// beyond, and anticommute pairwise.
class CliffordElement {
 public:
  CliffordElement() : p_(0), q_(0) {}
  CliffordElement(int p, int q) : p_(p), q_(q) {}

  static CliffordElement unit(int p, int q) {
    CliffordElement x(p, q);
    x.terms_[0] = Rational(1);
    return x;
  }
  static CliffordElement generator(int p, int q, int i);
  static CliffordElement monomial(int p, int q, std::uint32_t mask,
                                  const Rational& coef = Rational(1));

  int p() const { return p_; }
  int q() const { return q_; }
  int dim() const { return p_ + q_; }

  const std::map<std::uint32_t, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(std::uint32_t mask) const;

  CliffordElement operator-() const;
  friend CliffordElement operator+(const CliffordElement& a,
                                   const CliffordElement& b);
  friend CliffordElement operator-(const CliffordElement& a,
                                   const CliffordElement& b);
  friend CliffordElement operator*(const CliffordElement& a,
                                   const CliffordElement& b);
  CliffordElement scaled(const Rational& c) const;

  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const CliffordElement& a, const CliffordElement& b) {
    return !(a == b);
  }

  /// e_S -> (-1)^{|S|} e_S
  CliffordElement grade_involution() const;
  /// e_S -> reversed product, sign (-1)^{|S|(|S|-1)/2}
  CliffordElement transpose_antiinvolution() const;

  std::string to_string() const;

 private:
  void add_term(std::uint32_t mask, const Rational& c);

  int p_, q_;
  std::map<std::uint32_t, Rational> terms_;
};

/// Sign and support of a basis product: e_S e_T = sign * e_{S xor T}.
int clifford_product_sign(int p, std::uint32_t s, std::uint32_t t);

struct rank_too_small : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Basis {e_i e_j : i < j} of the Lie algebra inside C+(p,q).
std::vector<CliffordElement> spin_lie_basis(int p, int q);

/// For signature (n,1): basis {e_i^+ e_1^- : i <= n} of the symmetric part.
std::vector<CliffordElement> p_part_basis_n1(int n);

/// The algebra isomorphism C(n) -> C+(n,1) determined by e_i -> e_i e_{n+1}.
CliffordElement eta(const CliffordElement& x);

enum class CliffordKind { MatR, MatRSum, MatC, MatH, MatHSum };

struct CliffordType {
  CliffordKind kind;
  std::size_t block;  // matrix size over the division algebra

  std::string to_string() const;
  /// Real dimension of the algebra M(block, D) (doubled for sums).
  std::size_t real_dim() const;
  friend bool operator==(const CliffordType& a, const CliffordType& b) {
    return a.kind == b.kind && a.block == b.block;
  }
};

/// Real algebra type of C(p,q), from the mod-8 periodicity of p - q.
CliffordType clifford_type(int p, int q);
/// Real algebra type of the even part C+(p,q).
CliffordType even_clifford_type(int p, int q);

/// Complexified shape (block size, number of simple summands).
struct ComplexifiedType {
  std::size_t block;
  int copies;  // 1 or 2
};
ComplexifiedType complexified(const CliffordType& t);

/// 2^{(n-1)/2} for odd n, 2^{(n-2)/2} for even n.
std::size_t spin_dimension(int n);

/// Structure invariants computed from the algebra itself, independent of the
/// mod-8 table: signature excess of the regular trace form, center dimension,
/// and for 2-dimensional centers whether the center splits.
struct CliffordInvariants {
  long trace_excess;
  int center_dim;
  bool center_splits;  // meaningful only when center_dim == 2
};
CliffordInvariants clifford_invariants(int p, int q);

/// Explicit real matrix generators of C(p,q); faithful, defining relations
/// hold exactly. Built recursively from small base models.
std::vector<ExactMatrix> real_clifford_model(int p, int q);

}  // namespace hradon
