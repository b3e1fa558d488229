#pragma once

#include <optional>

#include "hradon/algebra.hpp"
#include "hradon/rational.hpp"

namespace hradon {

/// Writes ord2(t) = 4a + b with 0 <= b <= 3; reconstruction t = 2^{4a+b} * odd.
struct HurwitzDecomposition {
  int a;
  int b;
  Rational odd_part;
};

HurwitzDecomposition hurwitz_decompose(const Rational& t);

/// 2-adic valuation of a nonzero rational.
int ord2(const Rational& t);

/// rho(t) = 8a + 2^b where ord2(t) = 4a + b, 0 <= b <= 3.
/// Defined for any nonzero rational; rho(16t) = rho(t) + 8.
int rho(const Rational& t);

/// Position on the 8-periodic chain of classical algebras.
struct ChainPosition {
  int i;              // slot 1..8
  std::size_t n;      // size parameter of g_i(n)
};

/// g_i(N) for slot i (mod 8): so(N,N), gl(N,R), sp(N,R), sp(N,C),
/// sp(N,N), gl(N,H), so*(2N), so(N,C).
ClassicalAlgebra chain_algebra(int i, std::size_t n);

/// Per-slot step coefficients: a = 2,1,1,1,2,2,2,1 and the partial products
/// b with b_1 = 1, b_{i+1} = a_i b_i (period 8 up to a factor 16).
int chain_coefficient_a(int i);
int chain_coefficient_b(int i);

/// Locates an algebra on the 8-periodic chain, if it lies on it.
std::optional<ChainPosition> chain_locate(const ClassicalAlgebra& g);

/// Slot on the 2-periodic chain gl(N,C) c su(N,N) c gl(2N,C) c ...
struct ComplexChainPosition {
  int slot;           // 1 = gl(N,C), 2 = su(N,N)
  std::size_t n;
};
std::optional<ComplexChainPosition> complex_chain_locate(const ClassicalAlgebra& g);

struct not_on_chain : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct invalid_params : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Closed-form value of the invariant for the standard representation.
/// `which` selects the square-identity (1) or invertibility (2) variant;
/// they differ only for sl of odd size >= 3.
int rho_variant(const ClassicalAlgebra& g, int which = 1);

/// Same value computed through the chain recurrences
/// f(i,N) = rho(N/b_i) + i - 1 and f(N) = 2 ord2(N) + k.
/// Only defined for algebras on one of the two chains.
int rho_via_chain(const ClassicalAlgebra& g);

}  // namespace hradon
