#include "hradon/hurwitz_radon.hpp"

namespace hradon {

int ord2(const Rational& t) {
  if (t.is_zero()) throw std::domain_error("ord2 of zero");
  return t.ord2();
}

HurwitzDecomposition hurwitz_decompose(const Rational& t) {
  int v = ord2(t);
  int b = ((v % 4) + 4) % 4;
  int a = (v - b) / 4;
  Rational pow(1);
  Rational two(2);
  for (int k = 0; k < v; ++k) pow *= two;
  for (int k = 0; k > v; --k) pow /= two;
  return HurwitzDecomposition{a, b, t / pow};
}

int rho(const Rational& t) {
  HurwitzDecomposition d = hurwitz_decompose(t);
  return 8 * d.a + (1 << d.b);
}

namespace {
constexpr int kChainA[8] = {2, 1, 1, 1, 2, 2, 2, 1};
constexpr int kChainB[8] = {1, 2, 2, 2, 2, 4, 8, 16};

int slot_index(int i) {
  int r = ((i - 1) % 8 + 8) % 8;
  return r;  // 0-based
}
}  // namespace

int chain_coefficient_a(int i) { return kChainA[slot_index(i)]; }
int chain_coefficient_b(int i) { return kChainB[slot_index(i)]; }

ClassicalAlgebra chain_algebra(int i, std::size_t n) {
  switch (slot_index(i)) {
    case 0: return ClassicalAlgebra::signature(Family::SO, n, n);
    case 1: return ClassicalAlgebra::sized(Family::GL_R, n);
    case 2: return ClassicalAlgebra::sized(Family::SP_R, n);
    case 3: return ClassicalAlgebra::sized(Family::SP_C, n);
    case 4: return ClassicalAlgebra::signature(Family::SP, n, n);
    case 5: return ClassicalAlgebra::sized(Family::GL_H, n);
    case 6: return ClassicalAlgebra::sized(Family::SO_STAR, n);  // so*(2n)
    default: return ClassicalAlgebra::sized(Family::SO_C, n);
  }
}

std::optional<ChainPosition> chain_locate(const ClassicalAlgebra& g) {
  switch (g.family) {
    case Family::SO:
      if (g.p == g.q) return ChainPosition{1, g.p};
      return std::nullopt;
    case Family::GL_R: return ChainPosition{2, g.n};
    case Family::SP_R: return ChainPosition{3, g.n};
    case Family::SP_C: return ChainPosition{4, g.n};
    case Family::SP:
      if (g.p == g.q) return ChainPosition{5, g.p};
      return std::nullopt;
    case Family::GL_H: return ChainPosition{6, g.n};
    case Family::SO_STAR: return ChainPosition{7, g.n};
    case Family::SO_C: return ChainPosition{8, g.n};
    default: return std::nullopt;
  }
}

std::optional<ComplexChainPosition> complex_chain_locate(
    const ClassicalAlgebra& g) {
  if (g.family == Family::GL_C) return ComplexChainPosition{1, g.n};
  if (g.family == Family::SU && g.p == g.q) return ComplexChainPosition{2, g.p};
  return std::nullopt;
}

namespace {

int rho_variant_even_sl(const ClassicalAlgebra& g, int which, Family gl_family) {
  // sl(N,D): equals gl(N,D) for even N; for odd N >= 3 the two variants
  // split as (0, 1); sl(1,D) is (0, 0).
  if (g.n == 1) return 0;
  if (g.n % 2 == 1) return which == 1 ? 0 : 1;
  ClassicalAlgebra gl = ClassicalAlgebra::sized(gl_family, g.n);
  return rho_variant(gl, which);
}

}  // namespace

int rho_variant(const ClassicalAlgebra& g, int which) {
  if (which != 1 && which != 2) throw invalid_params("which must be 1 or 2");
  Rational n(static_cast<std::int64_t>(g.n));
  switch (g.family) {
    case Family::SO:
      if (g.p != g.q) return 0;
      return rho(Rational(static_cast<std::int64_t>(g.p)));
    case Family::SU:
      if (g.p != g.q) return 0;
      return 2 * ord2(Rational(static_cast<std::int64_t>(g.p))) + 2;
    case Family::SP:
      if (g.p != g.q) return 0;
      return rho(Rational(static_cast<std::int64_t>(g.p), 2)) + 4;
    case Family::GL_R: return rho(n / Rational(2)) + 1;
    case Family::GL_C: return 2 * ord2(n) + 1;
    case Family::GL_H: return rho(n / Rational(4)) + 5;
    case Family::SP_R: return rho(n / Rational(2)) + 2;
    case Family::SP_C: return rho(n / Rational(2)) + 3;
    case Family::SO_STAR: return rho(n / Rational(8)) + 6;
    case Family::SO_C: return rho(n / Rational(16)) + 7;
    case Family::SL_R: return rho_variant_even_sl(g, which, Family::GL_R);
    case Family::SL_C: return rho_variant_even_sl(g, which, Family::GL_C);
    case Family::SL_H: return rho_variant_even_sl(g, which, Family::GL_H);
  }
  throw invalid_params("unhandled family");
}

int rho_via_chain(const ClassicalAlgebra& g) {
  if (auto pos = chain_locate(g)) {
    Rational n(static_cast<std::int64_t>(pos->n));
    return rho(n / Rational(chain_coefficient_b(pos->i))) + pos->i - 1;
  }
  if (auto pos = complex_chain_locate(g)) {
    int k = pos->slot;  // 1 for gl(N,C), 2 for su(N,N)
    return 2 * ord2(Rational(static_cast<std::int64_t>(pos->n))) + k;
  }
  throw not_on_chain(g.to_string() + " is not on either periodic chain");
}

}  // namespace hradon
