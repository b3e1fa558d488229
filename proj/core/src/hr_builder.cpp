#include "hradon/hr_builder.hpp"

#include <sstream>

namespace hradon {

namespace {

ExactMatrix sigma1(Field f, std::size_t half) {
  ExactMatrix z = ExactMatrix::zero(f, half, half);
  ExactMatrix id = ExactMatrix::identity(f, half);
  return ExactMatrix::block2(z, id, id, z);
}

ExactMatrix off_diag(Field f, std::size_t half, const Quaternion& upper,
                     const Quaternion& lower) {
  ExactMatrix out(f, 2 * half, 2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    out.set(i, half + i, upper);
    out.set(half + i, i, lower);
  }
  return out;
}

ExactMatrix embed_row2(std::size_t, const ExactMatrix& x) {
  // gl(N,R) -> sp(N,R), X -> diag(X, -X^T)
  std::size_t n = x.rows();
  ExactMatrix z = ExactMatrix::zero(Field::Real, n, n);
  return ExactMatrix::block2(x, z, z, -x.transpose());
}

ExactMatrix embed_row4(std::size_t half, const ExactMatrix& x) {
  // sp(N,C) -> sp(N,N) through the compact-form split X = c(Y1) + i c(Y2),
  // mapped to [[Y1, Y2], [-Y2, Y1]] over H.
  std::size_t n = half;
  ExactMatrix x11 = x.submatrix(0, 0, n, n);
  ExactMatrix x12 = x.submatrix(0, n, n, n);
  ExactMatrix x21 = x.submatrix(n, 0, n, n);
  ExactMatrix x22 = x.submatrix(n, n, n, n);
  Quaternion half_c(Rational(1, 2));
  Quaternion mhalf_i(Rational(0), Rational(-1, 2));
  ExactMatrix alpha1 = (x11 + x22.entrywise_conj()).scaled(half_c);
  ExactMatrix alpha2 = (x11 - x22.entrywise_conj()).scaled(mhalf_i);
  ExactMatrix beta1 = (x21 - x12.entrywise_conj()).scaled(half_c);
  ExactMatrix beta2 = (x21 + x12.entrywise_conj()).scaled(mhalf_i);
  auto assemble = [n](const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix y(Field::Quaternion, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        y.at(r, c) = Quaternion::from_complex_split(
            a.at(r, c).w(), a.at(r, c).x(), b.at(r, c).w(), b.at(r, c).x());
    return y;
  };
  ExactMatrix y1 = assemble(alpha1, beta1);
  ExactMatrix y2 = assemble(alpha2, beta2);
  return ExactMatrix::block2(y1, y2, -y2, y1);
}

ExactMatrix embed_row6(std::size_t n, const ExactMatrix& x) {
  // gl(N,H) -> so*(4N): conjugate of diag(X, -j X* j^{-1}) by
  // S = [[I, I], [iI, -iI]], with S^{-1} = (1/2) [[I, -i I], [I, i I]].
  Quaternion jj = Quaternion::j();
  ExactMatrix twisted = (ExactMatrix::scalar(Field::Quaternion, n, -jj) *
                         x.conj_transpose()) *
                        ExactMatrix::scalar(Field::Quaternion, n, jj.inverse());
  ExactMatrix z = ExactMatrix::zero(Field::Quaternion, n, n);
  ExactMatrix d = ExactMatrix::block2(x, z, z, twisted);
  Quaternion one = Quaternion::one();
  Quaternion qi = Quaternion::i();
  ExactMatrix id = ExactMatrix::identity(Field::Quaternion, n);
  ExactMatrix s = ExactMatrix::block2(id, id, id.scaled(qi), id.scaled(-qi));
  ExactMatrix sinv =
      ExactMatrix::block2(id, id.scaled(-qi), id, id.scaled(qi))
          .scaled(Quaternion(Rational(1, 2)));
  return s * d * sinv;
}

ExactMatrix embed_row8(std::size_t n, const ExactMatrix& x) {
  // so(N,C) -> so(N,N): P + iQ -> [[P, Q], [-Q, P]]
  ExactMatrix p(Field::Real, n, n), q(Field::Real, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      p.at(r, c) = Quaternion(x.at(r, c).w());
      q.at(r, c) = Quaternion(x.at(r, c).x());
    }
  return ExactMatrix::block2(p, q, -q, p);
}

ExactMatrix embed_row10(std::size_t n, const ExactMatrix& x) {
  // gl(N,C) -> su(N,N): (1/2) [[X - X*, X + X*], [X + X*, X - X*]]
  ExactMatrix xs = x.conj_transpose();
  Quaternion half_c(Rational(1, 2));
  ExactMatrix a = (x - xs).scaled(half_c);
  ExactMatrix b = (x + xs).scaled(half_c);
  return ExactMatrix::block2(a, b, b, a);
}

std::vector<LadderRow> make_rows() {
  std::vector<LadderRow> rows;
  auto ident = [](std::size_t, const ExactMatrix& x) { return x; };

  rows.push_back(LadderRow{
      1, "(sl(2N,R), so(N,N))",
      [](std::size_t n) { return ClassicalAlgebra::signature(Family::SO, n, n); },
      [](std::size_t n) { return ClassicalAlgebra::sized(Family::SL_R, 2 * n); },
      ident,
      [](std::size_t n) { return ExactMatrix::ipq(Field::Real, n, n); }});

  rows.push_back(LadderRow{
      2, "(sp(N,R), gl(N,R))",
      [](std::size_t n) { return ClassicalAlgebra::sized(Family::GL_R, n); },
      [](std::size_t n) { return ClassicalAlgebra::sized(Family::SP_R, n); },
      embed_row2,
      [](std::size_t n) { return sigma1(Field::Real, n); }});

  rows.push_back(LadderRow{
      3, "(sp(N,C), sp(N,R))",
      [](std::size_t n) { return ClassicalAlgebra::sized(Family::SP_R, n); },
      [](std::size_t n) { return ClassicalAlgebra::sized(Family::SP_C, n); },
      [](std::size_t, const ExactMatrix& x) { return x.with_field(Field::Complex); },
      [](std::size_t n) {
        return ExactMatrix::j_form(Field::Complex, 2 * n).scaled(Quaternion::i());
      }});

  rows.push_back(LadderRow{
      4, "(sp(N,N), sp(N,C))",
      [](std::size_t n) { return ClassicalAlgebra::sized(Family::SP_C, n); },
      [](std::size_t n) { return ClassicalAlgebra::signature(Family::SP, n, n); },
      [](std::size_t n, const ExactMatrix& x) { return embed_row4(n, x); },
      [](std::size_t n) { return sigma1(Field::Quaternion, n); }});

  rows.push_back(LadderRow{
      5, "(sl(2N,H), sp(N,N))",
      [](std::size_t n) { return ClassicalAlgebra::signature(Family::SP, n, n); },
      [](std::size_t n) { return ClassicalAlgebra::sized(Family::SL_H, 2 * n); },
      ident,
      [](std::size_t n) { return ExactMatrix::ipq(Field::Quaternion, n, n); }});

  rows.push_back(LadderRow{
      6, "(so*(4N), gl(N,H))",
      [](std::size_t n) { return ClassicalAlgebra::sized(Family::GL_H, n); },
      [](std::size_t n) { return ClassicalAlgebra::sized(Family::SO_STAR, 2 * n); },
      [](std::size_t n, const ExactMatrix& x) { return embed_row6(n, x); },
      [](std::size_t n) {
        return off_diag(Field::Quaternion, n, -Quaternion::k(), Quaternion::k());
      }});

  rows.push_back(LadderRow{
      7, "(so(2N,C), so*(2N))",
      [](std::size_t n) { return ClassicalAlgebra::sized(Family::SO_STAR, n); },
      [](std::size_t n) { return ClassicalAlgebra::sized(Family::SO_C, 2 * n); },
      [](std::size_t, const ExactMatrix& x) { return x.complexify(); },
      [](std::size_t n) {
        return ExactMatrix::j_form(Field::Complex, 2 * n).scaled(Quaternion::i());
      }});

  rows.push_back(LadderRow{
      8, "(so(N,N), so(N,C))",
      [](std::size_t n) { return ClassicalAlgebra::sized(Family::SO_C, n); },
      [](std::size_t n) { return ClassicalAlgebra::signature(Family::SO, n, n); },
      [](std::size_t n, const ExactMatrix& x) { return embed_row8(n, x); },
      [](std::size_t n) { return sigma1(Field::Real, n); }});

  rows.push_back(LadderRow{
      9, "(sl(2N,C), u(N,N))",
      [](std::size_t n) { return ClassicalAlgebra::signature(Family::SU, n, n); },
      [](std::size_t n) { return ClassicalAlgebra::sized(Family::SL_C, 2 * n); },
      ident,
      [](std::size_t n) { return ExactMatrix::ipq(Field::Complex, n, n); }});

  rows.push_back(LadderRow{
      10, "(su(N,N), gl(N,C))",
      [](std::size_t n) { return ClassicalAlgebra::sized(Family::GL_C, n); },
      [](std::size_t n) { return ClassicalAlgebra::signature(Family::SU, n, n); },
      [](std::size_t n, const ExactMatrix& x) { return embed_row10(n, x); },
      [](std::size_t n) {
        return off_diag(Field::Complex, n, -Quaternion::i(), Quaternion::i());
      }});

  return rows;
}

}  // namespace

const std::vector<LadderRow>& ladder_rows() {
  static const std::vector<LadderRow> rows = make_rows();
  return rows;
}

const LadderRow& ladder_row(int id) {
  const auto& rows = ladder_rows();
  if (id < 1 || id > static_cast<int>(rows.size()))
    throw std::out_of_range("ladder row id");
  return rows[id - 1];
}

std::string FamilyReport::to_string() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << "\n";
  for (std::size_t i = 0; i < membership.size(); ++i)
    os << "  p-membership M" << i << ": " << (membership[i] ? "ok" : "FAIL")
       << "\n";
  for (const auto& pc : pairs)
    os << "  pair (" << pc.j << "," << pc.k << "): " << (pc.ok ? "ok" : "FAIL")
       << "\n";
  return os.str();
}

FamilyReport verify_family(const HRFamily& family) {
  FamilyReport rep;
  for (const auto& m : family.matrices) {
    bool ok = p_part_contains(family.alg, m);
    rep.membership.push_back(ok);
    rep.pass = rep.pass && ok;
  }
  std::size_t n = family.alg.matrix_size();
  Field f = family.alg.matrix_field();
  ExactMatrix two_id =
      ExactMatrix::identity(f, n).scaled(Quaternion(Rational(2)));
  for (std::size_t j = 0; j < family.matrices.size(); ++j)
    for (std::size_t k = j; k < family.matrices.size(); ++k) {
      ExactMatrix ac = anticommutator(family.matrices[j], family.matrices[k]);
      bool ok = (j == k) ? (ac == two_id) : ac.is_zero();
      rep.pairs.push_back({j, k, ok});
      rep.pass = rep.pass && ok;
    }
  return rep;
}

HRFamily base_witness(const ClassicalAlgebra& alg) {
  if (alg.family == Family::SO && alg.p == alg.q && alg.p % 2 == 1) {
    HRFamily fam{alg, {sigma1(Field::Real, alg.p)}, ""};
    return fam;
  }
  if ((alg.family == Family::GL_R || alg.family == Family::GL_C ||
       alg.family == Family::GL_H) &&
      alg.n % 2 == 1) {
    HRFamily fam{alg, {ExactMatrix::identity(alg.matrix_field(), alg.n)}, ""};
    return fam;
  }
  throw not_a_base(alg.to_string() + " is not a base of either chain");
}

HRFamily ladder_step(const HRFamily& family, const LadderRow& row,
                     std::size_t source_param) {
  if (family.alg != row.source(source_param))
    throw row_mismatch("family algebra " + family.alg.to_string() +
                       " does not match row source " +
                       row.source(source_param).to_string());
  HRFamily out{row.target(source_param), {}, family.note};
  for (const auto& m : family.matrices)
    out.matrices.push_back(row.embed(source_param, m));
  out.matrices.push_back(row.z_image(source_param));
  FamilyReport rep = verify_family(out);
  if (!rep.pass)
    throw verification_failure("ladder row " + std::to_string(row.id) + " " +
                               row.name + " produced an invalid family:\n" +
                               rep.to_string());
  return out;
}

namespace {

// Family built in sl relabels to the enclosing gl (same matrices).
HRFamily relabel(HRFamily fam, const ClassicalAlgebra& alg) {
  fam.alg = alg;
  return fam;
}

HRFamily build_chain8(int slot, std::size_t n);

HRFamily step_from(int slot_src, std::size_t n_src) {
  // One chain step g_{slot}(n) -> g_{slot+1}(a_slot * n).
  HRFamily f = build_chain8(slot_src, n_src);
  switch (slot_src) {
    case 1: {
      HRFamily g = ladder_step(f, ladder_row(1), n_src);
      return relabel(g, ClassicalAlgebra::sized(Family::GL_R, 2 * n_src));
    }
    case 2: return ladder_step(f, ladder_row(2), n_src);
    case 3: return ladder_step(f, ladder_row(3), n_src);
    case 4: return ladder_step(f, ladder_row(4), n_src);
    case 5: {
      HRFamily g = ladder_step(f, ladder_row(5), n_src);
      return relabel(g, ClassicalAlgebra::sized(Family::GL_H, 2 * n_src));
    }
    case 6: return ladder_step(f, ladder_row(6), n_src);
    case 7: return ladder_step(f, ladder_row(7), n_src);
    default: return ladder_step(f, ladder_row(8), n_src);
  }
}

HRFamily build_chain8(int slot, std::size_t n) {
  int prev = slot == 1 ? 8 : slot - 1;
  int a_prev = chain_coefficient_a(prev);
  if (n % a_prev == 0) {
    std::size_t n_prev = n / a_prev;
    return step_from(prev, n_prev);
  }
  // n odd below a doubling step: terminal.
  ClassicalAlgebra alg = chain_algebra(slot, n);
  if (slot == 2 || slot == 6) return base_witness(alg);
  if (slot == 7 || slot == 8)
    return HRFamily{alg, {}, "value is zero at this size"};
  throw std::logic_error("unexpected chain terminal");
}

HRFamily build_chain2(int slot, std::size_t n) {
  if (slot == 1) {  // gl(N,C)
    if (n % 2 == 0) {
      HRFamily f = build_chain2(2, n / 2);
      HRFamily g = ladder_step(f, ladder_row(9), n / 2);
      return relabel(g, ClassicalAlgebra::sized(Family::GL_C, n));
    }
    return base_witness(ClassicalAlgebra::sized(Family::GL_C, n));
  }
  // su(N,N)
  HRFamily f = build_chain2(1, n);
  return ladder_step(f, ladder_row(10), n);
}

}  // namespace

HRFamily build_witness(const ClassicalAlgebra& alg) {
  if (auto pos = chain_locate(alg)) return build_chain8(pos->i, pos->n);
  if (auto pos = complex_chain_locate(alg)) return build_chain2(pos->slot, pos->n);

  switch (alg.family) {
    case Family::SL_R:
      if (alg.n % 2 == 0) {
        HRFamily f = build_chain8(1, alg.n / 2);
        return ladder_step(f, ladder_row(1), alg.n / 2);
      }
      break;
    case Family::SL_H:
      if (alg.n % 2 == 0) {
        HRFamily f = build_chain8(5, alg.n / 2);
        return ladder_step(f, ladder_row(5), alg.n / 2);
      }
      break;
    case Family::SL_C:
      if (alg.n % 2 == 0) {
        HRFamily f = build_chain2(2, alg.n / 2);
        return ladder_step(f, ladder_row(9), alg.n / 2);
      }
      break;
    default:
      break;
  }

  // Families with value zero: signature p != q, sl(1,D), sl of odd size.
  int value = rho_variant(alg, 1);
  if (value == 0)
    return HRFamily{alg, {}, "no square-identity family exists (value 0)"};
  throw unsupported_family("no construction available for " + alg.to_string());
}

ExactMatrix sl_odd_invertible_witness(const ClassicalAlgebra& alg) {
  bool sl = alg.family == Family::SL_R || alg.family == Family::SL_C ||
            alg.family == Family::SL_H;
  if (!sl || alg.n % 2 == 0 || alg.n < 3)
    throw unsupported_family("invertible witness only for sl of odd size >= 3");
  Field f = alg.matrix_field();
  ExactMatrix m(f, alg.n, alg.n);
  m.at(0, 0) = Quaternion(Rational(static_cast<std::int64_t>(alg.n) - 1));
  for (std::size_t i = 1; i < alg.n; ++i) m.at(i, i) = -Quaternion::one();
  return m;
}

}  // namespace hradon
