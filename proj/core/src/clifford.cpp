#include "hradon/clifford.hpp"

#include <bit>
#include <sstream>

namespace hradon {

int clifford_product_sign(int p, std::uint32_t s, std::uint32_t t) {
  // Move each generator of t past the tail of s, then resolve squares.
  int sign = 1;
  std::uint32_t tt = t;
  while (tt) {
    int bit = std::countr_zero(tt);
    tt &= tt - 1;
    std::uint32_t higher = s >> (bit + 1);
    if (std::popcount(higher) % 2 != 0) sign = -sign;
  }
  std::uint32_t common = s & t;
  while (common) {
    int bit = std::countr_zero(common);
    common &= common - 1;
    if (bit >= p) sign = -sign;  // generator squares to -1
  }
  return sign;
}

CliffordElement CliffordElement::generator(int p, int q, int i) {
  if (i < 1 || i > p + q) throw std::invalid_argument("generator index range");
  return monomial(p, q, std::uint32_t(1) << (i - 1));
}

CliffordElement CliffordElement::monomial(int p, int q, std::uint32_t mask,
                                          const Rational& coef) {
  CliffordElement x(p, q);
  if (!coef.is_zero()) x.terms_[mask] = coef;
  return x;
}

Rational CliffordElement::coefficient(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CliffordElement::add_term(std::uint32_t mask, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_[mask] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement x(p_, q_);
  for (const auto& [m, c] : terms_) x.terms_[m] = -c;
  return x;
}

CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
  if (a.p_ != b.p_ || a.q_ != b.q_)
    throw signature_mismatch("clifford add: signature mismatch");
  CliffordElement x = a;
  for (const auto& [m, c] : b.terms_) x.add_term(m, c);
  return x;
}

CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
  return a + (-b);
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  if (a.p_ != b.p_ || a.q_ != b.q_)
    throw signature_mismatch("clifford mul: signature mismatch");
  CliffordElement x(a.p_, a.q_);
  for (const auto& [ms, cs] : a.terms_)
    for (const auto& [mt, ct] : b.terms_) {
      int sign = clifford_product_sign(a.p_, ms, mt);
      Rational c = cs * ct;
      x.add_term(ms ^ mt, sign > 0 ? c : -c);
    }
  return x;
}

CliffordElement CliffordElement::scaled(const Rational& c) const {
  CliffordElement x(p_, q_);
  if (c.is_zero()) return x;
  for (const auto& [m, v] : terms_) x.terms_[m] = v * c;
  return x;
}

CliffordElement CliffordElement::grade_involution() const {
  CliffordElement x(p_, q_);
  for (const auto& [m, c] : terms_)
    x.terms_[m] = (std::popcount(m) % 2 == 0) ? c : -c;
  return x;
}

CliffordElement CliffordElement::transpose_antiinvolution() const {
  CliffordElement x(p_, q_);
  for (const auto& [m, c] : terms_) {
    int k = std::popcount(m);
    bool flip = (k * (k - 1) / 2) % 2 != 0;
    x.terms_[m] = flip ? -c : c;
  }
  return x;
}

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    std::uint32_t mm = m;
    while (mm) {
      int bit = std::countr_zero(mm);
      mm &= mm - 1;
      os << "*e" << (bit + 1);
    }
  }
  return os.str();
}

std::vector<CliffordElement> spin_lie_basis(int p, int q) {
  if (p + q < 2) throw rank_too_small("spin_lie_basis needs p+q >= 2");
  std::vector<CliffordElement> out;
  for (int i = 1; i <= p + q; ++i)
    for (int j = i + 1; j <= p + q; ++j)
      out.push_back(CliffordElement::generator(p, q, i) *
                    CliffordElement::generator(p, q, j));
  return out;
}

std::vector<CliffordElement> p_part_basis_n1(int n) {
  if (n < 1) throw rank_too_small("p_part_basis_n1 needs n >= 1");
  std::vector<CliffordElement> out;
  CliffordElement last = CliffordElement::generator(n, 1, n + 1);
  for (int i = 1; i <= n; ++i)
    out.push_back(CliffordElement::generator(n, 1, i) * last);
  return out;
}

CliffordElement eta(const CliffordElement& x) {
  if (x.q() != 0) throw signature_mismatch("eta expects signature (n,0)");
  int n = x.p();
  CliffordElement out(n, 1);
  CliffordElement minus = CliffordElement::generator(n, 1, n + 1);
  for (const auto& [mask, c] : x.terms()) {
    CliffordElement img = CliffordElement::unit(n, 1).scaled(c);
    std::uint32_t mm = mask;
    while (mm) {
      int bit = std::countr_zero(mm);
      mm &= mm - 1;
      img = img * (CliffordElement::generator(n, 1, bit + 1) * minus);
    }
    out = out + img;
  }
  return out;
}

std::string CliffordType::to_string() const {
  std::string base;
  switch (kind) {
    case CliffordKind::MatR: base = "M(%,R)"; break;
    case CliffordKind::MatRSum: base = "M(%,R)+M(%,R)"; break;
    case CliffordKind::MatC: base = "M(%,C)"; break;
    case CliffordKind::MatH: base = "M(%,H)"; break;
    case CliffordKind::MatHSum: base = "M(%,H)+M(%,H)"; break;
  }
  std::string out;
  for (char ch : base) {
    if (ch == '%')
      out += std::to_string(block);
    else
      out += ch;
  }
  return out;
}

std::size_t CliffordType::real_dim() const {
  std::size_t b2 = block * block;
  switch (kind) {
    case CliffordKind::MatR: return b2;
    case CliffordKind::MatRSum: return 2 * b2;
    case CliffordKind::MatC: return 2 * b2;
    case CliffordKind::MatH: return 4 * b2;
    case CliffordKind::MatHSum: return 8 * b2;
  }
  return 0;
}

CliffordType clifford_type(int p, int q) {
  int n = p + q;
  int d = ((p - q) % 8 + 8) % 8;
  auto pow2 = [](int e) { return std::size_t(1) << e; };
  switch (d) {
    case 0: return {CliffordKind::MatR, pow2(n / 2)};
    case 1: return {CliffordKind::MatRSum, pow2((n - 1) / 2)};
    case 2: return {CliffordKind::MatR, pow2(n / 2)};
    case 3: return {CliffordKind::MatC, pow2((n - 1) / 2)};
    case 4: return {CliffordKind::MatH, pow2((n - 2) / 2)};
    case 5: return {CliffordKind::MatHSum, pow2((n - 3) / 2)};
    case 6: return {CliffordKind::MatH, pow2((n - 2) / 2)};
    default: return {CliffordKind::MatC, pow2((n - 1) / 2)};
  }
}

CliffordType even_clifford_type(int p, int q) {
  if (p + q < 1) throw std::invalid_argument("even_clifford_type: empty signature");
  if (q >= 1) return clifford_type(p, q - 1);
  return clifford_type(q, p - 1);
}

ComplexifiedType complexified(const CliffordType& t) {
  switch (t.kind) {
    case CliffordKind::MatR: return {t.block, 1};
    case CliffordKind::MatRSum: return {t.block, 2};
    case CliffordKind::MatC: return {t.block, 2};
    case CliffordKind::MatH: return {2 * t.block, 1};
    case CliffordKind::MatHSum: return {2 * t.block, 2};
  }
  return {0, 0};
}

std::size_t spin_dimension(int n) {
  if (n < 1) throw std::invalid_argument("spin_dimension needs n >= 1");
  if (n % 2 == 1) return std::size_t(1) << ((n - 1) / 2);
  return std::size_t(1) << ((n - 2) / 2);
}

CliffordInvariants clifford_invariants(int p, int q) {
  int n = p + q;
  std::uint32_t total = std::uint32_t(1) << n;
  long excess = 0;
  int center_dim = 0;
  bool splits = false;
  std::uint32_t full = total - 1;
  for (std::uint32_t s = 0; s < total; ++s) {
    // Sign of e_S^2.
    int sq = clifford_product_sign(p, s, s);
    excess += sq;
    // e_S is central iff it commutes with every generator.
    bool central = true;
    for (int i = 0; i < n && central; ++i) {
      std::uint32_t g = std::uint32_t(1) << i;
      int st = clifford_product_sign(p, s, g);
      int ts = clifford_product_sign(p, g, s);
      if (st != ts) central = false;
    }
    if (central) {
      ++center_dim;
      if (s == full && sq > 0) splits = true;
    }
  }
  return {excess, center_dim, splits};
}

namespace {

using MatList = std::vector<ExactMatrix>;

ExactMatrix rmat(std::initializer_list<std::initializer_list<int>> rows) {
  std::size_t n = rows.size();
  std::size_t m = rows.begin()->size();
  ExactMatrix out(Field::Real, n, m);
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (int v : row) out.at(r, c++) = Quaternion(Rational(v));
    ++r;
  }
  return out;
}

// Left-regular quaternion multiplications on R^4 in basis 1, i, j, k.
ExactMatrix left_mult_i() {
  return rmat({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
}
ExactMatrix left_mult_j() {
  return rmat({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
}

}  // namespace

std::vector<ExactMatrix> real_clifford_model(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative signature");
  // Base models.
  if (p == 0 && q == 0) return {};
  if (p == 1 && q == 0) return {rmat({{1, 0}, {0, -1}})};
  if (p == 0 && q == 1) return {rmat({{0, -1}, {1, 0}})};
  if (p == 2 && q == 0) return {rmat({{1, 0}, {0, -1}}), rmat({{0, 1}, {1, 0}})};
  if (p == 0 && q == 2) return {left_mult_i(), left_mult_j()};
  if (p == 1 && q == 1) return {rmat({{0, 1}, {1, 0}}), rmat({{0, 1}, {-1, 0}})};

  auto tensor_step = [](const MatList& sub, const ExactMatrix& f1,
                        const ExactMatrix& f2) {
    // New generators f1, f2 acting on the right factor; old generators are
    // twisted by w = f1 f2, which anticommutes with both.
    MatList out;
    std::size_t d = sub.empty() ? 1 : sub.front().rows();
    ExactMatrix id_sub = ExactMatrix::identity(Field::Real, d);
    ExactMatrix w = f1 * f2;
    for (const auto& g : sub) out.push_back(ExactMatrix::kron(g, w));
    out.push_back(ExactMatrix::kron(id_sub, f1));
    out.push_back(ExactMatrix::kron(id_sub, f2));
    return out;
  };

  if (p >= 1 && q >= 1) {
    MatList sub = real_clifford_model(p - 1, q - 1);
    MatList m = tensor_step(sub, rmat({{0, 1}, {1, 0}}), rmat({{0, 1}, {-1, 0}}));
    // Order: p-1 positive gens (twisted), then f1 (positive), then the rest.
    MatList out;
    for (int i = 0; i < p - 1; ++i) out.push_back(m[i]);
    out.push_back(m[sub.size()]);      // f1, squares +1
    for (int i = p - 1; i < p + q - 2; ++i) out.push_back(m[i]);
    out.push_back(m[sub.size() + 1]);  // f2, squares -1
    return out;
  }
  if (q == 0) {
    // C(p,0) from C(0,p-2) (x) C(2,0): twisted old gens square +1.
    MatList sub = real_clifford_model(0, p - 2);
    return tensor_step(sub, rmat({{1, 0}, {0, -1}}), rmat({{0, 1}, {1, 0}}));
  }
  // C(0,q) from C(q-2,0) (x) C(0,2): twisted old gens square -1.
  MatList sub = real_clifford_model(q - 2, 0);
  MatList m = tensor_step(sub, left_mult_i(), left_mult_j());
  return m;
}

}  // namespace hradon
