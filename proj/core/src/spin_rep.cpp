#include "hradon/spin_rep.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

#include "hradon/clifford.hpp"

namespace hradon {

int dagger_delta(Dagger d) {
  switch (d) {
    case Dagger::Conj: return 1;
    case Dagger::Dual: return -1;
    default: throw std::invalid_argument("delta defined for conj/dual only");
  }
}

bool in_n_dagger(int n, Dagger d) {
  if (n % 2 == 0) return false;
  switch (d) {
    case Dagger::Id: return true;
    case Dagger::ConjDual: return false;
    default: {
      int r = ((dagger_delta(d) * n) % 8 + 8) % 8;
      return r == 1 || r == 5;  // 1 or -3 mod 8
    }
  }
}

SelfDagger self_dagger(int n, Dagger d) {
  if (n < 2) throw std::invalid_argument("level must be >= 2");
  if (n % 2 == 0 || d == Dagger::Id) return SelfDagger::All;
  return in_n_dagger(n, d) ? SelfDagger::All : SelfDagger::None;
}

bool DominantWeight::is_half_integral() const {
  for (const auto& c : coords)
    if ((c * Rational(2)).is_integer() == false || c.is_integer()) return false;
  return !coords.empty();
}

void DominantWeight::validate() const {
  if (type != 'B' && type != 'D') throw non_dominant("type must be B or D");
  if (coords.empty()) throw non_dominant("empty weight");
  bool all_int = true, all_half = true;
  for (const auto& c : coords) {
    if (!c.is_integer()) all_int = false;
    if (!(c * Rational(2)).is_integer() || c.is_integer()) all_half = false;
  }
  if (!all_int && !all_half)
    throw non_dominant("coordinates must be all integral or all half-integral");
  for (std::size_t i = 0; i + 1 < coords.size(); ++i)
    if (coords[i] < coords[i + 1]) throw non_dominant("not weakly decreasing");
  if (type == 'B') {
    if (coords.back().sign() < 0) throw non_dominant("last coordinate negative");
  } else {
    if (coords.size() >= 2) {
      Rational last = coords.back();
      Rational abs_last = last.sign() < 0 ? -last : last;
      if (coords[coords.size() - 2] < abs_last)
        throw non_dominant("dominance fails at the fork");
    }
  }
}

std::string DominantWeight::to_string() const {
  std::ostringstream os;
  os << type << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i].to_string();
  }
  os << ")";
  return os.str();
}

long weyl_dimension(const DominantWeight& lam) {
  lam.validate();
  std::size_t l = lam.rank();
  std::vector<Rational> a(l), r(l);
  for (std::size_t i = 0; i < l; ++i) {
    Rational rho = lam.type == 'B'
                       ? Rational(2 * (static_cast<std::int64_t>(l - i)) - 1, 2)
                       : Rational(static_cast<std::int64_t>(l - i) - 1);
    r[i] = rho;
    a[i] = lam.coords[i] + rho;
  }
  Rational dim(1);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      dim *= (a[i] * a[i] - a[j] * a[j]) / (r[i] * r[i] - r[j] * r[j]);
  if (lam.type == 'B')
    for (std::size_t i = 0; i < l; ++i) dim *= a[i] / r[i];
  if (!dim.is_integer())
    throw std::logic_error("dimension came out non-integral");
  return static_cast<long>(dim.num());
}

bool divisibility_check(int p, int q, const DominantWeight& lam) {
  long dim = weyl_dimension(lam);
  int e = (p + q + 1) / 2 - 1;
  long divisor = 1L << e;
  return dim % divisor == 0;
}

namespace {

ExactMatrix cmat2(std::initializer_list<Quaternion> vals) {
  ExactMatrix m(Field::Complex, 2, 2);
  auto it = vals.begin();
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) m.set(r, c, *it++);
  return m;
}

ExactMatrix pauli(int k) {
  Quaternion zero, one = Quaternion::one(), i = Quaternion::i();
  switch (k) {
    case 1: return cmat2({zero, one, one, zero});
    case 2: return cmat2({zero, -i, i, zero});
    default: return cmat2({one, zero, zero, -one});
  }
}

}  // namespace

std::vector<ExactMatrix> spin_model_generators(int n, int branch) {
  if (n < 1) throw std::invalid_argument("level must be positive");
  int m = n / 2;
  auto place = [m](const ExactMatrix& mid, int slot) {
    ExactMatrix out = ExactMatrix::identity(Field::Complex, 1);
    for (int t = 0; t < slot; ++t) out = ExactMatrix::kron(out, pauli(3));
    out = ExactMatrix::kron(out, mid);
    for (int t = slot + 1; t < m; ++t)
      out = ExactMatrix::kron(out, ExactMatrix::identity(Field::Complex, 2));
    return out;
  };
  std::vector<ExactMatrix> gens;
  for (int j = 0; j < m; ++j) {
    gens.push_back(place(pauli(1), j));
    gens.push_back(place(pauli(2), j));
  }
  if (n % 2 == 1) {
    ExactMatrix last = ExactMatrix::identity(Field::Complex, 1);
    for (int t = 0; t < m; ++t) last = ExactMatrix::kron(last, pauli(3));
    if (branch < 0) last = -last;
    gens.push_back(last);
  }
  return gens;
}

namespace {

// Flattens a complex matrix into interleaved re/im coordinates.
RatVec flatten(const ExactMatrix& b) {
  RatVec v;
  v.reserve(2 * b.rows() * b.cols());
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      v.push_back(b.at(r, c).w());
      v.push_back(b.at(r, c).x());
    }
  return v;
}

// Intersects the current solution basis with ker(op) where op is
// complex-linear in its matrix argument.
std::vector<ExactMatrix> refine_kernel(
    const std::vector<ExactMatrix>& basis,
    const std::function<ExactMatrix(const ExactMatrix&)>& op) {
  if (basis.empty()) return {};
  std::size_t d = basis.front().rows();
  // Columns: images of b and i*b for every basis element.
  std::vector<RatVec> cols;
  for (const auto& b : basis) {
    cols.push_back(flatten(op(b)));
    cols.push_back(flatten(op(b.scaled(Quaternion::i()))));
  }
  std::size_t rows = 2 * d * d;
  std::vector<bool> live(rows, false);
  for (const auto& col : cols)
    for (std::size_t r = 0; r < rows; ++r)
      if (!col[r].is_zero()) live[r] = true;
  RatMat sys;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!live[r]) continue;
    RatVec row(cols.size(), Rational(0));
    for (std::size_t c = 0; c < cols.size(); ++c) row[c] = cols[c][r];
    sys.push_back(std::move(row));
  }
  std::vector<RatVec> combos = kernel_basis(std::move(sys), cols.size());
  std::vector<ExactMatrix> out;
  for (const auto& combo : combos) {
    ExactMatrix acc = ExactMatrix::zero(Field::Complex, d, d);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Quaternion coef(combo[2 * k], combo[2 * k + 1]);
      if (coef.is_zero()) continue;
      acc = acc + basis[k].scaled(coef);
    }
    if (!acc.is_zero()) out.push_back(acc);
  }
  return out;
}

std::vector<ExactMatrix> full_matrix_basis(std::size_t d) {
  std::vector<ExactMatrix> basis;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      ExactMatrix m = ExactMatrix::zero(Field::Complex, d, d);
      m.at(r, c) = Quaternion::one();
      basis.push_back(m);
    }
  return basis;
}

bool is_invertible(const ExactMatrix& b) {
  std::size_t d = b.rows();
  RatMat a(2 * d, RatVec(2 * d, Rational(0)));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const Quaternion& q = b.at(r, c);
      // Real 2x2 block of the complex entry.
      a[2 * r][2 * c] = q.w();
      a[2 * r][2 * c + 1] = -q.x();
      a[2 * r + 1][2 * c] = q.x();
      a[2 * r + 1][2 * c + 1] = q.w();
    }
  return matrix_rank(std::move(a)) == 2 * d;
}

}  // namespace

FormType invariant_bilinear_type(const std::vector<ExactMatrix>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator set");
  std::size_t d = gens.front().rows();
  std::vector<ExactMatrix> sol = full_matrix_basis(d);
  for (const auto& x : gens) {
    sol = refine_kernel(sol, [&x](const ExactMatrix& b) {
      return x.transpose() * b + b * x;
    });
    if (sol.empty()) return FormType::None;
  }
  for (const auto& b : sol) {
    if (!is_invertible(b)) continue;
    if (b.transpose() == b) return FormType::Symmetric;
    if (b.transpose() == -b) return FormType::Alternating;
    // Split into symmetric and alternating parts; each is again invariant.
    ExactMatrix sym = (b + b.transpose()).scaled(Quaternion(Rational(1, 2)));
    if (is_invertible(sym)) return FormType::Symmetric;
    ExactMatrix alt = (b - b.transpose()).scaled(Quaternion(Rational(1, 2)));
    if (is_invertible(alt)) return FormType::Alternating;
  }
  throw singular_only("bilinear solution space contains no invertible form");
}

FormType invariant_conj_type(const std::vector<ExactMatrix>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator set");
  std::size_t d = gens.front().rows();
  std::vector<ExactMatrix> sol = full_matrix_basis(d);
  for (const auto& x : gens) {
    sol = refine_kernel(sol, [&x](const ExactMatrix& j) {
      return j * x.entrywise_conj() - x * j;
    });
    if (sol.empty()) return FormType::None;
  }
  for (const auto& j : sol) {
    if (!is_invertible(j)) continue;
    ExactMatrix p = j * j.entrywise_conj();
    // p must be a real scalar; classify by its sign.
    Quaternion c = p.at(0, 0);
    if (p == ExactMatrix::scalar(Field::Complex, d, c) && c.is_real() &&
        !c.is_zero())
      return c.w().sign() > 0 ? FormType::RealStructure
                              : FormType::QuaternionicStructure;
  }
  throw singular_only("conjugation solution space contains no structure map");
}

int index_spin(int n, Dagger d) {
  if (d != Dagger::Conj && d != Dagger::Dual)
    throw not_self_dagger("index defined for the conj and dual twists");
  if (self_dagger(n, d) == SelfDagger::None)
    throw not_self_dagger("class not fixed by the twist at this level");
  if (d == Dagger::Conj) {
    CliffordType t = clifford_type(n, 0);
    switch (t.kind) {
      case CliffordKind::MatR:
      case CliffordKind::MatRSum:
        return 1;
      case CliffordKind::MatH:
      case CliffordKind::MatHSum:
        return -1;
      case CliffordKind::MatC:
        throw not_self_dagger("complex type: class not self-conjugate");
    }
  }
  // The dual index comes from a model solve; cache it per level.
  static std::map<int, int> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  FormType t = invariant_bilinear_type(spin_model_generators(n));
  int value;
  if (t == FormType::Symmetric)
    value = 1;
  else if (t == FormType::Alternating)
    value = -1;
  else
    throw not_self_dagger("no invariant bilinear form on the model");
  std::lock_guard<std::mutex> lock(mu);
  cache[n] = value;
  return value;
}

DominantWeight spin_weight(int n, int branch) {
  std::size_t l = n % 2 == 0 ? n / 2 : (n + 1) / 2;
  DominantWeight w{n % 2 == 0 ? 'B' : 'D',
                   std::vector<Rational>(l, Rational(1, 2))};
  if (n % 2 == 1 && branch < 0) w.coords.back() = Rational(-1, 2);
  return w;
}

int index_general(int n, const DominantWeight& lam, Dagger d) {
  lam.validate();
  if (!lam.is_half_integral())
    throw non_half_integral(lam.to_string() + " is not half-integral");
  return index_spin(n, d);
}

long RepMultiplicity::total_dimension() const {
  long total = 0;
  char type = n % 2 == 0 ? 'B' : 'D';
  for (const auto& [coords, m] : mults)
    total += m * weyl_dimension(DominantWeight{type, coords});
  return total;
}

bool RepMultiplicity::all_half_integral() const {
  char type = n % 2 == 0 ? 'B' : 'D';
  for (const auto& [coords, m] : mults)
    if (!DominantWeight{type, coords}.is_half_integral()) return false;
  return true;
}

std::vector<Rational> dagger_label(int n, Dagger d,
                                   const std::vector<Rational>& lam) {
  if (n % 2 == 0 || d == Dagger::Id) return lam;
  if (in_n_dagger(n, d)) return lam;
  std::vector<Rational> out = lam;
  out.back() = -out.back();
  return out;
}

bool embed_g_dagger_eps(const RepMultiplicity& tau, Dagger d, int eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +-1");
  for (const auto& [lam, m] : tau.mults) {
    std::vector<Rational> twisted = dagger_label(tau.n, d, lam);
    if (twisted == lam) {
      if (eps * index_spin(tau.n, d) == -1 && m % 2 != 0) return false;
    } else {
      auto it = tau.mults.find(twisted);
      long other = it == tau.mults.end() ? 0 : it->second;
      if (other != m) return false;
    }
  }
  return true;
}

bool embed_u(const RepMultiplicity& tau) {
  for (const auto& [lam, m] : tau.mults) {
    std::vector<Rational> twisted = dagger_label(tau.n, Dagger::ConjDual, lam);
    auto it = tau.mults.find(twisted);
    long other = it == tau.mults.end() ? 0 : it->second;
    if (other != m) return false;
  }
  return true;
}

EmbedResult embed_real_form(const RepMultiplicity& tau, RealTarget target) {
  int s_dual, s_conj;
  switch (target) {
    case RealTarget::Opq: s_dual = 1; s_conj = 1; break;
    case RealTarget::SpR: s_dual = -1; s_conj = 1; break;
    case RealTarget::Sprs: s_dual = -1; s_conj = -1; break;
    case RealTarget::OStar: s_dual = 1; s_conj = -1; break;
    default: throw std::invalid_argument("bad target");
  }
  EmbedResult res;
  res.ok = embed_g_dagger_eps(tau, Dagger::Dual, s_dual) &&
           embed_g_dagger_eps(tau, Dagger::Conj, s_conj);
  if (res.ok) {
    long total = tau.total_dimension();
    if (total % 2 != 0)
      throw odd_total_dimension("neutral signature impossible in odd dimension");
    res.sig_p = res.sig_q = static_cast<std::size_t>(total / 2);
  }
  return res;
}

RepMultiplicity spinify(const RepMultiplicity& tau, Dagger d) {
  if (!tau.all_half_integral())
    throw non_half_integral("labels must be half-integral");
  int n = tau.n;
  long total = tau.total_dimension();
  RepMultiplicity out;
  out.n = n;
  if (n % 2 == 0) {
    long dim_s = weyl_dimension(spin_weight(n));
    out.mults[spin_weight(n).coords] = total / dim_s;
    return out;
  }
  long dim_s1 = weyl_dimension(spin_weight(n, -1));
  if (in_n_dagger(n, d)) {
    out.mults[spin_weight(n, -1).coords] = total / dim_s1;
    return out;
  }
  // Balanced case: requires the multiplicities to be twist-symmetric.
  for (const auto& [lam, m] : tau.mults) {
    std::vector<Rational> twisted = dagger_label(n, d, lam);
    auto it = tau.mults.find(twisted);
    long other = it == tau.mults.end() ? 0 : it->second;
    if (other != m)
      throw std::invalid_argument(
          "multiplicities are not symmetric under the twist");
  }
  out.mults[spin_weight(n, -1).coords] = total / (2 * dim_s1);
  out.mults[spin_weight(n, +1).coords] = total / (2 * dim_s1);
  return out;
}

}  // namespace hradon
