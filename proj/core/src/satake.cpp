#include "hradon/satake.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hradon {

void SatakeDiagram::add_arrow(std::size_t a, std::size_t b) {
  if (a == b) return;
  if (black.count(a) || black.count(b))
    throw std::logic_error("arrow endpoint must be white");
  arrows[a] = b;
  arrows[b] = a;
}

SatakeDiagram SatakeDiagram::fork_swapped() const {
  if (dynkin_type != 'D' || rank < 2)
    throw std::logic_error("fork swap needs type D");
  auto swap_node = [this](std::size_t v) {
    if (v == rank - 1) return rank;
    if (v == rank) return rank - 1;
    return v;
  };
  SatakeDiagram out{dynkin_type, rank, {}, {}};
  for (std::size_t b : black) out.black.insert(swap_node(b));
  for (const auto& [a, b] : arrows) out.arrows[swap_node(a)] = swap_node(b);
  return out;
}

SatakeDiagram SatakeDiagram::reversed() const {
  if (dynkin_type != 'A') throw std::logic_error("reversal needs type A");
  auto rev = [this](std::size_t v) { return rank + 1 - v; };
  SatakeDiagram out{dynkin_type, rank, {}, {}};
  for (std::size_t b : black) out.black.insert(rev(b));
  for (const auto& [a, b] : arrows) out.arrows[rev(a)] = rev(b);
  return out;
}

std::string SatakeDiagram::ascii() const {
  std::ostringstream os;
  auto node = [this](std::size_t i) {
    return black.count(i) ? std::string("*") : std::string("o");
  };
  if (dynkin_type == 'D' && rank >= 2) {
    for (std::size_t i = 1; i + 2 <= rank; ++i) os << node(i) << "--";
    os << "<" << node(rank - 1) << "," << node(rank) << ">";
  } else {
    for (std::size_t i = 1; i <= rank; ++i) {
      if (i > 1)
        os << (dynkin_type == 'B' && i == rank
                   ? "=>"
                   : (dynkin_type == 'C' && i == rank ? "<=" : "--"));
      os << node(i);
    }
  }
  bool first = true;
  for (const auto& [a, b] : arrows) {
    if (a > b) continue;
    os << (first ? "  arrows: " : ", ") << a << "<->" << b;
    first = false;
  }
  return os.str();
}

namespace {

SatakeDiagram split_diagram(char type, std::size_t rank) {
  return SatakeDiagram{type, rank, {}, {}};
}

SatakeDiagram su_diagram(std::size_t p, std::size_t q) {
  std::size_t n = p + q;
  if (n < 2) throw unknown_form("su needs p+q >= 2");
  std::size_t r = std::min(p, q);
  SatakeDiagram d{'A', n - 1, {}, {}};
  for (std::size_t i = r + 1; i + r + 1 <= n; ++i) d.black.insert(i);
  for (std::size_t i = 1; i <= r && 2 * i != n; ++i) d.add_arrow(i, n - i);
  return d;
}

SatakeDiagram sl_h_diagram(std::size_t n) {
  // sl(n,H) on A_{2n-1}: odd nodes black.
  SatakeDiagram d{'A', 2 * n - 1, {}, {}};
  for (std::size_t i = 1; i <= 2 * n - 1; i += 2) d.black.insert(i);
  return d;
}

SatakeDiagram so_diagram(std::size_t p, std::size_t q) {
  std::size_t n = p + q;
  std::size_t r = std::min(p, q);
  if (n % 2 == 1) {
    std::size_t l = (n - 1) / 2;
    SatakeDiagram d{'B', l, {}, {}};
    for (std::size_t i = r + 1; i <= l; ++i) d.black.insert(i);
    return d;
  }
  std::size_t l = n / 2;
  if (l < 2) throw unknown_form("so real form of rank < 2");
  SatakeDiagram d{'D', l, {}, {}};
  std::size_t diff = p > q ? p - q : q - p;
  if (diff == 0) return d;  // split
  if (diff == 2) {
    d.add_arrow(l - 1, l);  // quasi-split
    return d;
  }
  for (std::size_t i = r + 1; i <= l; ++i) d.black.insert(i);
  return d;
}

SatakeDiagram sp_pq_diagram(std::size_t p, std::size_t q) {
  std::size_t n = p + q;
  std::size_t r = std::min(p, q);
  SatakeDiagram d{'C', n, {}, {}};
  for (std::size_t i = 1; i <= 2 * r && i <= n; i += 2) d.black.insert(i);
  for (std::size_t i = 2 * r + 1; i <= n; ++i) d.black.insert(i);
  return d;
}

SatakeDiagram so_star_diagram(std::size_t n) {
  // so*(2n) on D_n.
  if (n < 3) throw unknown_form("so* form of rank < 3 is not simple");
  SatakeDiagram d{'D', n, {}, {}};
  if (n % 2 == 0) {
    for (std::size_t i = 1; i + 3 <= n; i += 2) d.black.insert(i);
    d.black.insert(n);
  } else {
    for (std::size_t i = 1; i + 2 <= n; i += 2) d.black.insert(i);
    d.add_arrow(n - 1, n);
  }
  return d;
}

}  // namespace

SatakeDiagram satake(const ClassicalAlgebra& form) {
  switch (form.family) {
    case Family::SL_R:
      if (form.n < 2) throw unknown_form("sl(1,R) has empty diagram");
      return split_diagram('A', form.n - 1);
    case Family::SL_H:
      return sl_h_diagram(form.n);
    case Family::SU:
      return su_diagram(form.p, form.q);
    case Family::SO:
      return so_diagram(form.p, form.q);
    case Family::SP_R:
      return split_diagram('C', form.n);
    case Family::SP:
      return sp_pq_diagram(form.p, form.q);
    case Family::SO_STAR:
      return so_star_diagram(form.n);
    default:
      throw unknown_form(form.to_string() +
                         " is not in the real-form diagram catalog");
  }
}

bool matches(const WeightedDiagram& f, const SatakeDiagram& s) {
  if (f.dynkin_type != s.dynkin_type || f.rank() != s.rank)
    throw type_mismatch("weighted and decorated diagrams disagree in type");
  for (std::size_t b : s.black)
    if (f.weights[b - 1] != 0) return false;
  for (const auto& [a, b] : s.arrows)
    if (f.weights[a - 1] != f.weights[b - 1]) return false;
  return true;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<int> constraint_canonical_form(
    const std::vector<SatakeDiagram>& ds) {
  if (ds.empty()) return {};
  std::size_t rank = ds.front().rank;
  UnionFind uf(rank);
  std::vector<bool> zero(rank, false);
  for (const auto& d : ds) {
    if (d.rank != rank || d.dynkin_type != ds.front().dynkin_type)
      throw type_mismatch("constraint systems live on different diagrams");
    for (const auto& [a, b] : d.arrows) uf.unite(a - 1, b - 1);
    for (std::size_t b : d.black) zero[b - 1] = true;
  }
  std::vector<bool> class_zero(rank, false);
  for (std::size_t v = 0; v < rank; ++v)
    if (zero[v]) class_zero[uf.find(v)] = true;
  std::vector<int> out(rank);
  std::map<std::size_t, int> ids;
  for (std::size_t v = 0; v < rank; ++v) {
    std::size_t root = uf.find(v);
    if (class_zero[root]) {
      out[v] = -1;
    } else {
      auto [it, fresh] = ids.try_emplace(root, static_cast<int>(ids.size()));
      out[v] = it->second;
    }
  }
  return out;
}

int matching_space_dim(const SatakeDiagram& a, const SatakeDiagram& b) {
  std::vector<int> canon = constraint_canonical_form({a, b});
  int free_classes = 0;
  for (int v : canon) free_classes = std::max(free_classes, v + 1);
  return free_classes;
}

std::size_t real_rank(const ClassicalAlgebra& g) {
  switch (g.family) {
    case Family::SL_R:
    case Family::SL_C:
    case Family::SL_H:
      return g.n - 1;
    case Family::GL_R:
    case Family::GL_C:
    case Family::GL_H:
      return g.n;
    case Family::SU:
    case Family::SO:
    case Family::SP:
      return std::min(g.p, g.q);
    case Family::SP_R:
    case Family::SP_C:
      return g.n;
    case Family::SO_C:
      return g.n / 2;
    case Family::SO_STAR:
      return g.n / 2;
  }
  return 0;
}

bool SymmetricSpaceEntry::graph_auto_is_identity() const {
  for (std::size_t i = 0; i < graph_auto.size(); ++i)
    if (graph_auto[i] != i + 1) return false;
  return true;
}

namespace {

std::string txt(const ClassicalAlgebra& g) { return g.to_string(); }

void finish_case_c(SymmetricSpaceEntry& e) {
  // Sanity: the simultaneous pair must cut out a space of dimension equal to
  // the real rank of h, and alternative alignments are diagnosed.
  int dim = matching_space_dim(*e.s_g, *e.s_crit);
  if (dim != static_cast<int>(e.h_real_rank))
    throw std::logic_error("catalog row " + e.row_id +
                           ": matching space dimension " + std::to_string(dim) +
                           " != real rank " + std::to_string(e.h_real_rank));
  std::vector<SatakeDiagram> alts;
  if (e.s_crit->dynkin_type == 'A') alts.push_back(e.s_crit->reversed());
  if (e.s_crit->dynkin_type == 'D') alts.push_back(e.s_crit->fork_swapped());
  for (const auto& alt : alts) {
    if (alt == *e.s_crit) continue;
    if (matching_space_dim(*e.s_g, alt) != static_cast<int>(e.h_real_rank))
      continue;
    e.alt_alignment_passes_rank = true;
    if (constraint_canonical_form({*e.s_g, alt}) !=
        constraint_canonical_form({*e.s_g, *e.s_crit}))
      e.alt_alignment_differs = true;
  }
}

}  // namespace

SymmetricSpaceEntry table1_entry(int row, std::size_t n, std::size_t p) {
  SymmetricSpaceEntry e;
  e.row_id = "t1." + std::to_string(row);
  auto require = [&](bool cond, const char* msg) {
    if (!cond)
      throw not_in_catalog(std::string(msg) + " (row " + std::to_string(row) +
                           ")");
  };
  switch (row) {
    case 1: {
      require(n >= 1, "needs N >= 1");
      e.case_tag = 'C';
      ClassicalAlgebra g = ClassicalAlgebra::sized(Family::SL_R, 2 * n);
      ClassicalAlgebra gc = ClassicalAlgebra::signature(Family::SU, n + 1, n - 1);
      e.g_text = txt(g);
      e.h_text = "so(" + std::to_string(n + 1) + "," + std::to_string(n - 1) + ")";
      e.gc_text = txt(gc);
      e.ambient = ComplexSimpleType::sl(2 * n);
      e.h_real_rank = n - 1;
      e.s_g = satake(g);
      e.s_crit = satake(gc);
      finish_case_c(e);
      break;
    }
    case 2: {
      require(n >= 1, "needs N >= 1");
      e.case_tag = 'B';
      ClassicalAlgebra h = ClassicalAlgebra::signature(Family::SU, n + 1, n - 1);
      e.g_text = "sl(" + std::to_string(2 * n) + ",C)";
      e.h_text = txt(h);
      e.ambient = ComplexSimpleType::sl(2 * n);
      e.h_real_rank = n - 1;
      e.s_crit = satake(h);
      break;
    }
    case 3: {
      require(n >= 1, "needs N >= 1");
      e.case_tag = 'C';
      ClassicalAlgebra g = ClassicalAlgebra::sized(Family::SL_H, 2 * n);
      ClassicalAlgebra gc =
          ClassicalAlgebra::signature(Family::SU, 2 * n + 2, 2 * n - 2);
      e.g_text = txt(g);
      e.h_text = "sp(" + std::to_string(n + 1) + "," + std::to_string(n - 1) + ")";
      e.gc_text = txt(gc);
      e.ambient = ComplexSimpleType::sl(4 * n);
      e.h_real_rank = n - 1;
      e.s_g = satake(g);
      e.s_crit = satake(gc);
      finish_case_c(e);
      break;
    }
    case 4: {
      require(n >= 2, "so*(4N) needs N >= 2");
      e.case_tag = 'C';
      ClassicalAlgebra g = ClassicalAlgebra::sized(Family::SO_STAR, 2 * n);
      ClassicalAlgebra gc =
          ClassicalAlgebra::signature(Family::SO, 2 * n + 2, 2 * n - 2);
      e.g_text = txt(g);
      e.h_text = "u(" + std::to_string(n + 1) + "," + std::to_string(n - 1) + ")";
      e.gc_text = txt(gc);
      e.ambient = ComplexSimpleType::so(4 * n);
      e.h_real_rank = n - 1;
      e.s_g = satake(g);
      e.s_crit = satake(gc);
      finish_case_c(e);
      break;
    }
    case 5: {
      require(n >= 3, "so(2N,C) needs N >= 3");
      e.case_tag = 'B';
      ClassicalAlgebra h = ClassicalAlgebra::signature(Family::SO, n + 1, n - 1);
      e.g_text = "so(" + std::to_string(2 * n) + ",C)";
      e.h_text = txt(h);
      e.ambient = ComplexSimpleType::so(2 * n);
      e.h_real_rank = n - 1;
      e.s_crit = satake(h);
      break;
    }
    case 6: {
      require(n >= 3 && 2 * p < n, "needs N >= 3, 0 <= p < N/2");
      e.case_tag = 'C';
      ClassicalAlgebra g = ClassicalAlgebra::signature(Family::SO, n, n);
      ClassicalAlgebra gc = ClassicalAlgebra::signature(Family::SO, n + 1, n - 1);
      e.g_text = txt(g);
      e.h_text = "so(" + std::to_string(p) + "," + std::to_string(p + 1) +
                 ") + so(" + std::to_string(n - p) + "," +
                 std::to_string(n - p - 1) + ")";
      e.gc_text = txt(gc);
      e.ambient = ComplexSimpleType::so(2 * n);
      e.h_real_rank = n - 1;
      e.s_g = satake(g);
      e.s_crit = satake(gc);
      finish_case_c(e);
      break;
    }
    case 7: {
      require(n >= 1 && 2 * p < n, "needs 0 <= p < N/2");
      e.case_tag = 'C';
      ClassicalAlgebra g = ClassicalAlgebra::signature(Family::SU, n, n);
      ClassicalAlgebra gc = ClassicalAlgebra::signature(Family::SU, n + 1, n - 1);
      e.g_text = txt(g);
      e.h_text = "s(u(" + std::to_string(p) + "," + std::to_string(p + 1) +
                 ") + u(" + std::to_string(n - p) + "," +
                 std::to_string(n - p - 1) + "))";
      e.gc_text = txt(gc);
      e.ambient = ComplexSimpleType::sl(2 * n);
      e.h_real_rank = n - 1;
      e.s_g = satake(g);
      e.s_crit = satake(gc);
      finish_case_c(e);
      break;
    }
    case 8: {
      require(n >= 1 && 2 * p < n, "needs 0 <= p < N/2");
      e.case_tag = 'C';
      ClassicalAlgebra g = ClassicalAlgebra::signature(Family::SP, n, n);
      ClassicalAlgebra gc = ClassicalAlgebra::signature(Family::SP, n + 1, n - 1);
      e.g_text = txt(g);
      e.h_text = "sp(" + std::to_string(p) + "," + std::to_string(p + 1) +
                 ") + sp(" + std::to_string(n - p) + "," +
                 std::to_string(n - p - 1) + ")";
      e.gc_text = txt(gc);
      e.ambient = ComplexSimpleType::sp_half(2 * n);
      e.h_real_rank = n - 1;
      e.s_g = satake(g);
      e.s_crit = satake(gc);
      finish_case_c(e);
      break;
    }
    case 9: {
      require(n >= 2 && 2 * p < n, "so*(4N) needs N >= 2, 0 <= p < N/2");
      e.case_tag = 'C';
      ClassicalAlgebra g = ClassicalAlgebra::sized(Family::SO_STAR, 2 * n);
      e.g_text = txt(g);
      e.h_text = "so*(" + std::to_string(4 * p + 2) + ") + so*(" +
                 std::to_string(4 * n - 4 * p - 2) + ")";
      e.gc_text = "so*(" + std::to_string(4 * n) + ")";
      e.ambient = ComplexSimpleType::so(4 * n);
      e.h_real_rank = n - 1;
      e.s_g = satake(g);
      // Both factors have odd half-size, which swaps the fork blackening of
      // the second diagram of the simultaneous pair.
      e.s_crit = satake(g).fork_swapped();
      finish_case_c(e);
      break;
    }
    case 10: {
      require(n >= 3 && 2 * p < n, "needs N >= 3, 0 <= p < N/2");
      e.case_tag = 'A';
      e.g_text = "so(" + std::to_string(2 * n) + ",C)";
      e.h_text = "so(" + std::to_string(2 * p + 1) + ",C) + so(" +
                 std::to_string(2 * n - 2 * p - 1) + ",C)";
      e.ambient = ComplexSimpleType::so(2 * n);
      e.h_real_rank = n - 1;
      e.graph_auto.resize(n);
      for (std::size_t i = 0; i < n; ++i) e.graph_auto[i] = i + 1;
      std::swap(e.graph_auto[n - 2], e.graph_auto[n - 1]);
      break;
    }
    default:
      throw not_in_catalog("row must be 1..10");
  }
  return e;
}

int table6_row_count() { return 19; }

SymmetricSpaceEntry table6_entry(int row) {
  SymmetricSpaceEntry e;
  e.row_id = "t6." + std::to_string(row);
  e.case_tag = 'C';
  auto su = [](std::size_t p, std::size_t q) {
    return ClassicalAlgebra::signature(Family::SU, p, q);
  };
  auto so = [](std::size_t p, std::size_t q) {
    return ClassicalAlgebra::signature(Family::SO, p, q);
  };
  auto sp = [](std::size_t p, std::size_t q) {
    return ClassicalAlgebra::signature(Family::SP, p, q);
  };
  switch (row) {
    case 1:
      e.g_text = "sl(4,R)";
      e.h_text = "sl(2,C) + so(2)";
      e.gc_text = "sl(2,H)";
      e.ambient = ComplexSimpleType::sl(4);
      e.h_real_rank = 1;
      e.s_g = satake(ClassicalAlgebra::sized(Family::SL_R, 4));
      e.s_crit = satake(ClassicalAlgebra::sized(Family::SL_H, 2));
      e.witness = Partition::parse("3,1");
      break;
    case 2:
      e.g_text = "sl(5,R)";
      e.h_text = "so(4,1)";
      e.gc_text = "su(4,1)";
      e.ambient = ComplexSimpleType::sl(5);
      e.h_real_rank = 1;
      e.s_g = satake(ClassicalAlgebra::sized(Family::SL_R, 5));
      e.s_crit = satake(su(4, 1));
      e.witness = Partition::parse("4,1");
      break;
    case 3:
      e.g_text = "sl(5,H)";
      e.h_text = "sp(4,1)";
      e.gc_text = "su(8,2)";
      e.ambient = ComplexSimpleType::sl(10);
      e.h_real_rank = 1;
      e.s_g = satake(ClassicalAlgebra::sized(Family::SL_H, 5));
      e.s_crit = satake(su(8, 2));
      e.witness = Partition::parse("4^2,1^2");
      break;
    case 4:
      e.g_text = "su(4,2)";
      e.h_text = "sp(2,1)";
      e.gc_text = "sl(3,H)";
      e.ambient = ComplexSimpleType::sl(6);
      e.h_real_rank = 1;
      e.s_g = satake(su(4, 2));
      e.s_crit = satake(ClassicalAlgebra::sized(Family::SL_H, 3));
      e.witness = Partition::parse("5,1");
      break;
    case 5:
      e.g_text = "su(2,2)";
      e.h_text = "sp(1,1)";
      e.gc_text = "sl(2,H)";
      e.ambient = ComplexSimpleType::sl(4);
      e.h_real_rank = 1;
      e.s_g = satake(su(2, 2));
      e.s_crit = satake(ClassicalAlgebra::sized(Family::SL_H, 2));
      e.witness = Partition::parse("3,1");
      break;
    case 6:
      e.g_text = "su(4,4)";
      e.h_text = "so*(8)";
      e.gc_text = "sl(4,H)";
      e.ambient = ComplexSimpleType::sl(8);
      e.h_real_rank = 2;
      e.s_g = satake(su(4, 4));
      e.s_crit = satake(ClassicalAlgebra::sized(Family::SL_H, 4));
      e.witness = Partition::parse("7,1");
      break;
    case 7:
      e.g_text = "su(3,2)";
      e.h_text = "su(3,1) + su(0,1) + so(2)";
      e.gc_text = "su(4,1)";
      e.ambient = ComplexSimpleType::sl(5);
      e.h_real_rank = 1;
      e.s_g = satake(su(3, 2));
      e.s_crit = satake(su(4, 1));
      e.witness = Partition::parse("5");
      break;
    case 8:
      e.g_text = "su(2,2)";
      e.h_text = "su(2,0) + su(0,2) + so(2)";
      e.gc_text = "su(4,0)";
      e.ambient = ComplexSimpleType::sl(4);
      e.h_real_rank = 0;
      e.s_g = satake(su(2, 2));
      e.s_crit = satake(su(4, 0));
      e.witness = Partition::parse("3,1");
      break;
    case 9:
      e.g_text = "sp(2,R)";
      e.h_text = "su(1,1) + so(2)";
      e.gc_text = "sp(1,1)";
      e.ambient = ComplexSimpleType::sp_half(2);
      e.h_real_rank = 1;
      e.s_g = satake(ClassicalAlgebra::sized(Family::SP_R, 2));
      e.s_crit = satake(sp(1, 1));
      e.witness = Partition::parse("2,1,1");
      break;
    case 10:
      e.g_text = "sp(2,R)";
      e.h_text = "sp(1,C)";
      e.gc_text = "sp(1,1)";
      e.ambient = ComplexSimpleType::sp_half(2);
      e.h_real_rank = 1;
      e.s_g = satake(ClassicalAlgebra::sized(Family::SP_R, 2));
      e.s_crit = satake(sp(1, 1));
      e.witness = Partition::parse("2,1,1");
      break;
    case 11:
      e.g_text = "sp(3,2)";
      e.h_text = "sp(3,1) + sp(0,1)";
      e.gc_text = "sp(4,1)";
      e.ambient = ComplexSimpleType::sp_half(5);
      e.h_real_rank = 1;
      e.s_g = satake(sp(3, 2));
      e.s_crit = satake(sp(4, 1));
      e.witness = Partition::parse("5,5");
      break;
    case 12:
      e.g_text = "sp(2,2)";
      e.h_text = "sp(2,0) + sp(0,2)";
      e.gc_text = "sp(4,0)";
      e.ambient = ComplexSimpleType::sp_half(4);
      e.h_real_rank = 0;
      e.s_g = satake(sp(2, 2));
      e.s_crit = satake(sp(4, 0));
      e.witness = Partition::parse("3,3,1,1");
      break;
    case 13:
      e.g_text = "so(4,2)";
      e.h_text = "so(4,1) + so(0,1)";
      e.gc_text = "so(5,1)";
      e.ambient = ComplexSimpleType::so(6);
      e.h_real_rank = 1;
      e.s_g = satake(so(4, 2));
      e.s_crit = satake(so(5, 1));
      e.witness = Partition::parse("5,1");
      break;
    case 14:
      e.g_text = "so(3,3)";
      e.h_text = "so(3,1) + so(0,2)";
      e.gc_text = "so(5,1)";
      e.ambient = ComplexSimpleType::so(6);
      e.h_real_rank = 1;
      e.s_g = satake(so(3, 3));
      e.s_crit = satake(so(5, 1));
      e.witness = Partition::parse("5,1");
      break;
    case 15:
      e.g_text = "so(6,2)";
      e.h_text = "so(6,1)";
      e.gc_text = "so(7,1)";
      e.ambient = ComplexSimpleType::so(8);
      e.h_real_rank = 1;
      e.s_g = satake(so(6, 2));
      e.s_crit = satake(so(7, 1));
      e.witness = Partition::parse("3^2,1^2");
      break;
    case 16:
      e.g_text = "so(6,4)";
      e.h_text = "su(3,2) + so(2)";
      e.gc_text = "so*(10)";
      e.ambient = ComplexSimpleType::so(10);
      e.h_real_rank = 2;
      e.s_g = satake(so(6, 4));
      e.s_crit = satake(ClassicalAlgebra::sized(Family::SO_STAR, 5));
      e.witness = Partition::parse("9,1");
      break;
    case 17:
      // Fork alignment of the second diagram fixed by the restricted-root
      // computation for the unitary subalgebra.
      e.g_text = "so(4,4)";
      e.h_text = "su(2,2) + so(2)";
      e.gc_text = "so*(8)";
      e.ambient = ComplexSimpleType::so(8);
      e.h_real_rank = 2;
      e.s_g = satake(so(4, 4));
      e.s_crit =
          satake(ClassicalAlgebra::sized(Family::SO_STAR, 4)).fork_swapped();
      e.witness = Partition::parse("7,1");
      break;
    case 18:
      e.g_text = "so*(8)";
      e.h_text = "su(4,0) + so(2)";
      e.gc_text = "so(8,0)";
      e.ambient = ComplexSimpleType::so(8);
      e.h_real_rank = 0;
      e.s_g = satake(ClassicalAlgebra::sized(Family::SO_STAR, 4));
      e.s_crit = satake(so(8, 0));
      e.witness = Partition::parse("2^2,1^4");
      break;
    case 19:
      // Same alignment note as the unitary row above.
      e.g_text = "so(4,4)";
      e.h_text = "so(4,C)";
      e.gc_text = "so*(8)";
      e.ambient = ComplexSimpleType::so(8);
      e.h_real_rank = 2;
      e.s_g = satake(so(4, 4));
      e.s_crit =
          satake(ClassicalAlgebra::sized(Family::SO_STAR, 4)).fork_swapped();
      e.witness = Partition::parse("7,1");
      break;
    default:
      throw not_in_catalog("row must be 1..19");
  }
  finish_case_c(e);
  return e;
}

}  // namespace hradon
