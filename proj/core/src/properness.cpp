#include "hradon/properness.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hradon {

namespace {

WeightedDiagram permute_weights(const WeightedDiagram& f,
                                const std::vector<std::size_t>& perm) {
  WeightedDiagram out = f;
  for (std::size_t i = 0; i < perm.size(); ++i)
    out.weights[i] = f.weights[perm[i] - 1];
  return out;
}

}  // namespace

std::vector<PropernessVerdict> decide_proper(const SymmetricSpaceEntry& e,
                                             const Partition& p) {
  std::vector<PropernessVerdict> out;
  bool ve = is_very_even(p);
  for (const auto& f : weighted_diagram(e.ambient, p)) {
    PropernessVerdict v;
    v.orbit = f.orbit_label;
    v.very_even = ve;
    switch (e.case_tag) {
      case 'A': {
        v.realizable = true;
        WeightedDiagram moved = permute_weights(f, e.graph_auto);
        v.proper = !(moved == f);
        v.reason = v.proper ? "diagram not stable under the induced automorphism"
                            : "diagram stable under the induced automorphism";
        break;
      }
      case 'B': {
        v.realizable = true;
        bool m = matches(f, *e.s_crit);
        v.proper = !m;
        v.reason = m ? "matches the diagram of the real form"
                     : "breaks the diagram of the real form";
        break;
      }
      case 'C': {
        v.realizable = matches(f, *e.s_g);
        if (!v.realizable) {
          v.reason = "does not match the first diagram (not realizable)";
          break;
        }
        bool m = matches(f, *e.s_crit);
        v.proper = !m;
        v.reason = m ? "matches the dual diagram" : "breaks the dual diagram";
        break;
      }
      default:
        throw std::logic_error("bad case tag");
    }
    out.push_back(v);
  }
  return out;
}

ComplexSimpleType DirectSpace::ambient() const {
  if (kind == Kind::SlQuotient)
    return ComplexSimpleType::sl(field == 'h' ? 4 * n : 2 * n);
  return ComplexSimpleType::sp_half(n);
}

std::string DirectSpace::to_string() const {
  std::ostringstream os;
  auto fld = [this]() {
    return field == 'r' ? "R" : (field == 'c' ? "C" : "H");
  };
  if (kind == Kind::SlQuotient) {
    os << "SL(" << 2 * n << "," << fld() << ")/(SL(" << p << "," << fld()
       << ")xSL(" << q << "," << fld() << "))";
  } else {
    os << "Sp(" << n << "," << fld() << ")/(";
    for (std::size_t i = 0; i < blocks.size(); ++i)
      os << (i ? "x" : "") << "Sp(" << blocks[i] << "," << fld() << ")";
    os << ")";
  }
  return os.str();
}

DirectSpace DirectSpace::sl_quotient(char field, std::size_t p, std::size_t q) {
  if (field != 'r' && field != 'c' && field != 'h')
    throw std::invalid_argument("field must be r, c or h");
  if (p % 2 == 0 || q % 2 == 0)
    throw std::invalid_argument("both block sizes must be odd");
  DirectSpace s;
  s.kind = Kind::SlQuotient;
  s.field = field;
  s.p = p;
  s.q = q;
  s.n = (p + q) / 2;
  return s;
}

DirectSpace DirectSpace::sp_quotient(char field, std::size_t n,
                                     std::vector<std::size_t> blocks) {
  if (field != 'r' && field != 'c')
    throw std::invalid_argument("field must be r or c");
  std::size_t sum = 0;
  for (std::size_t b : blocks) sum += b;
  if (sum + 1 != n)
    throw std::invalid_argument("block sizes must sum to n - 1");
  DirectSpace s;
  s.kind = Kind::SpQuotient;
  s.field = field;
  s.n = n;
  s.blocks = std::move(blocks);
  return s;
}

namespace {

// Eigenvalues of the split diagonal element: full multiset for the split and
// complex cases, the halved multiset for the quaternionic one.
std::vector<int> diagonal_values(const DirectSpace& s, const Partition& p) {
  if (s.kind == DirectSpace::Kind::SlQuotient && s.field == 'h') {
    // Realizable partitions are pairwise doubled; halve the multiplicities.
    std::vector<int> halved;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
      if (parts[i] != parts[i + 1])
        throw invalid_partition("not a doubled partition");
      halved.push_back(parts[i]);
    }
    return eigenvalues(Partition(halved));
  }
  return eigenvalues(p);
}

bool zero_sum_subset_of_size(const std::vector<int>& vals, std::size_t k) {
  // Exact subset-sum: dp[c] = set of achievable sums with c chosen elements.
  int offset = 0;
  for (int v : vals) offset += std::abs(v);
  std::size_t width = 2 * offset + 1;
  std::vector<std::vector<char>> dp(k + 1, std::vector<char>(width, 0));
  dp[0][offset] = 1;
  for (int v : vals) {
    for (std::size_t c = std::min(k, vals.size()); c-- > 0;) {
      for (std::size_t s = 0; s < width; ++s) {
        if (!dp[c][s]) continue;
        long ns = static_cast<long>(s) + v;
        if (ns >= 0 && ns < static_cast<long>(width)) dp[c + 1][ns] = 1;
      }
    }
  }
  return dp[k][offset] != 0;
}

}  // namespace

bool direct_realizable(const DirectSpace& s, const Partition& p) {
  if (!partition_valid_for(s.ambient(), p)) return false;
  if (s.kind == DirectSpace::Kind::SlQuotient && s.field == 'h') {
    const auto& parts = p.parts();
    if (parts.size() % 2 != 0) return false;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
      if (parts[i] != parts[i + 1]) return false;
  }
  return true;
}

bool direct_proper_by_eigenvalues(const DirectSpace& s, const Partition& p) {
  std::vector<int> vals = diagonal_values(s, p);
  if (s.kind == DirectSpace::Kind::SpQuotient) {
    return std::find(vals.begin(), vals.end(), 0) == vals.end();
  }
  return !zero_sum_subset_of_size(vals, s.p);
}

std::vector<PropernessVerdict> decide_proper_direct(const DirectSpace& s,
                                                    const Partition& p) {
  if (!partition_valid_for(s.ambient(), p))
    throw invalid_partition(p.to_string() + " invalid for " +
                            s.ambient().to_string());
  PropernessVerdict v;
  v.very_even = is_very_even(p);
  v.realizable = direct_realizable(s, p);
  if (v.realizable) {
    v.proper = direct_proper_by_eigenvalues(s, p);
    v.reason = v.proper ? "no critical eigenvalue configuration"
                        : "critical eigenvalue configuration exists";
  } else {
    v.reason = "partition does not descend to the real group";
  }
  return {v};
}

std::string VeReport::summary() const {
  std::ostringstream os;
  os << space << ": " << (pass ? "PASS" : "FAIL") << " ("
     << items.size() << " orbit checks, " << counterexamples
     << " counterexamples" << (vacuous ? ", vacuous" : "") << ")";
  return os.str();
}

namespace {

VeReport assemble_report(
    const std::string& name, const ComplexSimpleType& ambient,
    const std::function<std::vector<PropernessVerdict>(const Partition&)>&
        decide) {
  VeReport rep;
  rep.space = name;
  bool any_proper = false;
  for (const auto& [p, orbits] : valid_partitions(ambient)) {
    auto verdicts = decide(p);
    for (const auto& v : verdicts) {
      VeItem item{p,          v.orbit,     v.realizable,
                  v.proper,   v.very_even, true};
      if (v.realizable) {
        item.consistent = (v.proper == v.very_even);
        if (!item.consistent) ++rep.counterexamples;
        if (v.proper) any_proper = true;
      }
      rep.items.push_back(item);
    }
  }
  rep.vacuous = !any_proper;
  rep.pass = rep.counterexamples == 0;
  return rep;
}

}  // namespace

VeReport verify_ve(const SymmetricSpaceEntry& e) {
  return assemble_report(
      e.row_id + " " + e.g_text + " / " + e.h_text, e.ambient,
      [&e](const Partition& p) { return decide_proper(e, p); });
}

VeReport verify_ve(const DirectSpace& s) {
  return assemble_report(
      s.to_string(), s.ambient(),
      [&s](const Partition& p) { return decide_proper_direct(s, p); });
}

WitnessReport table6_witness(int row) {
  SymmetricSpaceEntry e = table6_entry(row);
  WitnessReport rep;
  rep.row_id = e.row_id;
  rep.partition = *e.witness;
  rep.valid = partition_valid_for(e.ambient, rep.partition);
  if (rep.valid) {
    auto verdicts = decide_proper(e, rep.partition);
    for (const auto& v : verdicts) {
      if (!v.realizable) continue;
      rep.realizable = true;
      rep.proper = rep.proper || v.proper;
    }
    rep.not_very_even = !is_very_even(rep.partition);
  }
  rep.pass = rep.valid && rep.realizable && rep.proper && rep.not_very_even;
  return rep;
}

std::set<int> classify_spin(const ClassicalAlgebra& g) {
  int top = rho_variant(g, 1);
  std::set<int> out;
  for (int n = 2; n <= top; ++n) out.insert(n);
  return out;
}

}  // namespace hradon
