#pragma once

#include <set>

#include "hradon/hurwitz_radon.hpp"
#include "hradon/satake.hpp"

namespace hradon {

/// Outcome of the combinatorial properness decision for one orbit.
struct PropernessVerdict {
  OrbitLabel orbit = OrbitLabel::None;
  bool realizable = false;
  bool proper = false;
  bool very_even = false;
  std::string reason;
};

/// Decides properness of the lifted rank-one action attached to a partition
/// on a catalog row, one verdict per orbit. Realizability means the complex
/// homomorphism restricts to the real form (always true for the complex
/// rows).
std::vector<PropernessVerdict> decide_proper(const SymmetricSpaceEntry& e,
                                             const Partition& p);

/// Homogeneous (generally non-symmetric) quotients decided directly through
/// the restricted-root criterion on eigenvalues.
struct DirectSpace {
  enum class Kind { SlQuotient, SpQuotient } kind;
  char field;  // 'r', 'c', 'h' for the sl family; 'r', 'c' for sp
  std::size_t n;                    // sl: G has size 2n; sp: G = Sp(n, F)
  std::size_t p = 0, q = 0;         // sl: odd split p + q = 2n
  std::vector<std::size_t> blocks;  // sp: block sizes with sum n - 1

  ComplexSimpleType ambient() const;
  std::string to_string() const;

  static DirectSpace sl_quotient(char field, std::size_t p, std::size_t q);
  static DirectSpace sp_quotient(char field, std::size_t n,
                                 std::vector<std::size_t> blocks);
};

/// True when the partition arises from a homomorphism into the real group of
/// the direct family (everything for the split and complex cases,
/// pairwise-doubled partitions for the quaternionic one).
bool direct_realizable(const DirectSpace& s, const Partition& p);

/// Eigenvalue route: no zero-sum sub-multiset of size p (sl case), no zero
/// eigenvalue (sp case).
bool direct_proper_by_eigenvalues(const DirectSpace& s, const Partition& p);

std::vector<PropernessVerdict> decide_proper_direct(const DirectSpace& s,
                                                    const Partition& p);

struct VeItem {
  Partition partition;
  OrbitLabel orbit;
  bool realizable;
  bool proper;
  bool very_even;
  bool consistent;  // proper == very even, among realizable orbits
};

struct VeReport {
  std::string space;
  std::vector<VeItem> items;
  int counterexamples = 0;
  bool vacuous = false;  // no proper realizable partition at all
  bool pass = false;
  std::string summary() const;
};

/// Exhaustive check over all valid realizable partitions: proper iff very
/// even.
VeReport verify_ve(const SymmetricSpaceEntry& e);
VeReport verify_ve(const DirectSpace& s);

struct WitnessReport {
  std::string row_id;
  Partition partition;
  bool valid = false;
  bool realizable = false;
  bool proper = false;
  bool not_very_even = false;
  bool pass = false;
};

/// Checks the distinguished witness of a non-very-even proper action on one
/// of the nineteen catalog rows at minimal parameters.
WitnessReport table6_witness(int row);

/// The indices n for which the rank-one double cover of signature (n,1) acts
/// properly: {n : 2 <= n <= rho_variant(g, 1)}.
std::set<int> classify_spin(const ClassicalAlgebra& g);

}  // namespace hradon
