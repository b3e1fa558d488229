#pragma once

#include <map>
#include <optional>
#include <set>

#include "hradon/algebra.hpp"
#include "hradon/sl2_orbits.hpp"

namespace hradon {

struct type_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct unknown_form : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct not_in_catalog : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dynkin diagram with black nodes and an involutive arrow pairing on white
/// nodes. Nodes are 1-based; for type D the fork pair is (rank-1, rank).
struct SatakeDiagram {
  char dynkin_type;
  std::size_t rank;
  std::set<std::size_t> black;
  std::map<std::size_t, std::size_t> arrows;  // stored both directions

  void add_arrow(std::size_t a, std::size_t b);
  bool is_split() const { return black.empty() && arrows.empty(); }

  /// Swaps the decorations of the two fork nodes (type D).
  SatakeDiagram fork_swapped() const;
  /// Reverses the node order (type A).
  SatakeDiagram reversed() const;

  std::string ascii() const;

  friend bool operator==(const SatakeDiagram& a, const SatakeDiagram& b) {
    return a.dynkin_type == b.dynkin_type && a.rank == b.rank &&
           a.black == b.black && a.arrows == b.arrows;
  }
  friend bool operator!=(const SatakeDiagram& a, const SatakeDiagram& b) {
    return !(a == b);
  }
};

/// Araki diagram of a classical real form. Complex and gl families are not
/// real-form catalog members and are rejected.
SatakeDiagram satake(const ClassicalAlgebra& form);

/// True iff every black node carries weight zero and arrow-paired nodes
/// carry equal weights.
bool matches(const WeightedDiagram& f, const SatakeDiagram& s);

/// Dimension of the space of weight vectors matching both diagrams.
int matching_space_dim(const SatakeDiagram& a, const SatakeDiagram& b);

/// Canonical form of the constraint system "black nodes zero, arrowed nodes
/// equal" imposed jointly by a list of diagrams; two systems are equal iff
/// they cut out the same subspace.
std::vector<int> constraint_canonical_form(const std::vector<SatakeDiagram>& ds);

/// One instantiated symmetric-space catalog row.
struct SymmetricSpaceEntry {
  std::string row_id;
  char case_tag;  // 'A', 'B' or 'C'
  std::string g_text, h_text, gc_text;
  ComplexSimpleType ambient;
  std::size_t h_real_rank = 0;
  // Case A: the induced diagram automorphism (1-based images).
  std::vector<std::size_t> graph_auto;
  // Case C: realizability diagram; case B/C properness diagram.
  std::optional<SatakeDiagram> s_g;
  std::optional<SatakeDiagram> s_crit;
  // Table-6 rows carry the listed non-very-even witness partition.
  std::optional<Partition> witness;
  // Alignment diagnostics for the simultaneous pair (case C).
  bool alt_alignment_passes_rank = false;
  bool alt_alignment_differs = false;

  bool graph_auto_is_identity() const;
};

/// Ten-row family catalog; rows 2 and 5 are complex/real-form rows, row 10 a
/// complex/complex row, the rest absolutely simple. p parameterizes rows 6-9
/// (0 <= p < N/2).
SymmetricSpaceEntry table1_entry(int row, std::size_t n, std::size_t p = 0);

/// Nineteen-row catalog of spaces with a distinguished non-very-even proper
/// witness, each at its minimal admissible parameters.
SymmetricSpaceEntry table6_entry(int row);
int table6_row_count();

/// Real rank of a product of classical factors, by descriptor.
std::size_t real_rank(const ClassicalAlgebra& g);

}  // namespace hradon
