#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hradon/rational.hpp"

namespace hradon {

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int sum() const;
  bool all_parts_even() const;
  bool all_parts_same_parity() const;

  /// Multiplicity form [d1^r1, ..., dk^rk] with d1 > ... > dk.
  std::vector<std::pair<int, int>> multiplicities() const;

  std::string to_string() const;
  /// Accepts "7,1" and "3^2,1^2".
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Complex classical type carrying the ambient standard-representation size.
struct ComplexSimpleType {
  enum class Kind { SL, SO, SP } kind;
  std::size_t ambient;  // sl(N,C), so(N,C): N;  sp(M,C): 2M

  std::size_t rank() const;
  char dynkin_letter() const;  // 'A', 'B', 'C' or 'D'
  std::string to_string() const;

  static ComplexSimpleType sl(std::size_t n) { return {Kind::SL, n}; }
  static ComplexSimpleType so(std::size_t n) { return {Kind::SO, n}; }
  static ComplexSimpleType sp_half(std::size_t m) { return {Kind::SP, 2 * m}; }
};

struct non_simple_type : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct invalid_partition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct odd_ambient : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class OrbitLabel { None, VeryEvenI, VeryEvenII };

/// Weight vector on the Dynkin diagram; for type D the fork pair sits in the
/// last two slots.
struct WeightedDiagram {
  char dynkin_type;  // 'A', 'B', 'C', 'D'
  std::vector<int> weights;
  OrbitLabel orbit_label = OrbitLabel::None;

  std::size_t rank() const { return weights.size(); }
  std::string to_string() const;
  std::string ascii() const;

  friend bool operator==(const WeightedDiagram& a, const WeightedDiagram& b) {
    return a.dynkin_type == b.dynkin_type && a.weights == b.weights &&
           a.orbit_label == b.orbit_label;
  }
};

/// Whether the partition satisfies the parity rule of the type
/// (so: even parts have even multiplicity; sp: odd parts have even
/// multiplicity; sl: unrestricted).
bool partition_valid_for(const ComplexSimpleType& g, const Partition& p);

/// All valid partitions of the ambient size, with their orbit count
/// (2 exactly for very even partitions in type D).
std::vector<std::pair<Partition, int>> valid_partitions(
    const ComplexSimpleType& g);

/// Eigenvalue multiset of the diagonal sl(2)-generator: each part d
/// contributes d-1, d-3, ..., -(d-1). Weakly decreasing.
std::vector<int> eigenvalues(const Partition& p);

/// Weighted Dynkin diagram(s) of the partition; two diagrams exactly in the
/// very even type-D case.
std::vector<WeightedDiagram> weighted_diagram(const ComplexSimpleType& g,
                                              const Partition& p);

bool is_very_even(const Partition& p);

/// Diagram-side criterion: middle weight nonzero (sl(2N)), last weight
/// nonzero (sp), or unequal fork weights (so(2N)).
bool very_even_from_diagram(const ComplexSimpleType& g,
                            const WeightedDiagram& d);

/// D4 only: false whenever a1 = a3 = a4; otherwise requires the fork
/// criterion on all three triality images.
bool very_even_under_triality(const WeightedDiagram& d);

/// All adjoint eigenvalues even, i.e. all parts share one parity.
bool is_even_hom(const ComplexSimpleType& g, const Partition& p);

/// Tensor-product decomposition of the k- and l-dimensional irreducibles:
/// dimensions k+l-1, k+l-3, ..., |k-l|+1.
std::vector<int> clebsch_gordan(int k, int l);

/// Dimension multisets with multiplicities.
using DimensionMultiset = std::map<int, long>;

/// Restriction of an external tensor product to the diagonal subalgebra,
/// applied bilinearly to the two dimension multisets.
DimensionMultiset diagonal_restriction(const DimensionMultiset& mv,
                                       const DimensionMultiset& mw);

/// All partitions of n (weakly decreasing), lexicographically descending.
std::vector<Partition> all_partitions(int n);

}  // namespace hradon
