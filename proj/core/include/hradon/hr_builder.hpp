#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hradon/algebra.hpp"
#include "hradon/hurwitz_radon.hpp"

namespace hradon {

/// A family of p-part matrices intended to anticommute pairwise and square
/// to the identity (with the parent algebra fixing the membership predicate).
struct HRFamily {
  ClassicalAlgebra alg;
  std::vector<ExactMatrix> matrices;
  std::string note;
};

struct PairCheck {
  std::size_t j, k;
  bool ok;
};

struct FamilyReport {
  bool pass = true;
  std::vector<bool> membership;   // p-part membership per matrix
  std::vector<PairCheck> pairs;   // M_j M_k + M_k M_j == 2 delta_{jk} I
  std::string to_string() const;
};

/// Exact self-certification of a family.
FamilyReport verify_family(const HRFamily& family);

struct not_a_base : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct row_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct verification_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct unsupported_family : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One parahermitian extension step: a fixed block embedding of the source
/// realization into the target realization together with an involutive
/// p-part element anticommuting with the embedded source p-part.
struct LadderRow {
  int id;  // 1..10
  std::string name;
  std::function<ClassicalAlgebra(std::size_t)> source;
  std::function<ClassicalAlgebra(std::size_t)> target;
  std::function<ExactMatrix(std::size_t, const ExactMatrix&)> embed;
  std::function<ExactMatrix(std::size_t)> z_image;
};

/// The ten extension rows, in catalog order.
const std::vector<LadderRow>& ladder_rows();
const LadderRow& ladder_row(int id);

/// Size-one seed families: the symmetric off-diagonal square root for
/// so(m,m) with m odd, and the identity for gl of odd size.
HRFamily base_witness(const ClassicalAlgebra& alg);

/// Applies one row: embeds every matrix, appends the involution, verifies.
HRFamily ladder_step(const HRFamily& family, const LadderRow& row,
                     std::size_t source_param);

/// Full construction: a verified family of exactly rho_variant(alg, 1)
/// matrices for every chain algebra and for sl of even size. Families with
/// value zero come back empty with an explanatory note.
HRFamily build_witness(const ClassicalAlgebra& alg);

/// The invertible traceless hermitian element diag(n-1, -1, ..., -1)
/// exhibiting the invertibility variant for sl of odd size n >= 3.
ExactMatrix sl_odd_invertible_witness(const ClassicalAlgebra& alg);

}  // namespace hradon
