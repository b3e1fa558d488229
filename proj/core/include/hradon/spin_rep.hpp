#pragma once

#include <map>

#include "hradon/linsolve.hpp"
#include "hradon/matrix.hpp"
#include "hradon/rational.hpp"

namespace hradon {

struct not_self_dagger : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct non_half_integral : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct odd_total_dimension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct non_dominant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct singular_only : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The three contravariant twists (conjugate, dual, conjugate-dual) plus the
/// identity.
enum class Dagger { Conj, Dual, ConjDual, Id };

/// +1 for the conjugate, -1 for the dual.
int dagger_delta(Dagger d);

/// Residue description of the odd levels where every half-integral class is
/// fixed by the twist: delta * n = 1ers or -3 mod 8 for conj/dual, empty for
/// the conjugate-dual.
bool in_n_dagger(int n, Dagger d);

enum class SelfDagger { All, None };
/// Whether the twist fixes every class (even level, or odd level in the
/// residue set) or none.
SelfDagger self_dagger(int n, Dagger d);

/// Dominant weight of type B_l or D_l in standard coordinates.
struct DominantWeight {
  char type;  // 'B' or 'D'
  std::vector<Rational> coords;

  std::size_t rank() const { return coords.size(); }
  bool is_half_integral() const;
  void validate() const;  // throws non_dominant
  std::string to_string() const;
};

/// Exact Weyl dimension.
long weyl_dimension(const DominantWeight& lam);

/// Dimension divisibility by 2^{ceil((p+q)/2) - 1} for half-integral weights.
bool divisibility_check(int p, int q, const DominantWeight& lam);

enum class FormType {
  Symmetric,
  Alternating,
  RealStructure,
  QuaternionicStructure,
  None
};

/// Solves t(X) B + B X = 0 over the generator set and classifies the
/// bilinear solution; None when the space is zero. Throws when only
/// singular solutions exist.
FormType invariant_bilinear_type(const std::vector<ExactMatrix>& gens);

/// Solves J conj(X) = X J and classifies J Jbar = c I as a real (c > 0) or
/// quaternionic (c < 0) structure; None when only zero solves.
FormType invariant_conj_type(const std::vector<ExactMatrix>& gens);

/// Anticommuting involution generators realizing the half-integral
/// representation of level n on C^{2^(n/2 rounded down)}; for odd n the sign
/// branch (+1/-1) picks one of the two summand models.
std::vector<ExactMatrix> spin_model_generators(int n, int branch = +1);

/// +1 / -1 type invariant of the (semi)spin class: the conjugate variant is
/// read off the real algebra type of the level-n positive Clifford algebra,
/// the dual variant from the invariant bilinear form of the explicit model.
int index_spin(int n, Dagger d);

/// Constant across all half-integral classes; equals index_spin.
int index_general(int n, const DominantWeight& lam, Dagger d);

/// Highest weight of the (semi)spin class at level n (branch picks the
/// summand for odd n).
DominantWeight spin_weight(int n, int branch = +1);

/// Multiplicity vector of a completely reducible half-integral
/// representation, keyed by weight coordinates.
struct RepMultiplicity {
  int n = 2;
  std::map<std::vector<Rational>, long> mults;

  long total_dimension() const;
  bool all_half_integral() const;
};

/// Action of the twist on labels: flips the last coordinate exactly when the
/// level is odd and outside the fixed residue set.
std::vector<Rational> dagger_label(int n, Dagger d,
                                   const std::vector<Rational>& lam);

/// Multiplicity criterion for factoring through the twisted-fixed subgroup
/// at sign eps.
bool embed_g_dagger_eps(const RepMultiplicity& tau, Dagger d, int eps);

/// Factoring through an indefinite unitary group: invariance under the
/// conjugate-dual twist.
bool embed_u(const RepMultiplicity& tau);

enum class RealTarget { Opq, SpR, Sprs, OStar };

struct EmbedResult {
  bool ok = false;
  std::size_t sig_p = 0, sig_q = 0;  // forced neutral signature when relevant
};

/// Two-factor criterion with the fixed sign map per target; the signature is
/// forced to be neutral.
EmbedResult embed_real_form(const RepMultiplicity& tau, RealTarget target);

/// Replaces a half-integral representation by the same-dimensional sum of
/// (semi)spin classes: S-copies at even level, first-summand copies on the
/// fixed residue set, balanced copies otherwise.
RepMultiplicity spinify(const RepMultiplicity& tau, Dagger d);

}  // namespace hradon
