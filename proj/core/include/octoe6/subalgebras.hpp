#pragma once
/**
 * @file subalgebras.hpp
 * @brief Subalgebra closure engine and the registry of named subalgebras.
 *
 * A Subspace is an exact subspace of the 78-dimensional algebra; close()
 * saturates one under the Lie bracket. The registry lists every named
 * subalgebra handled here -- the orthogonal chains per transformation type,
 * the derivation algebra of the octonions and its relatives, the unitary and
 * special-linear families over R, C, H, the null stabilizer family, and the
 * distinguished one- and two-dimensional complements -- each with generator
 * recipes, expected dimension, and expected restricted Killing signature.
 * The verify_* entry points turn every structural claim (dimensions,
 * signatures, inclusions, chain markers, commuting complements, derivation
 * property, stabilizer behaviour) into machine-checked results.
 */

#include "octoe6/linalg.hpp"
#include "octoe6/structure.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace octoe6 {

/// An exact subspace of Q^78, maintained as a reduced echelon row space
/// together with the raw generator vectors that were inserted.
class Subspace {
 public:
  Subspace() : space_(Algebra::kDim) {}

  [[nodiscard]] int dim() const { return space_.rank(); }

  /// Inserts v; returns true if the dimension grew.
  bool insert(const RatVector& v);

  [[nodiscard]] bool contains(const RatVector& v) const { return space_.contains(v); }
  [[nodiscard]] bool contains(const Subspace& other) const;

  /// Reduced echelon basis rows (dim x 78).
  [[nodiscard]] RatMatrix basis() const { return space_.echelon_rows(); }

  /// Every vector handed to insert(), in order, including dependent ones.
  [[nodiscard]] const RatMatrix& generators() const { return generators_; }

 private:
  RowSpace space_;
  RatMatrix generators_;
};

/// Smallest bracket-closed subspace containing s: iterates
/// span <- span + [span, span] to a fixpoint with exact rank tests.
[[nodiscard]] Subspace close(const Algebra& alg, Subspace s);

/// The Killing form restricted to the subspace basis (dim x dim, symmetric).
[[nodiscard]] RatMatrix restricted_killing(const Algebra& alg, const Subspace& s);

/// Exact signature of the restricted Killing form. Negative entries count
/// compact directions, positive entries non-compact ones.
[[nodiscard]] Inertia killing_inertia(const Algebra& alg, const Subspace& s);

/// Parses a linear combination of named elements into 78-coordinates, e.g.
/// "A_k", "G_l-S1_l", "G_l+2*S2_l", "3/2*R1_xi", "R2(i,jl)". Known names are
/// the 78 basis-element names, every catalogued one-parameter generator name
/// (type digit included, e.g. "S2_k", "B3_tz"), and transverse rotations
/// "R<type>(<unit>,<unit>)". At each term the longest known name matches
/// first, so "B2_tz-B3_tz" is a single name, not a difference (the two
/// readings agree numerically). Throws std::invalid_argument on unknown
/// names or malformed syntax.
[[nodiscard]] RatVector parse_element(const Algebra& alg, const std::string& expr);

/// One named subalgebra: generator recipe plus the claims checked for it.
struct SubalgebraRecord {
  std::string name;                  // registry key, e.g. "su2H"
  std::string label;                 // classification label, e.g. "a1", "f4"
  std::vector<std::string> recipe;   // generator expressions for parse_element
  int expected_dim = 0;
  /// Expected signature of the restricted Killing form, when asserted.
  std::optional<Inertia> expected_inertia;
  /// True if the restricted Killing form must vanish identically.
  bool killing_zero = false;
  /// Names of registry records that must contain this one.
  std::vector<std::string> contained_in;
};

/// All named subalgebras, in a fixed documented order.
[[nodiscard]] const std::vector<SubalgebraRecord>& registry();

/// The closed subspace generated by a registry record's recipe (computed on
/// first use, then cached). Throws std::invalid_argument on unknown names.
[[nodiscard]] const Subspace& subalgebra(const Algebra& alg, const std::string& name);

/// Outcome of one named check.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // short witness or summary
};

/// Outcome of a commuting-complement check.
struct DirectSumReport {
  bool pass = false;
  int combined_dim = 0;
  std::string detail;
};

/// Verifies [g,h] = 0, g intersect h = 0 (ranks add), and that the combined
/// span is bracket-closed.
[[nodiscard]] DirectSumReport check_direct_sum(const Algebra& alg, const Subspace& g,
                                               const Subspace& h);

/// True iff h is contained in g and [g,h] lies in h.
[[nodiscard]] bool check_ideal(const Algebra& alg, const Subspace& h, const Subspace& g);

/// The change of basis between the 21 transverse-plane rotations and the
/// A/G/S combinations, with its exact inverse.
struct PlaneChange {
  /// Column order: unit pairs (p,q), p < q, lexicographic over the seven
  /// imaginary units.
  std::vector<std::pair<int, int>> planes;
  /// Row r of ags_from_planes expands AGS element r (A_q rows 0-6, G_q rows
  /// 7-13, S1_q rows 14-20) over the plane rotations.
  RatMatrix ags_from_planes;
  RatMatrix planes_from_ags;  // exact inverse
};
[[nodiscard]] PlaneChange plane_to_ags(const Algebra& alg);

/// Registry records: closure dimension, Killing signature or nullity, and
/// declared containments.
[[nodiscard]] std::vector<CheckResult> verify_records(const Algebra& alg);

/// Chain diagrams: each element annotated on a chain arrow lies in the
/// larger algebra of the arrow and outside the smaller one; re-labelled
/// elements additionally lie in the smaller algebra.
[[nodiscard]] std::vector<CheckResult> verify_chain_annotations(const Algebra& alg);

/// All commuting-complement pairs of the subalgebra diagrams, plus the
/// two three-plus-three splittings of the six-dimensional orthogonal
/// algebras.
[[nodiscard]] std::vector<CheckResult> verify_direct_sums(const Algebra& alg);

/// Derivation-algebra facts: the fourteen-dimensional algebra acts by one
/// common octonion derivation per element (Leibniz rule on all unit pairs),
/// its eight-dimensional subalgebra annihilates the seventh imaginary unit,
/// the type-2 and type-3 28-element generator sets span the same space as
/// type 1, and the plane-to-AGS change of basis is exactly invertible with
/// its pinned rows.
[[nodiscard]] std::vector<CheckResult> verify_derivations(const Algebra& alg);

/// Null stabilizer family: the six b spaces are abelian with identically
/// zero restricted Killing form; each stabilizer annihilates its type's
/// vector block; the second stabilizer is the cyclic-shift conjugate of the
/// first; the documented combined closures have the expected dimensions; the
/// first stabilizer is an ideal of its 61-dimensional hull with degenerate
/// restricted Killing form; and the full algebra splits as 45+16+16+1.
[[nodiscard]] std::vector<CheckResult> verify_stabilizers(const Algebra& alg);

/// Concatenation of all verify_* groups above.
[[nodiscard]] std::vector<CheckResult> verify_subalgebras(const Algebra& alg);

}  // namespace octoe6
