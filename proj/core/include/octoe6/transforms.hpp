#pragma once
/**
 * @file transforms.hpp
 * @brief The one-parameter group transformations acting on the 27-dim space.
 *
 * Each transformation is a short sequence of steps; a step conjugates by a
 * 3x3 embedding [[M, 0], [0, 1]] of a 2x2 matrix M whose entries are sums of
 * terms  coeff * e_unit * f(freq * alpha).  A step tagged with type a != 1
 * first relabels coordinates by the inverse cyclic type rotation, conjugates,
 * and rotates back -- equivalent to conjugating the whole step by the cyclic
 * permutation matrix, but exact and cheap.
 *
 * One code path evaluates a transformation over any scalar ring: doubles for
 * finite-angle spot checks, degree-2 jets for exact tangent extraction.
 *
 * The canonical catalogue has 45 transformations per type (135 total):
 * 7 A_q, 7 G_q, 7 S_q composites, the rotations R_xz, 7 R_xq, 7 R_zq, and
 * the boosts B_tz, B_tx, 7 B_tq.  Transverse plane rotations R_(p,q) are the
 * building blocks of A/G/S and are available separately.
 */

#include "octoe6/jet.hpp"
#include "octoe6/jordan.hpp"
#include "octoe6/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace octoe6 {

// =========================================================================
// Names
// =========================================================================

enum class GenKind : unsigned char { Btz, Btx, Btq, Rxz, Rxq, Rzq, A, G, S, Transverse };

/// A catalogued transformation: kind, acting type (1..3), and the imaginary
/// unit(s) it involves (u1 = q for Btq/Rxq/Rzq/A/G/S; u1,u2 = the plane for
/// Transverse).
struct GeneratorName {
  GenKind kind{};
  int type = 1;
  int u1 = 0;
  int u2 = 0;

  [[nodiscard]] friend bool operator==(const GeneratorName&, const GeneratorName&) = default;
};

/// Diagnostic rendering, e.g. "B1_tz", "R2_xi", "A3_kl", "R1(j,k)".
[[nodiscard]] std::string to_string(const GeneratorName& name);

/// The fixed catalogue of 135 transformations: types 1,2,3; within a type
/// A_q, G_q, S_q (q = i..l), R_xz, R_xq, R_zq, B_tz, B_tx, B_tq.
[[nodiscard]] std::vector<GeneratorName> canonical_generators();

/// The three transverse planes (p, q') attached to the unit q, in catalogue
/// order; A_q / G_q / S_q compose rotations in exactly these planes.
[[nodiscard]] std::array<std::array<int, 2>, 3> transverse_planes(int q);

// =========================================================================
// Actions
// =========================================================================

/// One additive piece of a 2x2 matrix entry: coeff * e_unit * f(freq * alpha).
struct Term {
  Rational coeff;
  int unit = 0;
  Func func = Func::One;
  Rational freq;
};

/// One conjugation step. The step's parameter is param_scale * alpha.
struct Step {
  std::array<std::array<std::vector<Term>, 2>, 2> cell;
  Rational param_scale = Rational(1);
  int type = 1;
};

/// A transformation: steps applied in order (steps[0] acts first).
struct GroupAction {
  std::vector<Step> steps;
};

/// Thrown when the two parenthesizations of (M X) M-dagger disagree.
struct AssociationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Build the catalogued transformation (throws std::invalid_argument on a
/// malformed name: units outside 1..7 where required, equal transverse units,
/// type outside 1..3).
[[nodiscard]] GroupAction build_generator(const GeneratorName& name);

/// The transverse plane rotation R_(p,q) of the given type.
[[nodiscard]] GroupAction transverse_rotation(int p, int q, int type = 1);

/// alpha -> action(s * alpha).
[[nodiscard]] GroupAction scaled(const GroupAction& action, const Rational& s);

/// Apply `first`, then `then`.
[[nodiscard]] GroupAction sequence(const GroupAction& first, const GroupAction& then);

/// Conjugate a type-1 action to type a (cyclic; a in 1..3).
[[nodiscard]] GroupAction retype(const GroupAction& action, int a);

// =========================================================================
// Evaluation
// =========================================================================

/// Finite-angle evaluation. With check_assoc, every step is evaluated under
/// both parenthesizations and must agree within assoc_tol (AssociationError
/// otherwise); Hermiticity of the step result is checked to the same
/// tolerance.
[[nodiscard]] JordanElement<double> apply(const GroupAction& action, double alpha,
                                          const JordanElement<double>& X,
                                          bool check_assoc = false,
                                          double assoc_tol = 1e-12);

/// Exact evaluation on degree-2 jets in alpha around 0; `scale` multiplies
/// the parameter of the whole action. With check_assoc, parenthesization
/// agreement is asserted exactly.
[[nodiscard]] JordanElement<Jet2> apply_jet(const GroupAction& action,
                                            const JordanElement<Jet2>& X,
                                            const Rational& scale = Rational(1),
                                            bool check_assoc = false);

}  // namespace octoe6
