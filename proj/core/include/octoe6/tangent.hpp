#pragma once
/**
 * @file tangent.hpp
 * @brief Exact tangent maps of the one-parameter transformations.
 *
 * The tangent of a transformation curve R(alpha) is the linear map
 * X -> d/dalpha R(alpha)(X) at 0, extracted column by column by evaluating
 * the curve on degree-2 jets -- all entries exact rationals. The Lie bracket
 * of two tangent maps is their matrix commutator; the group-level commutator
 * curve provides an independent second-derivative oracle for it.
 */

#include "octoe6/jordan.hpp"
#include "octoe6/rational.hpp"
#include "octoe6/transforms.hpp"

#include <array>
#include <vector>

namespace octoe6 {

/// Exact linear endomorphism of the 27-dimensional coordinate space,
/// stored row-major; column k is the image of the k-th basis element.
struct TangentMap {
  std::array<Rational, kJordanDim * kJordanDim> a{};

  [[nodiscard]] Rational& at(int r, int c) { return a[r * kJordanDim + c]; }
  [[nodiscard]] const Rational& at(int r, int c) const { return a[r * kJordanDim + c]; }
};

[[nodiscard]] bool operator==(const TangentMap& x, const TangentMap& y);
[[nodiscard]] bool is_zero(const TangentMap& x);
[[nodiscard]] TangentMap operator+(const TangentMap& x, const TangentMap& y);
[[nodiscard]] TangentMap operator-(const TangentMap& x, const TangentMap& y);
[[nodiscard]] TangentMap operator-(const TangentMap& x);
[[nodiscard]] TangentMap operator*(const Rational& c, const TangentMap& x);

[[nodiscard]] Coord27<Rational> apply(const TangentMap& L, const Coord27<Rational>& v);
[[nodiscard]] JordanElement<Rational> apply(const TangentMap& L, const JordanElement<Rational>& X);

/// L1 L2 - L2 L1, exact: the algebra's official bracket.
[[nodiscard]] TangentMap matrix_commutator(const TangentMap& L1, const TangentMap& L2);

/// Tangent of a transformation at alpha = 0, one jet evaluation per basis
/// column. check_assoc keeps the paranoid dual-parenthesization check on.
[[nodiscard]] TangentMap tangent_of(const GroupAction& action, bool check_assoc = true);
[[nodiscard]] TangentMap tangent_of(const GeneratorName& name);

/// Tangent of the group commutator curve
///   alpha -> R1(a/2) after R2(a/2) after R1(-a/2) after R2(-a/2)  (rightmost first),
/// returned as half its exact second derivative at 0. Throws std::logic_error
/// if the curve's value at 0 is not the identity or its first derivative does
/// not vanish identically -- both are structural certainties for one-parameter
/// curves, so a violation signals a broken composite.
[[nodiscard]] TangentMap curve_commutator(const GroupAction& r1, const GroupAction& r2);

/// Exact directional derivative of the cubic form along L at X:
/// d/deps det(X + eps L X) at 0. Vanishes identically for every tangent map
/// of a determinant-preserving curve.
[[nodiscard]] Rational det_directional_derivative(const TangentMap& L,
                                                  const JordanElement<Rational>& X);

/// Sum of the three diagonal-coordinate rows of column k -- the trace
/// functional applied to the image of basis element k. Identically zero
/// (all k) exactly for rotation tangents.
[[nodiscard]] Rational trace_functional_of_column(const TangentMap& L, int k);

/// Row-major copy of all 729 entries, for rank computations over the
/// ambient matrix space.
[[nodiscard]] std::vector<Rational> flatten(const TangentMap& x);

}  // namespace octoe6
