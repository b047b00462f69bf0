#pragma once
/**
 * @file jet.hpp
 * @brief Degree-2 jets: a curve's value, first and second derivative at 0,
 *        kept as exact rationals.
 *
 * The one-parameter transformation curves in this library have matrix entries
 * of the form c * f(s * alpha) with f one of a handful of elementary profiles.
 * Evaluating a whole curve on degree-2 jets instead of numbers yields its
 * exact tangent (first derivative) and, for commutator curves, the exact
 * second-order part -- no symbolic differentiation and no floating point.
 */

#include "octoe6/rational.hpp"

#include <utility>

namespace octoe6 {

// =========================================================================
// Jet2: (f(0), f'(0), f''(0))
// =========================================================================

/// Value and first two derivatives at 0 of a smooth curve alpha -> f(alpha).
struct Jet2 {
  Rational f0{};  ///< f(0)
  Rational f1{};  ///< f'(0)
  Rational f2{};  ///< f''(0)

  Jet2() = default;
  Jet2(Rational v, Rational d1, Rational d2)
      : f0(std::move(v)), f1(std::move(d1)), f2(std::move(d2)) {}
  /// Constant curve with value v.
  explicit Jet2(int v) : f0(v) {}
};

[[nodiscard]] bool operator==(const Jet2& a, const Jet2& b);
[[nodiscard]] inline bool operator!=(const Jet2& a, const Jet2& b) { return !(a == b); }

[[nodiscard]] Jet2 operator+(const Jet2& a, const Jet2& b);
[[nodiscard]] Jet2 operator-(const Jet2& a, const Jet2& b);
[[nodiscard]] Jet2 operator-(const Jet2& a);

/// Truncated Leibniz product:
/// (fg)(0) = f0 g0, (fg)' = f0 g1 + f1 g0, (fg)'' = f0 g2 + 2 f1 g1 + f2 g0.
[[nodiscard]] Jet2 operator*(const Jet2& a, const Jet2& b);
[[nodiscard]] Jet2 operator*(const Rational& c, const Jet2& a);

[[nodiscard]] inline bool is_zero(const Jet2& a) {
  return is_zero(a.f0) && is_zero(a.f1) && is_zero(a.f2);
}

[[nodiscard]] inline Jet2 half_of(const Jet2& a) {
  return {half_of(a.f0), half_of(a.f1), half_of(a.f2)};
}

// =========================================================================
// Elementary profiles
// =========================================================================

/// The scalar profile functions that occur in the matrix curves.
enum class Func : unsigned char { One, Cos, Sin, Cosh, Sinh, Exp };

/// Jet at alpha = 0 of alpha -> f(c * alpha).
[[nodiscard]] Jet2 jet_of(Func f, const Rational& c);

/// f(x) as a double (floating-point evaluation path).
[[nodiscard]] double eval(Func f, double x);

/// Jet at alpha = 0 of alpha -> f(c * g(alpha)).
/// Requires g.f0 == 0 (throws std::domain_error otherwise), i.e. the inner
/// curve starts at the profile's reference point.
[[nodiscard]] Jet2 jet_compose(Func f, const Rational& c, const Jet2& g);

}  // namespace octoe6
