#pragma once
/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational scalars (GMP-backed).
 *
 * Every algebraic identity in this library is certified with exact rational
 * arithmetic; floating point appears only in finite-angle group-element spot
 * checks. `Rational` values are always kept canonical: lowest terms, positive
 * denominator.
 */

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace octoe6 {

/// Exact rational number, canonical form (lowest terms, denominator > 0).
using Rational = mpq_class;

/// Canonical rational num/den. Throws std::invalid_argument if den == 0.
[[nodiscard]] Rational rat(long num, long den = 1);

/// Render as "p/q", or plain "p" when the denominator is 1.
[[nodiscard]] std::string to_string(const Rational& r);

/// Parse "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
[[nodiscard]] Rational parse_rational(std::string_view text);

/// -1, 0 or +1.
[[nodiscard]] inline int sign(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }

[[nodiscard]] inline bool is_zero(const Rational& r) { return sign(r) == 0; }

/// Zero test for the floating-point scalar path (exact zero, not a tolerance).
[[nodiscard]] inline bool is_zero(double x) { return x == 0.0; }

/// v/2, exactly for rationals; overloaded per scalar type so generic code can
/// halve without assuming a division operator.
[[nodiscard]] inline Rational half_of(const Rational& v) { return v / 2; }
[[nodiscard]] inline double half_of(double v) { return v / 2; }

/// Nearest double; used only by the floating-point evaluation paths.
[[nodiscard]] inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace octoe6
