#pragma once
/**
 * @file octonion.hpp
 * @brief Octonion arithmetic over a generic coefficient ring.
 *
 * The ordered basis is (1, i, j, k, kl, jl, il, l), indices 0..7. The full
 * signed multiplication table is *derived* at compile time from 21 defining
 * ordered products among imaginary units (plus anticommutativity, u^2 = -1,
 * and the identity), with every cell checked to be set exactly once and the
 * quaternionic triples checked to close cyclically. Sign errors are the
 * dominant risk in this domain, so the table is constructed, not hand-typed.
 */

#include "octoe6/rational.hpp"

#include <array>
#include <stdexcept>
#include <string_view>
#include <type_traits>
#include <utility>

namespace octoe6 {

inline constexpr int kNumUnits = 8;

/// Printable names of the basis units, in storage order.
inline constexpr std::array<std::string_view, kNumUnits> kUnitNames = {
    "1", "i", "j", "k", "kl", "jl", "il", "l"};

/// Index of a unit name; throws std::invalid_argument for an unknown name.
[[nodiscard]] int unit_index(std::string_view name);

/// Signed basis product: e_p * e_q = sign * e_unit.
struct UnitProduct {
  int sign;
  int unit;
};

namespace detail {

/// e_p * e_q = +e_r: the 21 ordered products among imaginary units that pin
/// the multiplication convention. Each quaternionic triple {p,q,r} appears as
/// its three cyclic ordered pairs.
struct DefiningProduct {
  int p, q, r;
};

inline constexpr std::array<DefiningProduct, 21> kDefiningProducts = {{
    // products equal to i
    {2, 3, 1},
    {4, 5, 1},
    {7, 6, 1},
    // products equal to j
    {3, 1, 2},
    {6, 4, 2},
    {7, 5, 2},
    // products equal to k
    {1, 2, 3},
    {5, 6, 3},
    {7, 4, 3},
    // products equal to kl
    {5, 1, 4},
    {2, 6, 4},
    {3, 7, 4},
    // products equal to jl
    {1, 4, 5},
    {6, 3, 5},
    {2, 7, 5},
    // products equal to il
    {4, 2, 6},
    {3, 5, 6},
    {1, 7, 6},
    // products equal to l
    {6, 1, 7},
    {5, 2, 7},
    {4, 3, 7},
}};

/// Derive the full 8x8 signed table. Throws (a compile error when evaluated
/// at compile time) if any cell would be set twice, is left unset, or a
/// defining triple fails to close cyclically.
[[nodiscard]] constexpr std::array<std::array<UnitProduct, kNumUnits>, kNumUnits>
build_unit_table() {
  std::array<std::array<UnitProduct, kNumUnits>, kNumUnits> t{};
  std::array<std::array<bool, kNumUnits>, kNumUnits> done{};
  auto put = [&](int p, int q, int sg, int u) {
    if (done[p][q]) throw std::logic_error("unit product defined twice");
    t[p][q] = UnitProduct{sg, u};
    done[p][q] = true;
  };
  put(0, 0, +1, 0);
  for (int q = 1; q < kNumUnits; ++q) {
    put(0, q, +1, q);  // 1 * e_q
    put(q, 0, +1, q);  // e_q * 1
    put(q, q, -1, 0);  // e_q^2 = -1
  }
  for (const auto& d : kDefiningProducts) {
    put(d.p, d.q, +1, d.r);
    put(d.q, d.p, -1, d.r);  // anticommutativity of distinct imaginary units
  }
  for (int p = 0; p < kNumUnits; ++p)
    for (int q = 0; q < kNumUnits; ++q)
      if (!done[p][q]) throw std::logic_error("unit product left undefined");
  for (const auto& d : kDefiningProducts) {
    // cyclic closure: p*q = r implies q*r = p and r*p = q
    if (t[d.q][d.r].sign != +1 || t[d.q][d.r].unit != d.p)
      throw std::logic_error("defining products are not cyclically consistent");
    if (t[d.r][d.p].sign != +1 || t[d.r][d.p].unit != d.q)
      throw std::logic_error("defining products are not cyclically consistent");
  }
  return t;
}

}  // namespace detail

/// The derived basis multiplication table (checked at compile time).
inline constexpr auto kUnitTable = detail::build_unit_table();

/// e_p * e_q as a signed unit.
[[nodiscard]] constexpr UnitProduct unit_mul(int p, int q) { return kUnitTable[p][q]; }

/// The 7 unordered quaternionic triples {p,q,r} (each sorted ascending,
/// listed lexicographically) derived from the defining products.
[[nodiscard]] std::array<std::array<int, 3>, 7> quaternionic_triples();

// =========================================================================
// Octonion over a generic coefficient ring
// =========================================================================

/// An octonion with coefficients of type S over the ordered basis above.
/// S must supply: S(), S(int), +, -, unary -, *, ==, and is_zero(S).
/// Used with S = Rational (exact identities), Jet2 (tangent extraction) and
/// double (finite-angle group checks).
template <class S>
struct Octonion {
  std::array<S, kNumUnits> c{};

  /// coeff * e_u.
  [[nodiscard]] static Octonion unit(int u, S coeff = S(1)) {
    Octonion o;
    o.c[static_cast<std::size_t>(u)] = std::move(coeff);
    return o;
  }
};

template <class S>
[[nodiscard]] bool operator==(const Octonion<S>& a, const Octonion<S>& b) {
  for (int u = 0; u < kNumUnits; ++u)
    if (!(a.c[u] == b.c[u])) return false;
  return true;
}

template <class S>
[[nodiscard]] bool is_zero(const Octonion<S>& a) {
  for (const S& v : a.c)
    if (!is_zero(v)) return false;
  return true;
}

template <class S>
[[nodiscard]] Octonion<S> operator+(const Octonion<S>& a, const Octonion<S>& b) {
  Octonion<S> out;
  for (int u = 0; u < kNumUnits; ++u) out.c[u] = a.c[u] + b.c[u];
  return out;
}

template <class S>
[[nodiscard]] Octonion<S> operator-(const Octonion<S>& a, const Octonion<S>& b) {
  Octonion<S> out;
  for (int u = 0; u < kNumUnits; ++u) out.c[u] = a.c[u] - b.c[u];
  return out;
}

template <class S>
[[nodiscard]] Octonion<S> operator-(const Octonion<S>& a) {
  Octonion<S> out;
  for (int u = 0; u < kNumUnits; ++u) out.c[u] = -a.c[u];
  return out;
}

// The scalar parameter is non-deduced so expression-template scalars (e.g.
// GMP's) convert to S instead of poisoning deduction.
template <class S>
[[nodiscard]] Octonion<S> operator*(const std::type_identity_t<S>& s, const Octonion<S>& a) {
  Octonion<S> out;
  for (int u = 0; u < kNumUnits; ++u) out.c[u] = s * a.c[u];
  return out;
}

/// Bilinear extension of the basis table. Skips zero coefficients, which is
/// what makes exact tangent extraction and the bracket table fast.
template <class S>
[[nodiscard]] Octonion<S> operator*(const Octonion<S>& a, const Octonion<S>& b) {
  Octonion<S> out;
  for (int p = 0; p < kNumUnits; ++p) {
    if (is_zero(a.c[p])) continue;
    for (int q = 0; q < kNumUnits; ++q) {
      if (is_zero(b.c[q])) continue;
      const UnitProduct t = unit_mul(p, q);
      if (t.sign > 0)
        out.c[t.unit] = out.c[t.unit] + a.c[p] * b.c[q];
      else
        out.c[t.unit] = out.c[t.unit] - a.c[p] * b.c[q];
    }
  }
  return out;
}

/// Conjugate: negates the imaginary coefficients.
template <class S>
[[nodiscard]] Octonion<S> conj(const Octonion<S>& a) {
  Octonion<S> out = a;
  for (int u = 1; u < kNumUnits; ++u) out.c[u] = -a.c[u];
  return out;
}

/// Real part (coefficient of 1).
template <class S>
[[nodiscard]] S real_part(const Octonion<S>& a) {
  return a.c[0];
}

/// a with its real coefficient dropped.
template <class S>
[[nodiscard]] Octonion<S> imag_part(const Octonion<S>& a) {
  Octonion<S> out = a;
  out.c[0] = S();
  return out;
}

/// Squared norm: the sum of squared coefficients (= real part of a * conj(a)).
template <class S>
[[nodiscard]] S norm2(const Octonion<S>& a) {
  S out{};
  for (int u = 0; u < kNumUnits; ++u) {
    if (is_zero(a.c[u])) continue;
    out = out + a.c[u] * a.c[u];
  }
  return out;
}

/// (ab)c - a(bc); identically zero exactly on associative triples.
template <class S>
[[nodiscard]] Octonion<S> associator(const Octonion<S>& a, const Octonion<S>& b,
                                     const Octonion<S>& c) {
  return (a * b) * c - a * (b * c);
}

/// ab - ba.
template <class S>
[[nodiscard]] Octonion<S> commutator(const Octonion<S>& a, const Octonion<S>& b) {
  return a * b - b * a;
}

// =========================================================================
// Preferred unit subalgebras
// =========================================================================

/// Coefficient spans of the preferred chain R < C < H < O:
/// C = <1, l>, H = <1, k, kl, l>.
enum class UnitSpan : unsigned char { Real, Complex, Quaternion };

/// True iff every coefficient outside the named span vanishes.
template <class S>
[[nodiscard]] bool in_span(const Octonion<S>& a, UnitSpan which) {
  constexpr std::array<std::array<bool, kNumUnits>, 3> allowed = {{
      {true, false, false, false, false, false, false, false},  // R: 1
      {true, false, false, false, false, false, false, true},   // C: 1, l
      {true, false, false, true, true, false, false, true},     // H: 1, k, kl, l
  }};
  const auto& mask = allowed[static_cast<std::size_t>(which)];
  for (int u = 0; u < kNumUnits; ++u)
    if (!mask[u] && !is_zero(a.c[u])) return false;
  return true;
}

}  // namespace octoe6
