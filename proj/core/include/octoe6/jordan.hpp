#pragma once
/**
 * @file jordan.hpp
 * @brief The 27-dimensional algebra of 3x3 Hermitian octonionic matrices.
 *
 * An element is stored as three diagonal scalars and three off-diagonal
 * octonions, each x_i sitting opposite d_i:
 *
 *     [ d1        x3   conj(x2) ]
 *     [ conj(x3)  d2   x1       ]
 *     [ x2   conj(x1)  d3       ]
 *
 * The flat coordinate order is (d1, d2, d3, x1[0..7], x2[0..7], x3[0..7]).
 * With this cyclic convention the type-rotation conjugation is a pure cyclic
 * shift of both triples (no octonion conjugations) -- a property the unit
 * tests pin against literal matrix conjugation.
 */

#include "octoe6/jet.hpp"
#include "octoe6/matrix3.hpp"
#include "octoe6/octonion.hpp"

#include <array>
#include <stdexcept>
#include <type_traits>

namespace octoe6 {

inline constexpr int kJordanDim = 27;

/// Flat 27-vector of coordinates over the layout above.
template <class S>
using Coord27 = std::array<S, kJordanDim>;

template <class S>
struct JordanElement {
  S d1{}, d2{}, d3{};
  Octonion<S> x1, x2, x3;

  [[nodiscard]] static JordanElement identity() {
    JordanElement out;
    out.d1 = out.d2 = out.d3 = S(1);
    return out;
  }
};

// =========================================================================
// Coordinate layout
// =========================================================================

/// Flat index of diagonal a (1-based), i.e. d_a.
[[nodiscard]] constexpr int diag_index(int a) { return a - 1; }

/// Flat index of coefficient u of off-diagonal x_w (w in {1,2,3}).
[[nodiscard]] constexpr int oct_index(int w, int u) { return 3 + (w - 1) * kNumUnits + u; }

/// The ten coordinates of the type-a 2x2 vector block (two diagonals plus one
/// off-diagonal octonion).
[[nodiscard]] std::array<int, 10> vector_block_indices(int type);

/// The sixteen coordinates of the type-a spinor (the remaining two octonions).
[[nodiscard]] std::array<int, 16> spinor_indices(int type);

/// The flat index of the type-a corner diagonal scalar.
[[nodiscard]] int corner_index(int type);

template <class S>
[[nodiscard]] Coord27<S> coords(const JordanElement<S>& X) {
  Coord27<S> v{};
  v[0] = X.d1;
  v[1] = X.d2;
  v[2] = X.d3;
  for (int u = 0; u < kNumUnits; ++u) {
    v[oct_index(1, u)] = X.x1.c[u];
    v[oct_index(2, u)] = X.x2.c[u];
    v[oct_index(3, u)] = X.x3.c[u];
  }
  return v;
}

template <class S>
[[nodiscard]] JordanElement<S> from_coords(const Coord27<S>& v) {
  JordanElement<S> X;
  X.d1 = v[0];
  X.d2 = v[1];
  X.d3 = v[2];
  for (int u = 0; u < kNumUnits; ++u) {
    X.x1.c[u] = v[oct_index(1, u)];
    X.x2.c[u] = v[oct_index(2, u)];
    X.x3.c[u] = v[oct_index(3, u)];
  }
  return X;
}

/// The k-th coordinate basis element E_k.
template <class S>
[[nodiscard]] JordanElement<S> basis_element(int k) {
  if (k < 0 || k >= kJordanDim) throw std::out_of_range("basis index outside 0..26");
  Coord27<S> v{};
  v[k] = S(1);
  return from_coords(v);
}

// =========================================================================
// Linear structure
// =========================================================================

template <class S>
[[nodiscard]] bool operator==(const JordanElement<S>& a, const JordanElement<S>& b) {
  return a.d1 == b.d1 && a.d2 == b.d2 && a.d3 == b.d3 && a.x1 == b.x1 && a.x2 == b.x2 &&
         a.x3 == b.x3;
}

template <class S>
[[nodiscard]] bool is_zero(const JordanElement<S>& a) {
  return is_zero(a.d1) && is_zero(a.d2) && is_zero(a.d3) && is_zero(a.x1) &&
         is_zero(a.x2) && is_zero(a.x3);
}

template <class S>
[[nodiscard]] JordanElement<S> operator+(const JordanElement<S>& a, const JordanElement<S>& b) {
  return {a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
}

template <class S>
[[nodiscard]] JordanElement<S> operator-(const JordanElement<S>& a, const JordanElement<S>& b) {
  return {a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
}

template <class S>
[[nodiscard]] JordanElement<S> operator-(const JordanElement<S>& a) {
  return {-a.d1, -a.d2, -a.d3, -a.x1, -a.x2, -a.x3};
}

template <class S>
[[nodiscard]] JordanElement<S> operator*(const std::type_identity_t<S>& s,
                                         const JordanElement<S>& a) {
  return {s * a.d1, s * a.d2, s * a.d3, s * a.x1, s * a.x2, s * a.x3};
}

// =========================================================================
// Matrix form
// =========================================================================

template <class S>
[[nodiscard]] OctMatrix3<S> to_matrix(const JordanElement<S>& X) {
  OctMatrix3<S> M;
  M.m[0][0] = Octonion<S>::unit(0, X.d1);
  M.m[1][1] = Octonion<S>::unit(0, X.d2);
  M.m[2][2] = Octonion<S>::unit(0, X.d3);
  M.m[1][2] = X.x1;
  M.m[2][1] = conj(X.x1);
  M.m[2][0] = X.x2;
  M.m[0][2] = conj(X.x2);
  M.m[0][1] = X.x3;
  M.m[1][0] = conj(X.x3);
  return M;
}

/// Inverse of to_matrix. Throws std::invalid_argument unless M is exactly
/// Hermitian (callers on the floating-point path construct Hermitian matrices
/// directly and never round-trip through here).
template <class S>
[[nodiscard]] JordanElement<S> from_matrix(const OctMatrix3<S>& M) {
  if (!is_hermitian(M)) throw std::invalid_argument("matrix is not Hermitian");
  JordanElement<S> X;
  X.d1 = real_part(M.m[0][0]);
  X.d2 = real_part(M.m[1][1]);
  X.d3 = real_part(M.m[2][2]);
  X.x1 = M.m[1][2];
  X.x2 = M.m[2][0];
  X.x3 = M.m[0][1];
  return X;
}

// =========================================================================
// Algebraic structure
// =========================================================================

template <class S>
[[nodiscard]] S trace(const JordanElement<S>& X) {
  return X.d1 + X.d2 + X.d3;
}

/// The cubic form
///   det X = d1 d2 d3 - d1 |x1|^2 - d2 |x2|^2 - d3 |x3|^2 + 2 Re((x1 x2) x3).
template <class S>
[[nodiscard]] S freudenthal_det(const JordanElement<S>& X) {
  const S cross = real_part((X.x1 * X.x2) * X.x3);
  return X.d1 * X.d2 * X.d3 - X.d1 * norm2(X.x1) - X.d2 * norm2(X.x2) -
         X.d3 * norm2(X.x3) + cross + cross;
}

/// Symmetrized product (XY + YX)/2; the result is Hermitian again.
template <class S>
[[nodiscard]] JordanElement<S> jordan_product(const JordanElement<S>& X,
                                              const JordanElement<S>& Y) {
  const OctMatrix3<S> a = to_matrix(X);
  const OctMatrix3<S> b = to_matrix(Y);
  OctMatrix3<S> sum = a * b + b * a;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int u = 0; u < kNumUnits; ++u) sum.m[r][c].c[u] = half_of(sum.m[r][c].c[u]);
  return from_matrix(sum);
}

// =========================================================================
// Scalar-ring conversions
// =========================================================================

[[nodiscard]] inline JordanElement<double> to_float(const JordanElement<Rational>& X) {
  const auto v = coords(X);
  Coord27<double> w;
  for (int k = 0; k < kJordanDim; ++k) w[k] = to_double(v[k]);
  return from_coords(w);
}

/// Embed an exact element as jets with zero first and second derivative.
[[nodiscard]] inline JordanElement<Jet2> constant_jets(const JordanElement<Rational>& X) {
  const auto v = coords(X);
  Coord27<Jet2> w;
  for (int k = 0; k < kJordanDim; ++k) w[k] = Jet2{v[k], rat(0), rat(0)};
  return from_coords(w);
}

/// Coordinatewise jet component: order 0 = value, 1 = first derivative,
/// 2 = second derivative.
[[nodiscard]] inline JordanElement<Rational> jet_part(const JordanElement<Jet2>& X, int order) {
  if (order < 0 || order > 2) throw std::out_of_range("jet order must be 0, 1 or 2");
  const auto v = coords(X);
  Coord27<Rational> w;
  for (int k = 0; k < kJordanDim; ++k)
    w[k] = order == 0 ? v[k].f0 : (order == 1 ? v[k].f1 : v[k].f2);
  return from_coords(w);
}

// =========================================================================
// Type rotation (cyclic relabeling) and type blocks
// =========================================================================

/// Conjugation by the cyclic permutation matrix; sends
/// (d1,d2,d3; x1,x2,x3) -> (d3,d1,d2; x3,x1,x2) with no conjugations.
template <class S>
[[nodiscard]] JordanElement<S> tshift(const JordanElement<S>& X) {
  return {X.d3, X.d1, X.d2, X.x3, X.x1, X.x2};
}

/// Inverse of tshift: (d1,d2,d3; x1,x2,x3) -> (d2,d3,d1; x2,x3,x1).
template <class S>
[[nodiscard]] JordanElement<S> tunshift(const JordanElement<S>& X) {
  return {X.d2, X.d3, X.d1, X.x2, X.x3, X.x1};
}

/// The type-a reading of an element: a 2x2 Hermitian vector block
/// [[va, off], [conj(off), vb]], a 2-component octonion spinor column, and
/// the remaining corner diagonal.
template <class S>
struct TypeBlocks {
  S va{}, vb{};
  Octonion<S> off;
  Octonion<S> theta1, theta2;
  S corner{};
};

template <class S>
[[nodiscard]] TypeBlocks<S> type_blocks(const JordanElement<S>& X, int type) {
  if (type < 1 || type > 3) throw std::out_of_range("type must be 1, 2 or 3");
  JordanElement<S> Y = X;
  for (int s = 1; s < type; ++s) Y = tunshift(Y);
  TypeBlocks<S> out;
  out.va = Y.d1;
  out.vb = Y.d2;
  out.off = Y.x3;
  out.theta1 = conj(Y.x2);  // the column above the corner reads (conj(x2), x1)
  out.theta2 = Y.x1;
  out.corner = Y.d3;
  return out;
}

}  // namespace octoe6
