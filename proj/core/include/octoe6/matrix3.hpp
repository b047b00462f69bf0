#pragma once
/**
 * @file matrix3.hpp
 * @brief 3x3 matrices with octonion entries.
 *
 * Because the entries do not associate, no matrix-power or inverse helpers
 * are offered: every multi-factor product in this library is written with
 * explicit parentheses at the call site.
 */

#include "octoe6/octonion.hpp"

#include <array>

namespace octoe6 {

template <class S>
struct OctMatrix3 {
  std::array<std::array<Octonion<S>, 3>, 3> m{};

  [[nodiscard]] static OctMatrix3 identity() {
    OctMatrix3 out;
    for (int d = 0; d < 3; ++d) out.m[d][d] = Octonion<S>::unit(0);
    return out;
  }
};

template <class S>
[[nodiscard]] bool operator==(const OctMatrix3<S>& a, const OctMatrix3<S>& b) {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (!(a.m[r][c] == b.m[r][c])) return false;
  return true;
}

template <class S>
[[nodiscard]] OctMatrix3<S> operator+(const OctMatrix3<S>& a, const OctMatrix3<S>& b) {
  OctMatrix3<S> out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.m[r][c] = a.m[r][c] + b.m[r][c];
  return out;
}

template <class S>
[[nodiscard]] OctMatrix3<S> operator-(const OctMatrix3<S>& a, const OctMatrix3<S>& b) {
  OctMatrix3<S> out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.m[r][c] = a.m[r][c] - b.m[r][c];
  return out;
}

/// Row-by-column product (entry products taken in the written order).
template <class S>
[[nodiscard]] OctMatrix3<S> operator*(const OctMatrix3<S>& a, const OctMatrix3<S>& b) {
  OctMatrix3<S> out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      Octonion<S> acc;
      for (int k = 0; k < 3; ++k) acc = acc + a.m[r][k] * b.m[k][c];
      out.m[r][c] = acc;
    }
  return out;
}

/// Conjugate transpose.
template <class S>
[[nodiscard]] OctMatrix3<S> dagger(const OctMatrix3<S>& a) {
  OctMatrix3<S> out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.m[r][c] = conj(a.m[c][r]);
  return out;
}

template <class S>
[[nodiscard]] bool is_hermitian(const OctMatrix3<S>& a) {
  return a == dagger(a);
}

/// Real part of the trace.
template <class S>
[[nodiscard]] S real_trace(const OctMatrix3<S>& a) {
  return real_part(a.m[0][0]) + real_part(a.m[1][1]) + real_part(a.m[2][2]);
}

}  // namespace octoe6
