#include "octoe6/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace octoe6 {

namespace {

void check_symmetric(const RatMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("symmetric_inertia: matrix not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[i][j] != a[j][i]) throw std::invalid_argument("symmetric_inertia: matrix not symmetric");
    }
  }
}

}  // namespace

Inertia symmetric_inertia(RatMatrix a) {
  check_symmetric(a);
  const int n = static_cast<int>(a.size());
  Inertia out;
  for (int k = 0; k < n; ++k) {
    if (is_zero(a[k][k])) {
      // Prefer swapping in a later nonzero diagonal entry; otherwise turn a
      // nonzero off-diagonal coupling a[k][j] into a diagonal 2*a[k][j] by
      // the congruence row_k += row_j, col_k += col_j (valid because both
      // diagonals are zero at that point).
      int swap_j = -1;
      for (int j = k + 1; j < n; ++j) {
        if (!is_zero(a[j][j])) {
          swap_j = j;
          break;
        }
      }
      if (swap_j >= 0) {
        std::swap(a[k], a[swap_j]);
        for (int r = 0; r < n; ++r) std::swap(a[r][k], a[r][swap_j]);
      } else {
        int add_j = -1;
        for (int j = k + 1; j < n; ++j) {
          if (!is_zero(a[k][j])) {
            add_j = j;
            break;
          }
        }
        if (add_j < 0) {
          ++out.zero;
          continue;
        }
        for (int c = 0; c < n; ++c) a[k][c] += a[add_j][c];
        for (int r = 0; r < n; ++r) a[r][k] += a[r][add_j];
      }
    }
    const Rational pivot = a[k][k];
    if (sign(pivot) > 0) {
      ++out.positive;
    } else {
      ++out.negative;
    }
    for (int j = k + 1; j < n; ++j) {
      if (is_zero(a[j][k])) continue;
      const Rational f = a[j][k] / pivot;
      for (int c = 0; c < n; ++c) {
        if (is_zero(a[k][c])) continue;
        a[j][c] -= f * a[k][c];
      }
      for (int r = 0; r < n; ++r) {
        if (is_zero(a[r][k])) continue;
        a[r][j] -= f * a[r][k];
      }
    }
  }
  return out;
}

RowSpace::RowSpace(int dim) : dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("RowSpace: dimension must be positive");
}

void RowSpace::reduce(RatVector& v, RatVector* combo) const {
  for (const auto& row : rows_) {
    const Rational f = v[row.pivot];
    if (is_zero(f)) continue;
    for (int c = 0; c < dim_; ++c) {
      if (is_zero(row.v[c])) continue;
      v[c] -= f * row.v[c];
    }
    if (combo != nullptr) {
      if (combo->size() < row.combo.size()) combo->resize(row.combo.size(), Rational(0));
      for (std::size_t j = 0; j < row.combo.size(); ++j) {
        if (is_zero(row.combo[j])) continue;
        (*combo)[j] += f * row.combo[j];
      }
    }
  }
}

bool RowSpace::insert(const RatVector& v) {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("RowSpace: dimension mismatch");
  RatVector r = v;
  RatVector alpha;
  reduce(r, &alpha);
  int pivot = -1;
  for (int c = 0; c < dim_; ++c) {
    if (!is_zero(r[c])) {
      pivot = c;
      break;
    }
  }
  if (pivot < 0) return false;

  // r = v - sum_j alpha[j] * basis_j, so the normalized echelon row
  // r / lead expands over basis members as (v - sum alpha_j basis_j) / lead.
  const int member = rank();
  EchelonRow row;
  row.pivot = pivot;
  const Rational lead = r[pivot];
  row.v.resize(dim_);
  for (int c = 0; c < dim_; ++c) row.v[c] = r[c] / lead;
  row.combo.assign(member + 1, Rational(0));
  for (std::size_t j = 0; j < alpha.size(); ++j) row.combo[j] = -alpha[j] / lead;
  row.combo[member] = Rational(1) / lead;

  // Keep the basis fully reduced: eliminate the new pivot column everywhere.
  for (auto& old : rows_) {
    const Rational f = old.v[pivot];
    if (is_zero(f)) continue;
    for (int c = 0; c < dim_; ++c) {
      if (is_zero(row.v[c])) continue;
      old.v[c] -= f * row.v[c];
    }
    if (old.combo.size() < row.combo.size()) old.combo.resize(row.combo.size(), Rational(0));
    for (std::size_t j = 0; j < row.combo.size(); ++j) {
      if (is_zero(row.combo[j])) continue;
      old.combo[j] -= f * row.combo[j];
    }
  }

  const auto at = std::find_if(rows_.begin(), rows_.end(),
                               [&](const EchelonRow& e) { return e.pivot > pivot; });
  rows_.insert(at, std::move(row));
  return true;
}

bool RowSpace::contains(const RatVector& v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("RowSpace: dimension mismatch");
  RatVector r = v;
  reduce(r, nullptr);
  for (const auto& c : r) {
    if (!is_zero(c)) return false;
  }
  return true;
}

std::optional<RatVector> RowSpace::express(const RatVector& v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("RowSpace: dimension mismatch");
  RatVector r = v;
  RatVector alpha;
  reduce(r, &alpha);
  for (const auto& c : r) {
    if (!is_zero(c)) return std::nullopt;
  }
  alpha.resize(rank(), Rational(0));
  return alpha;
}

RatMatrix RowSpace::echelon_rows() const {
  RatMatrix out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.v);
  return out;
}

namespace {

void check_square(const RatMatrix& a, const char* who) {
  for (const auto& row : a) {
    if (row.size() != a.size()) {
      throw std::invalid_argument(std::string(who) + ": matrix not square");
    }
  }
}

}  // namespace

Rational determinant(RatMatrix a) {
  check_square(a, "determinant");
  const int n = static_cast<int>(a.size());
  Rational det(1);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (!is_zero(a[r][k])) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != k) {
      std::swap(a[k], a[pivot]);
      det = -det;
    }
    det *= a[k][k];
    for (int r = k + 1; r < n; ++r) {
      if (is_zero(a[r][k])) continue;
      const Rational f = a[r][k] / a[k][k];
      for (int c = k; c < n; ++c) {
        if (is_zero(a[k][c])) continue;
        a[r][c] -= f * a[k][c];
      }
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(RatMatrix a) {
  check_square(a, "inverse");
  const int n = static_cast<int>(a.size());
  RatMatrix inv(n, RatVector(n, Rational(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (!is_zero(a[r][k])) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != k) {
      std::swap(a[k], a[pivot]);
      std::swap(inv[k], inv[pivot]);
    }
    const Rational lead = a[k][k];
    for (int c = 0; c < n; ++c) {
      a[k][c] /= lead;
      inv[k][c] /= lead;
    }
    for (int r = 0; r < n; ++r) {
      if (r == k || is_zero(a[r][k])) continue;
      const Rational f = a[r][k];
      for (int c = 0; c < n; ++c) {
        a[r][c] -= f * a[k][c];
        inv[r][c] -= f * inv[k][c];
      }
    }
  }
  return inv;
}

}  // namespace octoe6
