#pragma once
/**
 * @file linalg.hpp
 * @brief Exact rational linear algebra: echelonized row spaces and the
 *        inertia of symmetric bilinear forms.
 *
 * Everything here works over the rationals with no floating point anywhere:
 * ranks come from fraction-free membership in a reduced echelon basis, and
 * signatures come from symmetric congruence (Sylvester's law of inertia),
 * never from eigenvalue estimates.
 */

#include "octoe6/rational.hpp"

#include <optional>
#include <vector>

namespace octoe6 {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

/// Signature of a symmetric bilinear form: counts of positive, negative and
/// zero diagonal entries after congruence diagonalization.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  [[nodiscard]] friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Diagonalizes a symmetric matrix by exact congruence transformations
/// (P^T A P with invertible P) and counts diagonal signs. Throws
/// std::invalid_argument if the matrix is not square and symmetric.
[[nodiscard]] Inertia symmetric_inertia(RatMatrix a);

/// A subspace of Q^dim maintained as a reduced echelon basis. Inserted
/// vectors that enlarge the space become basis members (in insertion order);
/// every vector in the space can be expressed exactly over those members.
class RowSpace {
 public:
  explicit RowSpace(int dim);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int rank() const { return static_cast<int>(rows_.size()); }

  /// Adds v to the space. Returns true if v was independent of the current
  /// space (and is now basis member number rank()-1), false if dependent.
  bool insert(const RatVector& v);

  [[nodiscard]] bool contains(const RatVector& v) const;

  /// Coefficients c with v = sum_j c[j] * basis_member_j, or nullopt if v
  /// lies outside the space. Coefficients are unique and exact.
  [[nodiscard]] std::optional<RatVector> express(const RatVector& v) const;

  /// The reduced echelon basis rows, ordered by pivot column. Each row has a
  /// leading 1 in its pivot column and zeros in every other row's pivot.
  [[nodiscard]] RatMatrix echelon_rows() const;

 private:
  struct EchelonRow {
    int pivot = -1;
    RatVector v;      // normalized: v[pivot] == 1, reduced against all others
    RatVector combo;  // v as a combination of the inserted basis members
  };

  void reduce(RatVector& v, RatVector* combo) const;

  int dim_;
  std::vector<EchelonRow> rows_;  // sorted by pivot column
};

/// Exact determinant of a square rational matrix (Gaussian elimination with
/// sign tracking). Throws std::invalid_argument if the matrix is not square.
[[nodiscard]] Rational determinant(RatMatrix a);

/// Exact inverse of a square rational matrix via Gauss-Jordan elimination,
/// or nullopt if the matrix is singular. Throws std::invalid_argument if the
/// matrix is not square.
[[nodiscard]] std::optional<RatMatrix> inverse(RatMatrix a);

}  // namespace octoe6
