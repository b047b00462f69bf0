#pragma once
/**
 * @file structure.hpp
 * @brief The 78-dimensional Lie algebra: basis, structure constants, Killing
 *        form, Cartan set.
 *
 * The Algebra singleton extracts the tangent maps of all 135 catalogued
 * transformation curves, eliminates the exact linear dependencies among them
 * in three documented stages (135 -> 100 -> 79 -> 78), fixes a named
 * 78-element basis, and computes the full commutation table by re-expressing
 * every pairwise matrix commutator over that basis -- all in exact rational
 * arithmetic. Construction throws if any rank, dependency, closure, or
 * orthogonality property fails, so an Algebra in hand is a verified one.
 */

#include "octoe6/linalg.hpp"
#include "octoe6/tangent.hpp"
#include "octoe6/transforms.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace octoe6 {

/// One member of the fixed 78-element basis.
struct BasisElement {
  int index = 0;
  std::string name;  // e.g. "A_i", "S1_k", "R2_xz", "B1_tz", "B2_tz-B3_tz"
  TangentMap map;
};

/// One term of a commutator expansion: coefficient c on basis element k.
struct BracketTerm {
  int k = 0;
  Rational c;

  [[nodiscard]] friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

/// Ranks observed while eliminating the dependent transformation tangents:
/// dropping the duplicate A/G copies and the S sum leaves 100, the planar
/// rotation relations cut to 79, and the boost sum cuts to 78 -- every stage
/// must already have rank exactly 78.
struct ReductionStages {
  int rank_all = 0;       // rank of all 135 tangents
  int count_stage1 = 0;   // 100 survivors after dropping A^2, A^3, G^2, G^3, S^3
  int rank_stage1 = 0;
  int count_stage2 = 0;   // 79 survivors after dropping R^2_xq, R^3_xq, S^2
  int rank_stage2 = 0;
  int count_stage3 = 0;   // 78 survivors after dropping B^3_tz
  int rank_stage3 = 0;
};

class Algebra {
 public:
  static constexpr int kDim = 78;
  /// First boost index: 0..51 are rotations, 52..77 are boosts.
  static constexpr int kBoostStart = 52;

  /// The verified singleton. First call builds everything (a few seconds);
  /// throws std::logic_error if any structural property fails.
  static const Algebra& get();

  [[nodiscard]] const std::vector<GeneratorName>& generators() const { return generators_; }
  [[nodiscard]] const TangentMap& tangent(const GeneratorName& name) const;
  [[nodiscard]] const ReductionStages& stages() const { return stages_; }

  [[nodiscard]] const std::vector<BasisElement>& basis() const { return basis_; }
  [[nodiscard]] int index_of(std::string_view name) const;  // throws on unknown name
  [[nodiscard]] const std::array<int, 6>& cartan_indices() const { return cartan_; }

  /// Sparse expansion of [e_i, e_j] for i < j, sorted by k.
  [[nodiscard]] const std::vector<BracketTerm>& bracket_table(int i, int j) const;
  /// Dense expansion of [e_i, e_j] for any pair (antisymmetry applied).
  [[nodiscard]] RatVector bracket_basis(int i, int j) const;
  /// Bilinear extension of the bracket to arbitrary coordinate vectors.
  [[nodiscard]] RatVector bracket_vector(const RatVector& x, const RatVector& y) const;
  /// Exact Jacobi identity check on one basis triple via the table.
  [[nodiscard]] bool jacobi_holds(int i, int j, int k) const;

  /// Killing form K(x,y) = trace(ad_x ad_y) over the 78-dim adjoint; exactly
  /// diagonal in this basis (verified at construction).
  [[nodiscard]] const RatMatrix& killing_matrix() const { return killing_; }
  [[nodiscard]] Rational killing(const RatVector& x, const RatVector& y) const;

  /// Coordinates of an arbitrary tangent map over the basis, or nullopt if
  /// it lies outside the algebra.
  [[nodiscard]] std::optional<RatVector> express_in_basis(const TangentMap& L) const;
  /// The tangent map sum_k coords[k] * basis_k.
  [[nodiscard]] TangentMap realize(const RatVector& coords) const;

  /// Dimension of {x : [c,x] = 0 for all six Cartan elements}, via exact
  /// kernel rank of the stacked adjoint maps. Equals 6 (maximality).
  [[nodiscard]] int cartan_centralizer_dimension() const;

  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

 private:
  Algebra();

  void build_tangents();
  void verify_dependencies() const;
  void run_staged_reduction();
  void build_basis();
  void build_table();
  void build_killing();

  [[nodiscard]] static int pair_slot(int i, int j);  // i < j

  std::vector<GeneratorName> generators_;
  std::vector<TangentMap> tangents_;
  std::map<std::array<int, 4>, int> generator_index_;
  ReductionStages stages_;
  std::vector<BasisElement> basis_;
  std::map<std::string, int, std::less<>> name_index_;
  std::array<int, 6> cartan_{};
  std::unique_ptr<RowSpace> span_;  // 78 rows over the 729-dim matrix space
  std::vector<std::vector<BracketTerm>> table_;  // slot(i,j) for i < j
  RatMatrix killing_;
};

}  // namespace octoe6
