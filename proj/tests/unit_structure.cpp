#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "octoe6/linalg.hpp"
#include "octoe6/rng.hpp"
#include "octoe6/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

using namespace octoe6;

namespace {

bool all_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return is_zero(c); });
}

RatVector unit_vector(int k) {
  RatVector v(Algebra::kDim, Rational(0));
  v[k] = Rational(1);
  return v;
}

RatVector random_coords(RatRng& rng) {
  RatVector v(Algebra::kDim, Rational(0));
  for (auto& c : v) c = rng.next(5);
  return v;
}

// Smallest basis index with a nonzero coefficient, or -1 when none.
int support_min(const RatVector& v) {
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (!is_zero(v[i])) return i;
  }
  return -1;
}

int support_max(const RatVector& v) {
  for (int i = static_cast<int>(v.size()); i-- > 0;) {
    if (!is_zero(v[i])) return i;
  }
  return -1;
}

}  // namespace

TEST_CASE("the staged reduction removes dependencies in three recorded steps") {
  const ReductionStages& st = Algebra::get().stages();
  CHECK(st.rank_all == 78);
  CHECK(st.count_stage1 == 100);
  CHECK(st.rank_stage1 == 78);
  CHECK(st.count_stage2 == 79);
  CHECK(st.rank_stage2 == 78);
  CHECK(st.count_stage3 == 78);
  CHECK(st.rank_stage3 == 78);
}

TEST_CASE("the basis uses the fixed naming layout") {
  const Algebra& alg = Algebra::get();
  REQUIRE(static_cast<int>(alg.basis().size()) == 78);
  for (int k = 0; k < 78; ++k) {
    CHECK(alg.basis()[k].index == k);
    CHECK(alg.index_of(alg.basis()[k].name) == k);
  }
  CHECK(alg.index_of("A_i") == 0);
  CHECK(alg.index_of("A_l") == 6);
  CHECK(alg.index_of("G_i") == 7);
  CHECK(alg.index_of("G_l") == 13);
  CHECK(alg.index_of("S1_i") == 14);
  CHECK(alg.index_of("S1_l") == 20);
  CHECK(alg.index_of("R1_xi") == 21);
  CHECK(alg.index_of("R1_xl") == 27);
  CHECK(alg.index_of("R1_xz") == 28);
  CHECK(alg.index_of("R3_xz") == 30);
  CHECK(alg.index_of("R1_zi") == 31);
  CHECK(alg.index_of("R2_zi") == 38);
  CHECK(alg.index_of("R3_zl") == 51);
  CHECK(alg.index_of("B1_tx") == 52);
  CHECK(alg.index_of("B3_tx") == 54);
  CHECK(alg.index_of("B1_ti") == 55);
  CHECK(alg.index_of("B2_tkl") == 65);
  CHECK(alg.index_of("B3_tl") == 75);
  CHECK(alg.index_of("B1_tz") == 76);
  CHECK(alg.index_of("B2_tz-B3_tz") == 77);
  CHECK_THROWS_AS(static_cast<void>(alg.index_of("B3_tz")), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(alg.index_of("")), std::invalid_argument);
}

TEST_CASE("generator tangents are catalogued and off-catalogue lookups throw") {
  const Algebra& alg = Algebra::get();
  CHECK(alg.tangent(GeneratorName{GenKind::A, 2, 3, 0}) ==
        alg.tangent(GeneratorName{GenKind::A, 1, 3, 0}));
  CHECK_THROWS_AS(
      static_cast<void>(alg.tangent(GeneratorName{GenKind::Transverse, 1, 2, 3})),
      std::invalid_argument);
}

TEST_CASE("bracket lookups are antisymmetric and vanish on repeated arguments") {
  const Algebra& alg = Algebra::get();
  RatRng rng(401);
  for (int trial = 0; trial < 25; ++trial) {
    const int i = static_cast<int>(rng.next_index(78));
    const int j = static_cast<int>(rng.next_index(78));
    const RatVector forward = alg.bracket_basis(i, j);
    const RatVector backward = alg.bracket_basis(j, i);
    for (int k = 0; k < 78; ++k) CHECK(forward[k] == -backward[k]);
    if (i == j) CHECK(all_zero(forward));
  }
  CHECK(all_zero(alg.bracket_basis(5, 5)));
  CHECK_THROWS_AS(static_cast<void>(alg.bracket_table(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(alg.bracket_table(-1, 5)), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(alg.bracket_table(5, 78)), std::invalid_argument);
}

TEST_CASE("the sparse table reproduces the matrix commutators it came from") {
  const Algebra& alg = Algebra::get();
  RatRng rng(402);
  for (int trial = 0; trial < 10; ++trial) {
    const int i = static_cast<int>(rng.next_index(78));
    const int j = static_cast<int>(rng.next_index(78));
    const TangentMap direct =
        matrix_commutator(alg.basis()[i].map, alg.basis()[j].map);
    CHECK(alg.realize(alg.bracket_basis(i, j)) == direct);
  }
}

TEST_CASE("the boost triple (tz, xz, tx) closes as recorded coordinates") {
  const Algebra& alg = Algebra::get();
  const int tz = alg.index_of("B1_tz");
  const int xz = alg.index_of("R1_xz");
  const int tx = alg.index_of("B1_tx");
  CHECK(alg.bracket_basis(tz, xz) == unit_vector(tx));
  CHECK(alg.bracket_basis(tz, tx) == unit_vector(xz));
  CHECK(alg.bracket_basis(xz, tx) == unit_vector(tz));
}

TEST_CASE("brackets respect the rotation/boost grading") {
  const Algebra& alg = Algebra::get();
  RatRng rng(403);
  const int split = Algebra::kBoostStart;
  int rot_rot = 0, rot_boost = 0, boost_boost = 0;
  while (rot_rot < 20 || rot_boost < 20 || boost_boost < 20) {
    const int i = static_cast<int>(rng.next_index(78));
    const int j = static_cast<int>(rng.next_index(78));
    if (i == j) continue;
    const RatVector b = alg.bracket_basis(i, j);
    if (i < split && j < split) {
      // Rotation with rotation stays among rotations.
      CHECK((support_max(b) < split || support_max(b) == -1));
      ++rot_rot;
    } else if (i >= split && j >= split) {
      // Boost with boost lands back among rotations.
      CHECK((support_max(b) < split || support_max(b) == -1));
      ++boost_boost;
    } else {
      // Mixed pairs land among boosts.
      CHECK((support_min(b) >= split || support_min(b) == -1));
      ++rot_boost;
    }
  }
}

TEST_CASE("sampled triples satisfy the Jacobi identity") {
  const Algebra& alg = Algebra::get();
  CHECK(alg.jacobi_holds(0, 1, 2));
  CHECK(alg.jacobi_holds(76, 77, 28));
  CHECK(alg.jacobi_holds(6, 20, 52));
  RatRng rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    const int i = static_cast<int>(rng.next_index(78));
    const int j = static_cast<int>(rng.next_index(78));
    const int k = static_cast<int>(rng.next_index(78));
    CHECK(alg.jacobi_holds(i, j, k));
  }
}

TEST_CASE("bracket_vector is the bilinear extension of the table") {
  const Algebra& alg = Algebra::get();
  RatRng rng(405);
  for (int trial = 0; trial < 5; ++trial) {
    const RatVector x = random_coords(rng);
    const RatVector y = random_coords(rng);
    const TangentMap direct = matrix_commutator(alg.realize(x), alg.realize(y));
    CHECK(alg.realize(alg.bracket_vector(x, y)) == direct);
    CHECK(all_zero(alg.bracket_vector(x, x)));
  }
  CHECK_THROWS_AS(
      static_cast<void>(alg.bracket_vector(RatVector(5, Rational(0)),
                                           RatVector(78, Rational(0)))),
      std::invalid_argument);
}

TEST_CASE("the Killing form is diagonal with signature (52 negative, 26 positive)") {
  const Algebra& alg = Algebra::get();
  const RatMatrix& k = alg.killing_matrix();
  REQUIRE(static_cast<int>(k.size()) == 78);
  for (int i = 0; i < 78; ++i) {
    for (int j = 0; j < 78; ++j) {
      if (i != j) CHECK(is_zero(k[i][j]));
    }
  }
  // Rotations pair negatively with themselves, boosts positively.
  for (int i = 0; i < 78; ++i) {
    if (i < Algebra::kBoostStart) {
      CHECK(k[i][i] < 0);
    } else {
      CHECK(k[i][i] > 0);
    }
  }
  const Inertia inertia = symmetric_inertia(k);
  CHECK(inertia.negative == 52);
  CHECK(inertia.positive == 26);
  CHECK(inertia.zero == 0);
}

TEST_CASE("the Killing form is invariant under the adjoint action") {
  const Algebra& alg = Algebra::get();
  RatRng rng(406);
  for (int trial = 0; trial < 20; ++trial) {
    const RatVector x = random_coords(rng);
    const RatVector y = random_coords(rng);
    const RatVector z = random_coords(rng);
    const Rational lhs = alg.killing(alg.bracket_vector(x, y), z);
    const Rational rhs = alg.killing(y, alg.bracket_vector(x, z));
    CHECK(lhs == -rhs);
  }
}

TEST_CASE("the chosen Cartan subalgebra commutes and has a six-dimensional centralizer") {
  const Algebra& alg = Algebra::get();
  const auto& cartan = alg.cartan_indices();
  REQUIRE(static_cast<int>(cartan.size()) == 6);
  for (const int a : cartan) {
    for (const int b : cartan) {
      CHECK(all_zero(alg.bracket_basis(a, b)));
    }
  }
  CHECK(alg.cartan_centralizer_dimension() == 6);

  // Restricted to the Cartan subalgebra the Killing form keeps two positive
  // directions (the two boosts) and four negative ones.
  int positive = 0, negative = 0;
  for (const int a : cartan) {
    const Rational& d = alg.killing_matrix()[a][a];
    if (d > 0) ++positive;
    if (d < 0) ++negative;
  }
  CHECK(positive == 2);
  CHECK(negative == 4);
}

TEST_CASE("express and realize are mutually inverse on coordinates") {
  const Algebra& alg = Algebra::get();
  RatRng rng(407);
  for (int trial = 0; trial < 5; ++trial) {
    const RatVector x = random_coords(rng);
    const auto back = alg.express_in_basis(alg.realize(x));
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }
  // A map outside the algebra has no coordinates: use a single matrix unit
  // that no antisymmetry-compatible tangent produces alone.
  TangentMap off;
  off.at(0, 1) = Rational(1);
  CHECK_FALSE(alg.express_in_basis(off).has_value());
}
