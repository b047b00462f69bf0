// Unit tests for the 27-dimensional Hermitian-matrix algebra: coordinates,
// the cubic form and its trace-power oracle, the symmetrized product, the
// cyclic type rotation, and per-type block extraction.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octoe6/jordan.hpp"
#include "octoe6/rng.hpp"

#include <array>
#include <stdexcept>

using namespace octoe6;

namespace {

using J = JordanElement<Rational>;
using OctQ = Octonion<Rational>;

J random_element(RatRng& rng) {
  Coord27<Rational> v;
  for (auto& s : v) s = rng.next();
  return from_coords(v);
}

/// Independent determinant oracle: brute-force 3x3 entrywise expansion via
/// real traces of matrix powers, (t^3 - 3 t tr(M^2) + 2 Re tr(M^2 M)) / 6.
Rational det_by_traces(const J& X) {
  const OctMatrix3<Rational> M = to_matrix(X);
  const OctMatrix3<Rational> M2 = M * M;
  const Rational t = real_trace(M);
  const Rational t2 = real_trace(M2);
  const Rational t3 = real_trace(M2 * M);
  return (t * t * t - 3 * t * t2 + 2 * t3) / 6;
}

bool blocks_equal(const TypeBlocks<Rational>& a, const TypeBlocks<Rational>& b) {
  return a.va == b.va && a.vb == b.vb && a.off == b.off && a.theta1 == b.theta1 &&
         a.theta2 == b.theta2 && a.corner == b.corner;
}

}  // namespace

TEST_CASE("coordinates round-trip and basis elements sit where expected") {
  RatRng rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const J X = random_element(rng);
    CHECK(from_coords(coords(X)) == X);
  }
  for (int k = 0; k < kJordanDim; ++k) {
    const auto v = coords(basis_element<Rational>(k));
    for (int m = 0; m < kJordanDim; ++m) CHECK(v[m] == rat(m == k ? 1 : 0));
  }
  CHECK_THROWS_AS((void)basis_element<Rational>(27), std::out_of_range);
  CHECK(coords(J::identity())[0] == rat(1));
  CHECK(coords(J::identity())[1] == rat(1));
  CHECK(coords(J::identity())[2] == rat(1));
}

TEST_CASE("matrix form is Hermitian and round-trips") {
  RatRng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const J X = random_element(rng);
    const auto M = to_matrix(X);
    CHECK(is_hermitian(M));
    CHECK(from_matrix(M) == X);
  }
  auto bad = OctMatrix3<Rational>::identity();
  bad.m[0][1] = OctQ::unit(1);  // no matching conjugate opposite
  CHECK_THROWS_AS((void)from_matrix(bad), std::invalid_argument);
}

TEST_CASE("determinant: pinned examples") {
  CHECK(freudenthal_det(J::identity()) == rat(1));

  J diag;
  diag.d1 = rat(2);
  diag.d2 = rat(-3);
  diag.d3 = rat(5, 7);
  CHECK(freudenthal_det(diag) == rat(2) * rat(-3) * rat(5, 7));

  // All-diagonal zero, x1 = i, x2 = j, x3 = -k: the cross term alone gives 2.
  J X;
  X.x1 = OctQ::unit(1);
  X.x2 = OctQ::unit(2);
  X.x3 = -OctQ::unit(3);
  CHECK(freudenthal_det(X) == rat(2));
  CHECK(det_by_traces(X) == rat(2));
}

TEST_CASE("determinant equals the entrywise trace-power expansion") {
  CHECK(det_by_traces(J::identity()) == rat(1));
  RatRng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const J X = random_element(rng);
    CHECK(freudenthal_det(X) == det_by_traces(X));
  }
}

TEST_CASE("trace and symmetrized product") {
  CHECK(trace(J::identity()) == rat(3));

  RatRng rng(4);
  const J I = J::identity();
  for (int trial = 0; trial < 10; ++trial) {
    const J X = random_element(rng);
    const J Y = random_element(rng);
    CHECK(jordan_product(X, I) == X);
    CHECK(jordan_product(X, Y) == jordan_product(Y, X));
    CHECK(trace(X) == X.d1 + X.d2 + X.d3);
  }

  // X with only x1 = i squares to the diagonal pattern (0, 1, 1).
  J X;
  X.x1 = OctQ::unit(1);
  J expected;
  expected.d2 = rat(1);
  expected.d3 = rat(1);
  CHECK(jordan_product(X, X) == expected);
}

TEST_CASE("the product satisfies the Jordan identity") {
  RatRng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const J X = random_element(rng);
    const J Y = random_element(rng);
    const J X2 = jordan_product(X, X);
    CHECK(jordan_product(jordan_product(X, Y), X2) ==
          jordan_product(X, jordan_product(Y, X2)));
  }
}

TEST_CASE("type rotation equals literal conjugation by the cyclic matrix") {
  OctMatrix3<Rational> T;  // rows: (0,0,1), (1,0,0), (0,1,0)
  T.m[0][2] = OctQ::unit(0);
  T.m[1][0] = OctQ::unit(0);
  T.m[2][1] = OctQ::unit(0);

  RatRng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const J X = random_element(rng);
    const auto conjugated = (T * to_matrix(X)) * dagger(T);
    CHECK(from_matrix(conjugated) == tshift(X));
    CHECK(tunshift(tshift(X)) == X);
    CHECK(tshift(tshift(tshift(X))) == X);
    CHECK(freudenthal_det(tshift(X)) == freudenthal_det(X));
    CHECK(trace(tshift(X)) == trace(X));
  }
}

TEST_CASE("type blocks of the identity") {
  for (int type = 1; type <= 3; ++type) {
    const auto b = type_blocks(J::identity(), type);
    CHECK(b.va == rat(1));
    CHECK(b.vb == rat(1));
    CHECK(is_zero(b.off));
    CHECK(is_zero(b.theta1));
    CHECK(is_zero(b.theta2));
    CHECK(b.corner == rat(1));
  }
  CHECK_THROWS_AS((void)type_blocks(J::identity(), 0), std::out_of_range);
  CHECK_THROWS_AS((void)type_blocks(J::identity(), 4), std::out_of_range);
}

TEST_CASE("block coordinate indices partition the 27 coordinates") {
  for (int type = 1; type <= 3; ++type) {
    std::array<int, kJordanDim> hit{};
    for (int idx : vector_block_indices(type)) hit[idx]++;
    for (int idx : spinor_indices(type)) hit[idx]++;
    hit[corner_index(type)]++;
    for (int k = 0; k < kJordanDim; ++k) CHECK(hit[k] == 1);
  }
  CHECK_THROWS_AS((void)vector_block_indices(0), std::out_of_range);
  CHECK_THROWS_AS((void)spinor_indices(4), std::out_of_range);
  CHECK_THROWS_AS((void)corner_index(-1), std::out_of_range);
}

TEST_CASE("block values agree with the flat coordinates") {
  RatRng rng(7);
  const J X = random_element(rng);
  const auto v = coords(X);
  for (int type = 1; type <= 3; ++type) {
    const auto b = type_blocks(X, type);
    const auto vec = vector_block_indices(type);
    CHECK(b.va == v[vec[0]]);
    CHECK(b.vb == v[vec[1]]);
    for (int u = 0; u < kNumUnits; ++u) CHECK(b.off.c[u] == v[vec[2 + u]]);
    CHECK(b.corner == v[corner_index(type)]);
  }
}

TEST_CASE("block extraction commutes with the cyclic relabeling") {
  RatRng rng(8);
  const J X = random_element(rng);
  for (int type = 1; type <= 3; ++type) {
    const int prev = type == 1 ? 3 : type - 1;
    CHECK(blocks_equal(type_blocks(tshift(X), type), type_blocks(X, prev)));
  }
}

TEST_CASE("a pure vector element factors the cubic form through the 2x2 block") {
  RatRng rng(9);
  for (int type = 1; type <= 3; ++type) {
    auto v = coords(random_element(rng));
    for (int idx : spinor_indices(type)) v[idx] = rat(0);
    const J X = from_coords(v);
    const auto b = type_blocks(X, type);
    CHECK(freudenthal_det(X) == b.corner * (b.va * b.vb - norm2(b.off)));
    // corner zero as well: the cubic form vanishes identically
    auto w = v;
    w[corner_index(type)] = rat(0);
    CHECK(freudenthal_det(from_coords(w)) == rat(0));
  }
}
