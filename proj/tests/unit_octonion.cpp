// Unit tests for the octonion layer: the derived multiplication table, its
// consistency properties, and the algebraic identities of the product.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octoe6/octonion.hpp"
#include "octoe6/rng.hpp"

#include <stdexcept>

using namespace octoe6;

namespace {

using OctQ = Octonion<Rational>;

OctQ random_octonion(RatRng& rng) {
  OctQ o;
  for (int u = 0; u < kNumUnits; ++u) o.c[u] = rng.next();
  return o;
}

OctQ e(int u) { return OctQ::unit(u); }

}  // namespace

TEST_CASE("unit names map to indices and back") {
  for (int u = 0; u < kNumUnits; ++u) CHECK(unit_index(kUnitNames[u]) == u);
  CHECK(unit_index("kl") == 4);
  CHECK(unit_index("l") == 7);
  CHECK_THROWS_AS((void)unit_index("x"), std::invalid_argument);
  CHECK_THROWS_AS((void)unit_index("L"), std::invalid_argument);
}

TEST_CASE("defining basis products") {
  // i*j = k, (il)*i = l, k*l = kl, and the identity row/column.
  CHECK(e(1) * e(2) == e(3));
  CHECK(e(6) * e(1) == e(7));
  CHECK(e(3) * e(7) == e(4));
  for (int u = 0; u < kNumUnits; ++u) {
    CHECK(e(0) * e(u) == e(u));
    CHECK(e(u) * e(0) == e(u));
  }
}

TEST_CASE("table is a signed permutation with the right symmetries") {
  for (int p = 0; p < kNumUnits; ++p) {
    for (int q = 0; q < kNumUnits; ++q) {
      const UnitProduct t = unit_mul(p, q);
      CHECK((t.sign == 1 || t.sign == -1));
      CHECK(t.unit >= 0);
      CHECK(t.unit < kNumUnits);
      if (p != q && p > 0 && q > 0) {
        // distinct imaginary units anticommute onto the same unit
        const UnitProduct s = unit_mul(q, p);
        CHECK(s.unit == t.unit);
        CHECK(s.sign == -t.sign);
      }
    }
    if (p > 0) {
      CHECK(unit_mul(p, p).sign == -1);
      CHECK(unit_mul(p, p).unit == 0);
    }
  }
  // an imaginary row over imaginary columns hits 1 once (at q = p) and each
  // imaginary unit other than p exactly once
  for (int p = 1; p < kNumUnits; ++p) {
    std::array<int, kNumUnits> seen{};
    for (int q = 1; q < kNumUnits; ++q) seen[unit_mul(p, q).unit]++;
    for (int u = 0; u < kNumUnits; ++u) CHECK(seen[u] == (u == p ? 0 : 1));
  }
}

TEST_CASE("runtime re-derivation matches the compile-time table") {
  const auto rebuilt = detail::build_unit_table();
  for (int p = 0; p < kNumUnits; ++p)
    for (int q = 0; q < kNumUnits; ++q) {
      CHECK(rebuilt[p][q].sign == kUnitTable[p][q].sign);
      CHECK(rebuilt[p][q].unit == kUnitTable[p][q].unit);
    }
}

TEST_CASE("quaternionic triples close cyclically and are the expected seven") {
  const auto triples = quaternionic_triples();
  const std::array<std::array<int, 3>, 7> expected = {{
      {1, 2, 3},  // i j k
      {1, 4, 5},  // i kl jl
      {1, 6, 7},  // i il l
      {2, 4, 6},  // j kl il
      {2, 5, 7},  // j jl l
      {3, 4, 7},  // k kl l
      {3, 5, 6},  // k jl il
  }};
  REQUIRE(triples.size() == expected.size());
  for (std::size_t t = 0; t < triples.size(); ++t) CHECK(triples[t] == expected[t]);
}

TEST_CASE("conjugation, real part, norm") {
  CHECK(conj(e(1)) == -e(1));
  CHECK(conj(e(0)) == e(0));
  CHECK(norm2(e(1) + e(7)) == rat(2));
  CHECK(real_part(e(6) * e(1)) == rat(0));  // (il)*i = l is purely imaginary

  RatRng rng(20240817);
  for (int trial = 0; trial < 25; ++trial) {
    const OctQ a = random_octonion(rng);
    // conj(a) = 2 Re(a) - a
    CHECK(conj(a) == rat(2) * real_part(a) * e(0) - a);
    // norm2 = real part of a * conj(a), and the product is purely real
    const OctQ aa = a * conj(a);
    CHECK(real_part(aa) == norm2(a));
    CHECK(is_zero(imag_part(aa)));
    CHECK(imag_part(a) + real_part(a) * e(0) == a);
  }
}

TEST_CASE("alternativity on all basis pairs and random octonions") {
  for (int p = 0; p < kNumUnits; ++p)
    for (int q = 0; q < kNumUnits; ++q) {
      CHECK(is_zero(associator(e(p), e(p), e(q))));
      CHECK(is_zero(associator(e(p), e(q), e(q))));
    }
  RatRng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const OctQ a = random_octonion(rng);
    const OctQ b = random_octonion(rng);
    CHECK(is_zero(associator(a, a, b)));
    CHECK(is_zero(associator(a, b, b)));
    CHECK(is_zero(associator(a, b, a)));  // flexible law
  }
}

TEST_CASE("the algebra is nonassociative beyond quaternionic triples") {
  CHECK(is_zero(associator(e(1), e(2), e(3))));  // i,j,k associate
  CHECK(!is_zero(associator(e(1), e(2), e(7))));  // i,j,l do not
}

TEST_CASE("Moufang identity on random octonions") {
  RatRng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const OctQ x = random_octonion(rng);
    const OctQ y = random_octonion(rng);
    const OctQ z = random_octonion(rng);
    CHECK(((z * x) * z) * y == z * (x * (z * y)));
  }
}

TEST_CASE("norm is multiplicative") {
  RatRng rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    const OctQ a = random_octonion(rng);
    const OctQ b = random_octonion(rng);
    CHECK(norm2(a * b) == norm2(a) * norm2(b));
  }
}

TEST_CASE("preferred subalgebra spans") {
  CHECK(in_span(e(3) + e(7), UnitSpan::Quaternion));  // k + l
  CHECK(!in_span(e(1), UnitSpan::Quaternion));        // i
  CHECK(in_span(e(0), UnitSpan::Real));
  CHECK(in_span(e(7), UnitSpan::Complex));
  CHECK(!in_span(e(3), UnitSpan::Complex));

  // H = <1,k,kl,l> and C = <1,l> are closed under multiplication.
  const std::array<int, 4> h_units = {0, 3, 4, 7};
  for (int p : h_units)
    for (int q : h_units) CHECK(in_span(e(p) * e(q), UnitSpan::Quaternion));
  const std::array<int, 2> c_units = {0, 7};
  for (int p : c_units)
    for (int q : c_units) CHECK(in_span(e(p) * e(q), UnitSpan::Complex));
}

TEST_CASE("bilinearity with rational coefficients") {
  const OctQ a = rat(2) * e(1);
  const OctQ b = rat(3) * e(2);
  CHECK(a * b == rat(6) * e(3));
  RatRng rng(11);
  const OctQ x = random_octonion(rng);
  const OctQ y = random_octonion(rng);
  const OctQ z = random_octonion(rng);
  CHECK(x * (y + z) == x * y + x * z);
  CHECK((y + z) * x == y * x + z * x);
}
