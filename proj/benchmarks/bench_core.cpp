// Microbenchmarks for the hot paths: octonion products, jet-based tangent
// extraction, bracket evaluation through the structure-constant table, and
// subalgebra closure. The first benchmark touching the Algebra singleton
// pays its one-time construction outside the timed loop.

#include <benchmark/benchmark.h>

#include "octoe6/rng.hpp"
#include "octoe6/structure.hpp"
#include "octoe6/subalgebras.hpp"
#include "octoe6/tangent.hpp"
#include "octoe6/transforms.hpp"

namespace {

using namespace octoe6;

Octonion<Rational> random_octonion(RatRng& rng) {
  Octonion<Rational> x;
  for (int u = 0; u < kNumUnits; ++u) x.c[u] = rng.next();
  return x;
}

void BM_OctonionMultiplyExact(benchmark::State& state) {
  RatRng rng(1);
  const Octonion<Rational> x = random_octonion(rng);
  const Octonion<Rational> y = random_octonion(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_OctonionMultiplyExact);

void BM_OctonionMultiplyFloat(benchmark::State& state) {
  Octonion<double> x;
  Octonion<double> y;
  for (int u = 0; u < kNumUnits; ++u) {
    x.c[u] = 0.25 * (u + 1);
    y.c[u] = 1.0 / (u + 2);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_OctonionMultiplyFloat);

void BM_FreudenthalDetExact(benchmark::State& state) {
  RatRng rng(2);
  Coord27<Rational> v;
  for (int k = 0; k < kJordanDim; ++k) v[k] = rng.next();
  const JordanElement<Rational> X = from_coords(v);
  for (auto _ : state) {
    benchmark::DoNotOptimize(freudenthal_det(X));
  }
}
BENCHMARK(BM_FreudenthalDetExact);

void BM_ApplyFloat(benchmark::State& state) {
  const GroupAction action = build_generator({GenKind::A, 1, 1, 0});
  RatRng rng(3);
  Coord27<double> v;
  for (int k = 0; k < kJordanDim; ++k) v[k] = rng.next_double(-1.0, 1.0);
  const JordanElement<double> X = from_coords(v);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply(action, 0.7, X));
  }
}
BENCHMARK(BM_ApplyFloat);

void BM_TangentExtraction(benchmark::State& state) {
  const GroupAction action = build_generator({GenKind::S, 1, 1, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(tangent_of(action));
  }
}
BENCHMARK(BM_TangentExtraction);

void BM_BracketVectorDense(benchmark::State& state) {
  const Algebra& alg = Algebra::get();
  RatRng rng(4);
  RatVector x(Algebra::kDim);
  RatVector y(Algebra::kDim);
  for (int k = 0; k < Algebra::kDim; ++k) {
    x[k] = rng.next();
    y[k] = rng.next();
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(alg.bracket_vector(x, y));
  }
}
BENCHMARK(BM_BracketVectorDense);

void BM_ExpressInBasis(benchmark::State& state) {
  const Algebra& alg = Algebra::get();
  RatRng rng(5);
  RatVector coords(Algebra::kDim);
  for (int k = 0; k < Algebra::kDim; ++k) coords[k] = rng.next();
  const TangentMap L = alg.realize(coords);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alg.express_in_basis(L));
  }
}
BENCHMARK(BM_ExpressInBasis);

void BM_ClosureCompactDerivations(benchmark::State& state) {
  const Algebra& alg = Algebra::get();
  // The 14 antisymmetric/trace-balanced units close onto the 14-dim
  // derivation algebra of the octonions.
  std::vector<int> seeds;
  for (int k = 0; k < 14; ++k) seeds.push_back(k);
  for (auto _ : state) {
    Subspace span;
    for (const int k : seeds) {
      RatVector v(Algebra::kDim, Rational(0));
      v[k] = Rational(1);
      span.insert(v);
    }
    benchmark::DoNotOptimize(close(alg, std::move(span)).dim());
  }
}
BENCHMARK(BM_ClosureCompactDerivations);

void BM_ClosureBoostPair(benchmark::State& state) {
  const Algebra& alg = Algebra::get();
  for (auto _ : state) {
    Subspace span;
    RatVector v(Algebra::kDim, Rational(0));
    v[Algebra::kBoostStart] = Rational(1);  // B1_tx
    span.insert(v);
    RatVector w(Algebra::kDim, Rational(0));
    w[76] = Rational(1);  // B1_tz
    span.insert(w);
    benchmark::DoNotOptimize(close(alg, std::move(span)).dim());
  }
}
BENCHMARK(BM_ClosureBoostPair);

}  // namespace

BENCHMARK_MAIN();
