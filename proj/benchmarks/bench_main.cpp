#include <benchmark/benchmark.h>

#include <random>

#include "duplex/bohmstefan.hpp"
#include "duplex/catalog.hpp"
#include "duplex/hochschild.hpp"
#include "duplex/laxmod.hpp"
#include "duplex/nerve.hpp"

using namespace duplex;

namespace {

DuplicialOperator random_op(std::mt19937_64& rng, int n, int m) {
  auto all = all_operators(n, m);
  return {static_cast<int>(rng() % (2 * m + 3)), all[rng() % all.size()]};
}

void BM_ComposeDuplicial(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(0);
  std::vector<std::pair<DuplicialOperator, DuplicialOperator>> pairs;
  for (int i = 0; i < 256; ++i) pairs.push_back({random_op(rng, d, d), random_op(rng, d, d)});
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ & 255];
    benchmark::DoNotOptimize(compose_duplicial(a, b));
  }
}
BENCHMARK(BM_ComposeDuplicial)->DenseRange(2, 8, 3);

void BM_EnumerateComonads(benchmark::State& state) {
  auto cp = share(catalog::cyclic_group(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    Budget budget;
    benchmark::DoNotOptimize(enumerate_comonads(cp, budget));
  }
}
BENCHMARK(BM_EnumerateComonads)->Arg(2)->Arg(3)->Arg(4);

void BM_BohmStefanOperator(benchmark::State& state) {
  auto cp = share(catalog::chain(3));
  auto g = identity_comonad(cp);
  auto law = identity_law(g, g);
  LeftCoalgebra l{law, identity_functor(cp), identity_nat(identity_functor(cp))};
  RightCoalgebra r{law, 2, cp->id(2)};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bs_operator(l, r, n));
}
BENCHMARK(BM_BohmStefanOperator)->DenseRange(2, 6, 2);

void BM_ClassifyNerve(benchmark::State& state) {
  auto cp = share(catalog::s3());
  const int n = static_cast<int>(state.range(0));
  auto F = nerve_family(nerve(cp, n), canonical_groupoid(*cp));
  for (auto _ : state) benchmark::DoNotOptimize(classify_duplicial(F));
}
BENCHMARK(BM_ClassifyNerve)->Arg(2)->Arg(3)->Arg(4);

void BM_HochschildM2F2(benchmark::State& state) {
  auto ring = std::make_shared<const FinRing>(matrix_ring_f2());
  auto x = regular_bimodule(ring);
  for (auto _ : state) {
    auto d = prepare(x);
    benchmark::DoNotOptimize(zeroth_homology(d).normal_form());
    benchmark::DoNotOptimize(zeroth_cohomology(d));
  }
}
BENCHMARK(BM_HochschildM2F2);

void BM_LaxCentreS3(benchmark::State& state) {
  auto reg = regular_bimodule(discrete_monoidal(catalog::s3_table()));
  for (auto _ : state) {
    Budget budget;
    benchmark::DoNotOptimize(lax_h0(reg, budget));
  }
}
BENCHMARK(BM_LaxCentreS3);

}  // namespace
BENCHMARK_MAIN();
