#include <benchmark/benchmark.h>

#include <random>

#include "wittlab/lambda.hpp"
#include "wittlab/necklace.hpp"
#include "wittlab/qsymm.hpp"
#include "wittlab/symm.hpp"
#include "wittlab/universal.hpp"
#include "wittlab/witt.hpp"

using namespace wittlab;

namespace {

WittVec random_vec(std::mt19937_64& rng, long N) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Int> xs(static_cast<std::size_t>(N));
  for (auto& v : xs) v = d(rng);
  return WittVec::from_ints(RingSpec::integers(), Nest::range(N), xs);
}

}  // namespace

static void BM_PolyPower(benchmark::State& state) {
  Poly s;
  for (std::uint32_t i = 1; i <= 4; ++i) s += Poly::var(var::make('X', i));
  for (auto _ : state) benchmark::DoNotOptimize(s.pow(static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_PolyPower)->Arg(4)->Arg(8)->Arg(12);

// Solves the ghost recursion from scratch, bypassing both caches.
static void BM_StructurePolysBig(benchmark::State& state) {
  auto kind = StructKind::parse(state.range(1) ? "mul" : "add");
  auto nest = Nest::range(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_structure_polys(kind, Flavor::big(), nest));
}
BENCHMARK(BM_StructurePolysBig)->ArgsProduct({{4, 6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_StructurePolysPadic(benchmark::State& state) {
  auto kind = StructKind::parse("mul");
  auto nest = Nest::range(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_structure_polys(kind, Flavor::p_adic(2), nest));
}
BENCHMARK(BM_StructurePolysPadic)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_WittMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  long N = state.range(0);
  auto a = random_vec(rng, N), b = random_vec(rng, N);
  witt_mul(a, b);  // warm the family cache
  for (auto _ : state) benchmark::DoNotOptimize(witt_mul(a, b));
}
BENCHMARK(BM_WittMul)->Arg(4)->Arg(6)->Arg(8);

static void BM_GhostRoundTrip(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto a = random_vec(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(from_ghost(ghost(a)));
}
BENCHMARK(BM_GhostRoundTrip)->Arg(16)->Arg(64);

static void BM_SeriesWittProduct(benchmark::State& state) {
  auto ZZ = RingSpec::integers();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Int> ca(static_cast<std::size_t>(state.range(0))), cb(ca.size());
  for (auto& v : ca) v = d(rng);
  for (auto& v : cb) v = d(rng);
  auto a = Series::from_ints(ZZ, ca), b = Series::from_ints(ZZ, cb);
  for (auto _ : state) benchmark::DoNotOptimize(witt_product(a, b));
}
BENCHMARK(BM_SeriesWittProduct)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_SchurToMonomial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (const auto& l : part::of_weight(n)) benchmark::DoNotOptimize(convert(schur(l), Basis::M));
}
BENCHMARK(BM_SchurToMonomial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_Plethysm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto f = SymFn::of(Basis::H, {n}), g = SymFn::of(Basis::H, {2});
  for (auto _ : state) benchmark::DoNotOptimize(plethysm(f, g, Basis::S));
}
BENCHMARK(BM_Plethysm)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_OverlappingShuffle(benchmark::State& state) {
  auto a = comp::make(std::vector<int>(static_cast<std::size_t>(state.range(0)), 1));
  auto b = comp::make({2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(overlapping_shuffle(a, b));
}
BENCHMARK(BM_OverlappingShuffle)->DenseRange(2, 5);

static void BM_NecklaceNumber(benchmark::State& state) {
  Int alpha = 1000003;
  for (auto _ : state) benchmark::DoNotOptimize(necklace_number(alpha, state.range(0)));
}
BENCHMARK(BM_NecklaceNumber)->Arg(12)->Arg(360)->Arg(5040);

static void BM_BurnsideProduct(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> d(-3, 3);
  long N = state.range(0);
  CyclicSet x = CyclicSet::zero(N), y = CyclicSet::zero(N);
  for (auto& v : x.b) v = d(rng);
  for (auto& v : y.b) v = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(burnside_product(x, y));
}
BENCHMARK(BM_BurnsideProduct)->Arg(12)->Arg(60);
BENCHMARK_MAIN();
