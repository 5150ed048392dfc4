// Microbenchmarks for the hot paths: class construction, staircase
// recursion, Cremona reduction, certificates, and envelope assembly. All
// inputs are fixed so runs are comparable.

#include "staircase/capacity.hpp"
#include "staircase/cremona.hpp"
#include "staircase/obstruct.hpp"
#include "staircase/suite.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace staircase;

void bm_from_pq(benchmark::State& state) {
  for (auto _ : state) {
    for (long n = 0; n <= 20; ++n) {
      benchmark::DoNotOptimize(from_pq(2 * n + 6, 1));
    }
  }
}
BENCHMARK(bm_from_pq);

void bm_build_staircase(benchmark::State& state) {
  const Family fam = make_family(group_S(2), Branch::U);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_staircase(fam, 3, Side::lower,
                        static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(bm_build_staircase)->Arg(8)->Arg(32);

void bm_limits(benchmark::State& state) {
  const Family fam = make_family(group_S(2), Branch::U);
  const PreStaircase sc = build_staircase(fam, 3, Side::lower, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(limits(sc));
  }
}
BENCHMARK(bm_limits);

void bm_reduce(benchmark::State& state) {
  const ClassVector v = to_vector(sharp(group_S(2), from_pq(12, 1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce(v));
  }
}
BENCHMARK(bm_reduce);

void bm_shift_certificate(benchmark::State& state) {
  const QuasiPerfect c = from_pq(29, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_shift_equivalence(c));
  }
}
BENCHMARK(bm_shift_certificate);

void bm_acc(benchmark::State& state) {
  for (auto _ : state) {
    for (long den = 3; den <= 40; ++den) {
      benchmark::DoNotOptimize(acc(Rational(1, den)));
    }
  }
}
BENCHMARK(bm_acc);

void bm_envelope(benchmark::State& state) {
  std::vector<QuasiPerfect> classes;
  for (unsigned long s = 0; s < 3; ++s) {
    for (const QuasiPerfect& c : one_third_strand(s, 4)) {
      classes.push_back(c);
    }
  }
  const QuadExt b{Rational(1, 4)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(envelope(classes, b, QuadExt(1), QuadExt(25)));
  }
}
BENCHMARK(bm_envelope);

void bm_is_center_blocking(benchmark::State& state) {
  const QuasiPerfect c = sharp(group_S(3), from_pq(10, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_center_blocking(c));
  }
}
BENCHMARK(bm_is_center_blocking);

}  // namespace

BENCHMARK_MAIN();
