#include "coxcanon/multisection.hpp"
#include "coxcanon/normal_form.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace coxcanon;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long max_entry) {
  std::uniform_int_distribution<long> entry(-max_entry, max_entry);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = entry(rng);
  return m;
}

void BM_snf(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m = random_matrix(rng, n, 50);
  for (auto _ : state) {
    benchmark::DoNotOptimize(snf(m));
  }
}
BENCHMARK(BM_snf)->Arg(3)->Arg(5)->Arg(8);

void BM_hnf(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m = random_matrix(rng, n, 50);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hnf(m));
  }
}
BENCHMARK(BM_hnf)->Arg(3)->Arg(5)->Arg(8);

void BM_enumerate_simplex(benchmark::State& state) {
  const long d = state.range(0);
  Fan fan = projective_space_fan(2);
  ToricDivisor divisor;
  divisor.coefficients = {Rational(0), Rational(0), Rational(d)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(section_dimension(fan, divisor));
  }
}
BENCHMARK(BM_enumerate_simplex)->Arg(4)->Arg(16)->Arg(64);

void BM_canonical_table(benchmark::State& state) {
  const long radius = state.range(0);
  auto backend = std::make_shared<ToricBackend>(product_of_p1_fan(2));
  Divisor a1(4, Rational(0)), a2(4, Rational(0));
  a1[0] = 1;
  a2[2] = 1;
  MultiSectionRing cox = MultiSectionRing::create(backend, {a1, a2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_table(cox, symmetric_box(2, radius)));
  }
}
BENCHMARK(BM_canonical_table)->Arg(3)->Arg(6);

void BM_blowup_sections(benchmark::State& state) {
  const long d = state.range(0);
  PointConfig config;
  config.n = 2;
  config.points = {RatVec{1, 0, 0}, RatVec{0, 1, 0}, RatVec{0, 0, 1}, RatVec{1, 1, 1}};
  BlowupDivisor divisor{Integer(d), IntVec{2, 2, 2, 2}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(section_dimension_blowup(config, divisor));
  }
}
BENCHMARK(BM_blowup_sections)->Arg(6)->Arg(10)->Arg(14);

void BM_restriction_check(benchmark::State& state) {
  auto backend = std::make_shared<ToricBackend>(product_of_p1_fan(2));
  Divisor a1(4, Rational(0)), a2(4, Rational(0));
  a1[0] = 1;
  a2[2] = 1;
  MultiSectionRing cox = MultiSectionRing::create(backend, {a1, a2});
  std::vector<IntVec> sublattice = {IntVec{1, 1}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(restriction_check(cox, sublattice, symmetric_box(1, 5)));
  }
}
BENCHMARK(BM_restriction_check);

void BM_freeness(benchmark::State& state) {
  auto backend = std::make_shared<ToricBackend>(del_pezzo6_fan());
  MultiSectionRing cox = cox_ring(backend);
  for (auto _ : state) {
    benchmark::DoNotOptimize(freeness_test(cox));
  }
}
BENCHMARK(BM_freeness);

}  // namespace

BENCHMARK_MAIN();
