// Serial reference vs OpenMP kernels on the hot paths: elimination,
// matrix products and the exhaustive cocycle-identity scan.

#include <random>

#include <benchmark/benchmark.h>

#include "regdec/field.hpp"
#include "regdec/group.hpp"
#include "regdec/kernels.hpp"

namespace {

using regdec::Field;
namespace k = regdec::kernels;

std::vector<Field::Code> random_matrix(const Field& f, std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<std::uint64_t> pick(0, f.size() - 1);
  std::vector<Field::Code> a(n * n);
  for (auto& x : a) x = static_cast<Field::Code>(pick(rng));
  return a;
}

const Field& gf25() {
  static const auto f = Field::make(5, 2);
  return *f;
}

template <auto Det>
void BM_Determinant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(gf25(), n);
  for (auto _ : state) benchmark::DoNotOptimize(Det(gf25(), a, n));
}

template <auto Mul>
void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(gf25(), n), b = random_matrix(gf25(), n);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(gf25(), a, b, n));
}

template <auto Scan>
void BM_CocycleScan(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const regdec::FinAbGroup g({n, n});
  // Trivial table: the scan has to visit every triple.
  const std::vector<Field::Code> table(g.size() * g.size(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(Scan(gf25(), g, table));
}

}  // namespace

BENCHMARK(BM_Determinant<k::serial::determinant>)->Arg(64)->Arg(256);
BENCHMARK(BM_Determinant<k::parallel::determinant>)->Arg(64)->Arg(256);
BENCHMARK(BM_Multiply<k::serial::multiply>)->Arg(64)->Arg(256);
BENCHMARK(BM_Multiply<k::parallel::multiply>)->Arg(64)->Arg(256);
BENCHMARK(BM_CocycleScan<k::serial::cocycle_violation>)->Arg(6)->Arg(12);
BENCHMARK(BM_CocycleScan<k::parallel::cocycle_violation>)->Arg(6)->Arg(12);

BENCHMARK_MAIN();
