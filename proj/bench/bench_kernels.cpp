// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to the
// core count; on a single core the two should time alike.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bicx/batch.hpp"
#include "bicx/fractional.hpp"
#include "bicx/miller_ross.hpp"

namespace {

std::vector<bicx::Bicomplex> points(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> modulus(0.1, 4.0);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::vector<bicx::Bicomplex> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r1 = modulus(rng);
    const double a1 = angle(rng);
    const double r2 = modulus(rng);
    const double a2 = angle(rng);
    out.push_back(bicx::Bicomplex::idempotent(std::polar(r1, a1), std::polar(r2, a2)));
  }
  return out;
}

const bicx::MRParams kParams{bicx::make(0.7, bicx::Complex(0, 0.2)), bicx::make(bicx::Complex(0.3, -1.0), 0.4)};

void BM_EvalSerial(benchmark::State& state) {
  const auto z = points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bicx::eval_serial(kParams, z));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EvalParallel(benchmark::State& state) {
  const auto z = points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bicx::eval_parallel(kParams, z));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

bicx::KineticSolution exp_forced() {
  bicx::KineticProblem p;
  p.kind = bicx::KineticKind::exp_forced;
  p.order = bicx::make(0.8, bicx::Complex(0, 0.1));
  p.rate = 1.0;
  p.multiplier = bicx::make(0.5, 0.2);
  return bicx::kinetic_solve(p);
}

std::vector<double> grid(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = 0.1 + 1.9 * static_cast<double>(i) / static_cast<double>(n - 1);
  return t;
}

void BM_KineticVerifySerial(benchmark::State& state) {
  const auto sol = exp_forced();
  const auto t = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bicx::kinetic_verify_serial(sol, t));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_KineticVerifyParallel(benchmark::State& state) {
  const auto sol = exp_forced();
  const auto t = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bicx::kinetic_verify(sol, t));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_EvalSerial)->Arg(1024)->Arg(16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvalParallel)->Arg(1024)->Arg(16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KineticVerifySerial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KineticVerifyParallel)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
