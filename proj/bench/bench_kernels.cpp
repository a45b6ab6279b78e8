#include <benchmark/benchmark.h>

#include "hsalg/liealg/algebras.hpp"
#include "hsalg/verma/verma.hpp"
#include "hsalg/weyl/phase_space.hpp"

using namespace hsalg;

namespace {

// (U11 + U12 + U22)^2: degree 4, every variable present.
SuperPolynomial quartic(const PhaseSpace& ps) {
  SuperPolynomial q = ps.U(1, 1) + ps.U(1, 2) + ps.U(2, 2);
  return q * q;
}

void BM_star_reference(benchmark::State& st) {
  PhaseSpace ps(static_cast<int>(st.range(0)), 0);
  auto f = quartic(ps);
  for (auto _ : st) benchmark::DoNotOptimize(ps.star_reference(f, f));
}
void BM_star_serial(benchmark::State& st) {
  PhaseSpace ps(static_cast<int>(st.range(0)), 0);
  auto f = quartic(ps);
  for (auto _ : st) benchmark::DoNotOptimize(ps.star(f, f, false));
}
void BM_star_parallel(benchmark::State& st) {
  PhaseSpace ps(static_cast<int>(st.range(0)), 0);
  auto f = quartic(ps);
  for (auto _ : st) benchmark::DoNotOptimize(ps.star(f, f, true));
}

void BM_jacobi_serial(benchmark::State& st) {
  auto alg = o_n2(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(alg.check_jacobi_serial());
}
void BM_jacobi_parallel(benchmark::State& st) {
  auto alg = o_n2(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(alg.check_jacobi());
}

void BM_gram_serial(benchmark::State& st) {
  VermaModule m(static_cast<int>(st.range(0)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(m.gram_symbolic(4, false));
}
void BM_gram_parallel(benchmark::State& st) {
  VermaModule m(static_cast<int>(st.range(0)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(m.gram_symbolic(4, true));
}

}  // namespace

BENCHMARK(BM_star_reference)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_star_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_star_parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_jacobi_serial)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_jacobi_parallel)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_gram_serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gram_parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
