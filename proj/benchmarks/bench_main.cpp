#include <random>

#include <benchmark/benchmark.h>

#include "starkvqe/basis.hpp"
#include "starkvqe/integrals1e.hpp"
#include "starkvqe/integrals2e.hpp"
#include "starkvqe/pipeline.hpp"
#include "starkvqe/quantum.hpp"
#include "starkvqe/scf.hpp"

using namespace starkvqe;

namespace {

const QubitProblem& lih() {
  static const QubitProblem p = build_problem("LiH", 1.6, 1e-3);
  return p;
}

std::vector<double> random_theta(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  std::vector<double> t(n);
  for (auto& x : t) x = u(rng);
  return t;
}

void BM_EriTensorLiH(benchmark::State& state) {
  const auto basis = build_sto3g(make_lih(3.0));
  for (auto _ : state) benchmark::DoNotOptimize(build_eri_tensor(basis));
}
BENCHMARK(BM_EriTensorLiH)->Unit(benchmark::kMillisecond);

void BM_OneElectronLiH(benchmark::State& state) {
  const auto mol = make_lih(3.0);
  const auto basis = build_sto3g(mol);
  for (auto _ : state) benchmark::DoNotOptimize(core_hamiltonian(mol, basis));
}
BENCHMARK(BM_OneElectronLiH)->Unit(benchmark::kMillisecond);

void BM_ScfLiH(benchmark::State& state) {
  const auto mol = make_lih(3.0);
  const auto basis = build_sto3g(mol);
  const auto h = core_hamiltonian(mol, basis);
  const auto s = overlap_matrix(basis);
  const auto eri = build_eri_tensor(basis);
  for (auto _ : state) benchmark::DoNotOptimize(scf_solve(h, eri, s, 4));
}
BENCHMARK(BM_ScfLiH)->Unit(benchmark::kMicrosecond);

void BM_ApplyAnsatzLiH(benchmark::State& state) {
  const auto a = build_uccsd(4, 8, static_cast<int>(state.range(0)));
  const auto ref = hf_reference(4, 8);
  const auto theta = random_theta(a.parameter_count());
  for (auto _ : state) benchmark::DoNotOptimize(apply_ansatz(a, theta, ref));
}
BENCHMARK(BM_ApplyAnsatzLiH)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_ExpectationLiH(benchmark::State& state) {
  const auto a = build_uccsd(4, 8);
  const auto psi = apply_ansatz(a, random_theta(a.parameter_count()), hf_reference(4, 8));
  const auto& h = lih().hamiltonian;
  for (auto _ : state) benchmark::DoNotOptimize(expectation(psi, h));
}
BENCHMARK(BM_ExpectationLiH)->Unit(benchmark::kMicrosecond);

void BM_CompiledExpectationLiH(benchmark::State& state) {
  const auto a = build_uccsd(4, 8);
  const auto psi = apply_ansatz(a, random_theta(a.parameter_count()), hf_reference(4, 8));
  const CompiledObservable c(lih().hamiltonian);
  for (auto _ : state) benchmark::DoNotOptimize(c.expectation(psi));
}
BENCHMARK(BM_CompiledExpectationLiH)->Unit(benchmark::kMicrosecond);

void BM_SampledExpectationLiH(benchmark::State& state) {
  const auto a = build_uccsd(4, 8);
  const auto psi = apply_ansatz(a, random_theta(a.parameter_count()), hf_reference(4, 8));
  const auto& h = lih().hamiltonian;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sampled_expectation(psi, h, state.range(0), ++seed));
  state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<std::int64_t>(h.size()));
}
BENCHMARK(BM_SampledExpectationLiH)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ExactGroundLiH(benchmark::State& state) {
  const auto& h = lih().hamiltonian;
  for (auto _ : state) benchmark::DoNotOptimize(exact_ground_energy(h, 4));
}
BENCHMARK(BM_ExactGroundLiH)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
