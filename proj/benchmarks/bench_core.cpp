#include <benchmark/benchmark.h>

#include "atxxz/eigensolve.hpp"
#include "atxxz/entanglement.hpp"
#include "atxxz/models.hpp"

using namespace atxxz;

namespace {

ModelParams at_params(int m) { return {Model::AshkinTeller, m, 1.0, 1.0, 1.0}; }

void BM_BuildBasis(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SpinBasis b(2 * m, ground_sector(at_params(m)));
    benchmark::DoNotOptimize(b.size());
  }
}
BENCHMARK(BM_BuildBasis)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_Assemble(benchmark::State& state) {
  const auto p = at_params(static_cast<int>(state.range(0)));
  const SpinBasis b(p.n_spins(), ground_sector(p));
  const auto terms = hamiltonian_terms(p);
  for (auto _ : state) benchmark::DoNotOptimize(assemble(b, natural_frame(p.model), terms).nnz());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(b.size()));
}
BENCHMARK(BM_Assemble)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_MatVec(benchmark::State& state) {
  const auto h = build_hamiltonian(at_params(static_cast<int>(state.range(0))), parity_sector(0));
  std::vector<double> x(h.dim(), 1.0), y(h.dim());
  for (auto _ : state) {
    h.matrix.multiply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(h.matrix.nnz()));
}
BENCHMARK(BM_MatVec)->DenseRange(4, 10, 2);

void BM_LanczosGround(benchmark::State& state) {
  const auto h = build_hamiltonian(at_params(static_cast<int>(state.range(0))), parity_sector(0));
  for (auto _ : state) benchmark::DoNotOptimize(lanczos_ground(h.matrix).energies[0]);
}
BENCHMARK(BM_LanczosGround)->DenseRange(4, 9, 1)->Unit(benchmark::kMillisecond);

void BM_ReduceQuartet(benchmark::State& state) {
  const auto p = at_params(static_cast<int>(state.range(0)));
  const auto psi = solve_ground_sector(p).states.at(0);
  const std::vector<int> keep{0, 1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(von_neumann(reduce(psi, keep)));
}
BENCHMARK(BM_ReduceQuartet)->DenseRange(4, 9, 1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
