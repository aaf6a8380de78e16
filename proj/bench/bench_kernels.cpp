#include <benchmark/benchmark.h>

#include <random>

#include "ddm/coarse_graining.hpp"
#include "ddm/kernels.hpp"

using namespace ddm;

namespace {

std::vector<PointSet> random_sets(std::size_t count, std::size_t width, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<PointSet> out(count, PointSet(width));
  for (auto& s : out)
    for (std::size_t v = 0; v < width; ++v)
      if (coin(rng)) s.set(v);
  return out;
}

// every nonempty subset of an n-set: the full simplex, 2^n - 1 cells
SimplicialComplex full_simplex(std::size_t n) {
  Simplex all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
  return SimplicialComplex::closure(VertexTable::numbered(n), {all});
}

std::vector<mpq_class> angles(std::size_t count) {
  std::vector<mpq_class> out;
  for (std::size_t k = 0; k < count; ++k) {
    mpq_class phi(static_cast<long>(2 * (k + 1)), static_cast<long>(count));
    phi -= 1;
    out.push_back(phi);
  }
  return out;
}

template <auto Kernel>
void star_traces(benchmark::State& state) {
  auto supports = random_sets(static_cast<std::size_t>(state.range(0)), 24, 0.4, 1);
  auto faces = random_sets(512, 24, 0.15, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(supports, faces));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void arc_traces(benchmark::State& state) {
  auto phis = angles(static_cast<std::size_t>(state.range(0)));
  auto arcs = triangle_circle_arcs();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(phis, arcs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void sample_cells(benchmark::State& state) {
  auto p = full_simplex(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(p, 8, 42));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.size()) * 8);
}

}  // namespace

BENCHMARK(star_traces<kernels::star_traces_serial>)->Name("star_traces/serial")->Arg(1 << 12)->Arg(1 << 15);
BENCHMARK(star_traces<kernels::star_traces_parallel>)->Name("star_traces/parallel")->Arg(1 << 12)->Arg(1 << 15);
BENCHMARK(arc_traces<kernels::arc_traces_serial>)->Name("arc_traces/serial")->Arg(4096)->Arg(1 << 16);
BENCHMARK(arc_traces<kernels::arc_traces_parallel>)->Name("arc_traces/parallel")->Arg(4096)->Arg(1 << 16);
BENCHMARK(sample_cells<kernels::sample_cells_serial>)->Name("sample_cells/serial")->Arg(6)->Arg(10);
BENCHMARK(sample_cells<kernels::sample_cells_parallel>)->Name("sample_cells/parallel")->Arg(6)->Arg(10);

BENCHMARK_MAIN();
