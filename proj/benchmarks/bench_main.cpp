#include <benchmark/benchmark.h>

#include <random>

#include "stabxc/ef_builder.hpp"
#include "stabxc/fooling.hpp"
#include "stabxc/special_weights.hpp"
#include "stabxc/tree_cover.hpp"

using namespace stabxc;

namespace {

void BM_BuildPlane(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_plane(q));
}
BENCHMARK(BM_BuildPlane)->Arg(4)->Arg(9)->Arg(16)->Arg(49);

void BM_RectWeight(benchmark::State& state) {
  const PlaneTables t(build_plane(static_cast<int>(state.range(0))));
  std::mt19937_64 gen(3);
  std::vector<MaximalRectangle> rects;
  for (int i = 0; i < 256; ++i) {
    MaximalRectangle r{VertexSet(t.n()), VertexSet(t.n())};
    for (int v = 0; v < t.n(); ++v) {
      if (gen() & 1U) r.a_side.set(v);
      if (gen() % 4 == 0) r.b_side.set(v);
    }
    rects.push_back(r);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rect_weight(t, rects[i++ % rects.size()]));
}
BENCHMARK(BM_RectWeight)->Arg(3)->Arg(4)->Arg(5);

void BM_SampledSweep(benchmark::State& state) {
  const PlaneTables t(build_plane(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(sampled_rectangle_sweep(t, 1000, 1));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_SampledSweep)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MergedCoverVerify(benchmark::State& state) {
  const PlaneTables t(build_plane(static_cast<int>(state.range(0))));
  const auto merged = merge_covers(t, all_line_covers(t));
  for (auto _ : state) benchmark::DoNotOptimize(verify_special_cover(t, merged));
}
BENCHMARK(BM_MergedCoverVerify)->Arg(4)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_BuildTree(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_tree(k));
}
BENCHMARK(BM_BuildTree)->Arg(10)->Arg(256)->Arg(4096);

void BM_CubicFooling(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const BipartiteGraph g = hexagonal_torus(side, side);
  for (auto _ : state) {
    const FoolingSet fs = cubic_fooling_set(g);
    benchmark::DoNotOptimize(verify_fooling_set(g, fs));
  }
}
BENCHMARK(BM_CubicFooling)->Arg(6)->Arg(12)->Arg(20);

void BM_StabExtensionLp(benchmark::State& state) {
  const BipartiteGraph g = even_cycle(static_cast<int>(state.range(0)));
  const EdgeExtension ef = edge_polytope_union_ef(g, greedy_biclique_cover(g));
  const StabExtension stab = martin_dual_ef(ef, g);
  std::vector<Rational> objective(stab.system.num_vars());
  for (int v = 0; v < g.num_vertices(); ++v) objective[stab.system.original[v]] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(exact_lp(stab.system, objective));
}
BENCHMARK(BM_StabExtensionLp)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
