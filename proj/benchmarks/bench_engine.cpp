#include <benchmark/benchmark.h>

#include "memesim/engine.hpp"

namespace {

using namespace memesim;

void BM_WorldTick(benchmark::State& state) {
    SimConfig c;
    c.population = static_cast<std::uint32_t>(state.range(0));
    c.horizon_ticks = 1u << 30;
    World world(c, RunOptions{false});
    for (int i = 0; i < 100; ++i) world.advance();
    for (auto _ : state) world.advance();
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WorldTick)->Arg(1500)->Arg(15000)->Unit(benchmark::kMicrosecond);

void BM_DefaultRun(benchmark::State& state) {
    const SimConfig c;
    for (auto _ : state) {
        auto out = run(c, RunOptions{false});
        benchmark::DoNotOptimize(out.meme_hits.data());
    }
}
BENCHMARK(BM_DefaultRun)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace
