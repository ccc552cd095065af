#include <benchmark/benchmark.h>

#include <vector>

#include "memesim/neighbor_grid.hpp"
#include "memesim/rng.hpp"

namespace {

using namespace memesim;

std::vector<Position> scatter(std::size_t n, WorldExtent world) {
    RngStream rng(1, StreamLabel::placement);
    std::vector<Position> pts(n);
    for (auto& p : pts) p = {world.width * rng.uniform01(), world.height * rng.uniform01()};
    return pts;
}

void BM_GridRebuild(benchmark::State& state) {
    const WorldExtent world{200.0, 200.0};
    const auto pts = scatter(static_cast<std::size_t>(state.range(0)), world);
    NeighborGrid grid(world, 2.0);
    for (auto _ : state) {
        grid.rebuild(pts);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GridRebuild)->Arg(1000)->Arg(15000)->Arg(100000);

void BM_GridQueryAll(benchmark::State& state) {
    const WorldExtent world{200.0, 200.0};
    const auto pts = scatter(static_cast<std::size_t>(state.range(0)), world);
    NeighborGrid grid(world, 2.0);
    grid.rebuild(pts);
    std::vector<std::uint32_t> out;
    for (auto _ : state) {
        std::size_t found = 0;
        for (const auto& p : pts) {
            grid.query(p, out);
            found += out.size();
        }
        benchmark::DoNotOptimize(found);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GridQueryAll)->Arg(1000)->Arg(15000);

}  // namespace
