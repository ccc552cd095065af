#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "memesim/logio.hpp"
#include "memesim/rng.hpp"

namespace {

using namespace memesim;

std::vector<std::string> sample_lines(std::size_t n) {
    RngStream rng(2, StreamLabel::walk);
    std::vector<std::string> lines;
    lines.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        EventRecord r{i / 100, EventKind::expose, static_cast<AgentId>(rng.bounded(15000)),
                      static_cast<MemeId>(rng.bounded(236))};
        lines.push_back(logio::emit_line(r));
    }
    return lines;
}

void BM_ParseLine(benchmark::State& state) {
    const auto lines = sample_lines(10000);
    for (auto _ : state) {
        for (const auto& l : lines) benchmark::DoNotOptimize(logio::parse_line(l));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lines.size()));
}
BENCHMARK(BM_ParseLine);

void BM_Aggregate(benchmark::State& state) {
    const auto lines = sample_lines(10000);
    std::vector<EventRecord> records;
    for (const auto& l : lines) records.push_back(logio::parse_line(l));
    for (auto _ : state) {
        logio::HitAggregator agg(1);
        for (const auto& r : records) agg.add(r);
        benchmark::DoNotOptimize(agg.summary().total_hits);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(records.size()));
}
BENCHMARK(BM_Aggregate);

}  // namespace
