#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "memesim/engine.hpp"

namespace memesim::logio {

/// Formats one record as `<tick> <agent_id> "GET /m/<meme_id>" <KIND>`,
/// without the trailing linefeed. RECRUIT has no meme and writes `/m/-`.
std::string emit_line(const EventRecord& record);

/// Inverse of emit_line. Throws ParseError carrying `line_number` and the
/// offending token.
EventRecord parse_line(std::string_view line, std::size_t line_number = 1);

/// Writes each record followed by a single LF.
void write_log(std::ostream& out, const std::vector<EventRecord>& records);

/// Calls `sink(record)` for every line of `in` (1-based line numbers in errors).
template <typename Sink>
void for_each_record(std::istream& in, Sink&& sink) {
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        sink(parse_line(line, line_number));
    }
}

std::vector<EventRecord> read_log(std::istream& in);

struct HitSummary {
    std::uint64_t total_hits = 0;
    std::uint64_t meme_count = 0;
    std::uint64_t max_hits = 0;
    double median_hits = 0.0;
    /// Share of memes with fewer than two hits.
    double fraction_below_2 = 0.0;
    std::uint64_t bin_width_ticks = 1;
    std::map<MemeId, std::uint64_t> per_meme;
    /// Bin start tick -> hits in [start, start + width). Only non-empty bins.
    std::map<Tick, std::uint64_t> bins;
};

/// Single-pass, mergeable hit counter.
///
/// A meme is part of the population once any CREATE or counted record names
/// it, so created-but-never-seen memes enter the median as zero-hit memes.
class HitAggregator {
public:
    explicit HitAggregator(std::uint64_t bin_width_ticks = 1,
                           std::set<EventKind> counted_kinds = {EventKind::expose});

    void add(const EventRecord& record);
    /// Folds another aggregator with the same bin width and counted kinds.
    void merge(const HitAggregator& other);
    HitSummary summary() const;

private:
    std::uint64_t bin_width_;
    std::set<EventKind> counted_;
    std::map<MemeId, std::uint64_t> per_meme_;
    std::map<Tick, std::uint64_t> bins_;
};

HitSummary aggregate_hits(const std::vector<EventRecord>& records,
                          std::uint64_t bin_width_ticks = 1,
                          std::set<EventKind> counted_kinds = {EventKind::expose});

/// Median of a sample (mean of the two middle values for even sizes); 0 when empty.
double median(std::vector<std::uint64_t> values);

}  // namespace memesim::logio
