#include "memesim/logio.hpp"

#include <algorithm>
#include <charconv>

#include "memesim/error.hpp"

namespace memesim::logio {

namespace {

constexpr std::string_view kRequestPrefix = "\"GET /m/";
constexpr std::string_view kNoMeme = "-";

template <typename Int>
Int parse_uint(std::string_view token, std::size_t line_number, const char* field) {
    Int value{};
    if (token.empty() || token.front() == '+' || token.front() == '-') {
        throw ParseError(line_number, std::string(token), std::string("bad ") + field);
    }
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
        throw ParseError(line_number, std::string(token), std::string("bad ") + field);
    }
    return value;
}

// Splits off the text up to the next single space.
std::string_view take_field(std::string_view& rest, std::size_t line_number, const char* field) {
    const auto space = rest.find(' ');
    if (space == std::string_view::npos) {
        throw ParseError(line_number, std::string(rest), std::string("missing field after ") + field);
    }
    const std::string_view token = rest.substr(0, space);
    rest.remove_prefix(space + 1);
    return token;
}

}  // namespace

std::string emit_line(const EventRecord& record) {
    std::string line = std::to_string(record.tick);
    line += ' ';
    line += std::to_string(record.agent_id);
    line += ' ';
    line += kRequestPrefix;
    line += record.meme_id ? std::to_string(*record.meme_id) : std::string(kNoMeme);
    line += "\" ";
    line += to_string(record.kind);
    return line;
}

EventRecord parse_line(std::string_view line, std::size_t line_number) {
    std::string_view rest = line;
    EventRecord record;
    record.tick = parse_uint<Tick>(take_field(rest, line_number, "tick"), line_number, "tick");
    record.agent_id =
        parse_uint<AgentId>(take_field(rest, line_number, "agent id"), line_number, "agent id");

    if (!rest.starts_with(kRequestPrefix)) {
        const auto space = rest.find(' ');
        throw ParseError(line_number, std::string(rest.substr(0, space)),
                         "expected quoted \"GET /m/<meme_id>\" request");
    }
    rest.remove_prefix(kRequestPrefix.size());
    const auto quote = rest.find('"');
    if (quote == std::string_view::npos) {
        throw ParseError(line_number, std::string(rest), "missing closing quote");
    }
    const std::string_view meme_token = rest.substr(0, quote);
    rest.remove_prefix(quote + 1);
    if (!rest.starts_with(' ')) {
        throw ParseError(line_number, std::string(rest), "expected space after request");
    }
    rest.remove_prefix(1);

    const auto kind = event_kind_from_string(rest);
    if (!kind) {
        throw ParseError(line_number, std::string(rest), "unknown event kind");
    }
    record.kind = *kind;

    if (record.kind == EventKind::recruit) {
        if (meme_token != kNoMeme) {
            throw ParseError(line_number, std::string(meme_token), "RECRUIT carries no meme id");
        }
    } else {
        record.meme_id = parse_uint<MemeId>(meme_token, line_number, "meme id");
    }
    return record;
}

void write_log(std::ostream& out, const std::vector<EventRecord>& records) {
    for (const auto& r : records) {
        out << emit_line(r) << '\n';
    }
}

std::vector<EventRecord> read_log(std::istream& in) {
    std::vector<EventRecord> records;
    for_each_record(in, [&](const EventRecord& r) { records.push_back(r); });
    return records;
}

double median(std::vector<std::uint64_t> values) {
    if (values.empty()) {
        return 0.0;
    }
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    const auto upper = static_cast<double>(values[mid]);
    if (values.size() % 2 == 1) {
        return upper;
    }
    const auto lower = static_cast<double>(
        *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid)));
    return 0.5 * (lower + upper);
}

HitAggregator::HitAggregator(std::uint64_t bin_width_ticks, std::set<EventKind> counted_kinds)
    : bin_width_(bin_width_ticks), counted_(std::move(counted_kinds)) {
    if (bin_width_ == 0) {
        throw InputError("bin width must be at least one tick");
    }
}

void HitAggregator::add(const EventRecord& record) {
    if (!record.meme_id) {
        return;
    }
    const MemeId meme = *record.meme_id;
    const bool counted = counted_.contains(record.kind);
    if (counted) {
        ++per_meme_[meme];
        ++bins_[record.tick / bin_width_ * bin_width_];
    } else if (record.kind == EventKind::create || record.kind == EventKind::expose) {
        per_meme_.try_emplace(meme, 0);
    }
}

void HitAggregator::merge(const HitAggregator& other) {
    if (other.bin_width_ != bin_width_ || other.counted_ != counted_) {
        throw InputError("cannot merge aggregators with different settings");
    }
    for (const auto& [meme, hits] : other.per_meme_) {
        per_meme_[meme] += hits;
    }
    for (const auto& [start, hits] : other.bins_) {
        bins_[start] += hits;
    }
}

HitSummary HitAggregator::summary() const {
    HitSummary s;
    s.bin_width_ticks = bin_width_;
    s.per_meme = per_meme_;
    s.bins = bins_;
    s.meme_count = per_meme_.size();
    std::vector<std::uint64_t> counts;
    counts.reserve(per_meme_.size());
    std::uint64_t below_two = 0;
    for (const auto& [meme, hits] : per_meme_) {
        s.total_hits += hits;
        s.max_hits = std::max(s.max_hits, hits);
        below_two += hits < 2 ? 1 : 0;
        counts.push_back(hits);
    }
    s.median_hits = median(std::move(counts));
    s.fraction_below_2 =
        s.meme_count == 0 ? 0.0 : static_cast<double>(below_two) / static_cast<double>(s.meme_count);
    return s;
}

HitSummary aggregate_hits(const std::vector<EventRecord>& records, std::uint64_t bin_width_ticks,
                          std::set<EventKind> counted_kinds) {
    HitAggregator agg(bin_width_ticks, std::move(counted_kinds));
    for (const auto& r : records) {
        agg.add(r);
    }
    return agg.summary();
}

}  // namespace memesim::logio
