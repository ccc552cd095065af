#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "memesim/decision.hpp"
#include "memesim/neighbor_grid.hpp"
#include "memesim/rng.hpp"
#include "memesim/types.hpp"

namespace memesim {

struct SimConfig {
    std::uint32_t population = 15000;
    std::uint32_t recruits = 118;
    std::uint32_t memes_per_recruit = 2;
    /// When set, overrides recruits * memes_per_recruit; the surplus is spread
    /// one extra meme each over the earliest recruits.
    std::optional<std::uint32_t> total_memes;
    /// Agents enrolled per recruitment session.
    std::uint32_t recruit_batch_size = 1;
    std::uint32_t recruit_interval_ticks = 4;
    std::uint32_t horizon_ticks = 600;
    /// Reject configs whose horizon cannot fit every recruitment session.
    bool require_full_recruitment = true;
    WorldExtent world{200.0, 200.0};
    double step_size = 1.0;
    double neighbor_radius = 2.0;
    std::uint32_t infection_duration_ticks = 10;
    double perception_noise_sd = 0.5;
    std::uint32_t meme_dimension = 3;
    /// Re-exposure of an infected agent restarts its timer at the full duration.
    bool reset_timer_on_reexposure = true;
    SharingModel sharing_model{};
    std::uint64_t seed = 20131;

    std::uint32_t meme_quota() const {
        return total_memes.value_or(recruits * memes_per_recruit);
    }
    /// Memes created by the `ordinal`-th recruit (0-based).
    std::uint32_t memes_for_recruit(std::uint32_t ordinal) const;
    /// Number of recruitment sessions needed to enroll every recruit.
    std::uint32_t recruitment_sessions() const;
};

/// Throws ConfigError naming every violated field.
void validate(const SimConfig& config);

enum class EventKind : std::uint8_t { recruit, create, share, expose, infect, recover };

std::string_view to_string(EventKind kind);
std::optional<EventKind> event_kind_from_string(std::string_view text);

/// One simulation event, also the unit of the access-log format.
struct EventRecord {
    Tick tick = 0;
    EventKind kind = EventKind::expose;
    AgentId agent_id = 0;
    /// Absent exactly for RECRUIT.
    std::optional<MemeId> meme_id;

    friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

struct TickSample {
    Tick tick = 0;
    /// Live (agent, meme) infection pairs at the end of the tick.
    std::uint64_t currently_infected = 0;
    std::uint64_t cumulative_exposures = 0;

    friend bool operator==(const TickSample&, const TickSample&) = default;
};

struct SimOutput {
    std::vector<TickSample> series;
    /// EXPOSE count per meme, indexed by meme id; every created meme has an entry.
    std::vector<std::uint64_t> meme_hits;
    std::vector<EventRecord> events;

    friend bool operator==(const SimOutput&, const SimOutput&) = default;
};

struct RunOptions {
    /// Sweeps turn this off to keep memory flat.
    bool record_events = true;
};

/// Mutable state of one run. Each tick runs the phases in the fixed order
/// recruit -> walk -> share -> recovery; `advance()` does all four.
class World {
public:
    /// Places the population uniformly on the torus. Throws ConfigError.
    explicit World(const SimConfig& config, RunOptions options = {});

    /// Enrolls the next batch when the tick is on the recruitment cadence.
    void recruit_step();
    /// Moves every agent one step of fixed length in a uniformly random direction.
    void walk_step();
    /// Share decisions for every infected pair alive at the start of the phase.
    void share_step();
    /// Decrements timers; expired pairs recover (SIS: susceptible again).
    void recovery_step();
    /// Runs one full tick, records its TickSample and moves the clock forward.
    void advance();

    Tick tick() const noexcept { return tick_; }
    const SimConfig& config() const noexcept { return config_; }
    const std::vector<AgentState>& agents() const noexcept { return agents_; }
    const std::vector<MemeVector>& memes() const noexcept { return memes_; }
    std::uint32_t recruited_count() const noexcept { return recruited_; }
    std::uint64_t currently_infected() const noexcept { return live_pairs_; }
    std::uint64_t cumulative_exposures() const noexcept { return exposures_; }

    /// Test hooks: place an agent or seed an infection directly.
    void set_position(AgentId agent, Position p);
    void seed_meme(AgentId creator);

    const SimOutput& output() const noexcept { return out_; }
    SimOutput take_output() { return std::move(out_); }

private:
    void emit(EventKind kind, AgentId agent, std::optional<MemeId> meme);
    void infect(AgentState& agent, MemeId meme, bool fresh);

    SimConfig config_;
    RunOptions options_;
    Tick tick_ = 0;
    std::vector<AgentState> agents_;
    std::vector<Position> positions_;
    std::vector<MemeVector> memes_;
    std::vector<AgentId> unrecruited_;
    std::uint32_t recruited_ = 0;
    std::uint64_t live_pairs_ = 0;
    std::uint64_t exposures_ = 0;
    RngStream walk_rng_;
    RngStream content_rng_;
    RngStream decision_rng_;
    RngStream recruit_rng_;
    NeighborGrid grid_;
    bool grid_stale_ = true;
    std::vector<std::uint32_t> scratch_neighbors_;
    SimOutput out_;
};

/// Executes `config.horizon_ticks` ticks from a fresh world.
/// Identical config (seed included) gives an identical SimOutput.
SimOutput run(const SimConfig& config, RunOptions options = {});

}  // namespace memesim
