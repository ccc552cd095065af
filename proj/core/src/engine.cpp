#include "memesim/engine.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "memesim/error.hpp"
#include "memesim/features.hpp"

namespace memesim {

std::uint32_t SimConfig::memes_for_recruit(std::uint32_t ordinal) const {
    if (!total_memes) {
        return memes_per_recruit;
    }
    const std::uint32_t base = *total_memes / recruits;
    const std::uint32_t extra = *total_memes % recruits;
    return base + (ordinal < extra ? 1 : 0);
}

std::uint32_t SimConfig::recruitment_sessions() const {
    return recruit_batch_size == 0 ? 0 : (recruits + recruit_batch_size - 1) / recruit_batch_size;
}

void validate(const SimConfig& c) {
    std::vector<std::string> bad;
    auto positive_finite = [](double v) { return std::isfinite(v) && v > 0.0; };

    if (c.population == 0) bad.emplace_back("population");
    if (c.recruits == 0 || c.recruits > c.population) bad.emplace_back("recruits");
    if (c.memes_per_recruit == 0) bad.emplace_back("memes_per_recruit");
    if (c.total_memes && c.recruits > 0 && *c.total_memes < c.recruits) bad.emplace_back("total_memes");
    if (c.recruit_batch_size == 0) bad.emplace_back("recruit_batch_size");
    if (c.recruit_interval_ticks == 0) bad.emplace_back("recruit_interval_ticks");
    if (c.require_full_recruitment && c.recruit_interval_ticks > 0 && c.recruit_batch_size > 0 &&
        static_cast<std::uint64_t>(c.horizon_ticks) <
            static_cast<std::uint64_t>(c.recruitment_sessions()) * c.recruit_interval_ticks) {
        bad.emplace_back("horizon_ticks");
    }
    if (!positive_finite(c.world.width)) bad.emplace_back("world_width");
    if (!positive_finite(c.world.height)) bad.emplace_back("world_height");
    if (!std::isfinite(c.step_size) || c.step_size < 0.0) bad.emplace_back("step_size");
    if (!positive_finite(c.neighbor_radius)) bad.emplace_back("neighbor_radius");
    if (c.infection_duration_ticks == 0) bad.emplace_back("infection_duration_ticks");
    if (!std::isfinite(c.perception_noise_sd) || c.perception_noise_sd < 0.0) {
        bad.emplace_back("perception_noise_sd");
    }
    if (c.meme_dimension < 3) bad.emplace_back("meme_dimension");
    const auto& m = c.sharing_model;
    if (!std::isfinite(m.intercept)) bad.emplace_back("sharing_model.intercept");
    if (!std::isfinite(m.w_humor)) bad.emplace_back("sharing_model.w_humor");
    if (!std::isfinite(m.w_relevance)) bad.emplace_back("sharing_model.w_relevance");
    if (!std::isfinite(m.w_selfref)) bad.emplace_back("sharing_model.w_selfref");

    if (!bad.empty()) {
        throw ConfigError(std::move(bad));
    }
}

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::recruit: return "RECRUIT";
        case EventKind::create: return "CREATE";
        case EventKind::share: return "SHARE";
        case EventKind::expose: return "EXPOSE";
        case EventKind::infect: return "INFECT";
        case EventKind::recover: return "RECOVER";
    }
    return "UNKNOWN";
}

std::optional<EventKind> event_kind_from_string(std::string_view text) {
    for (auto kind : {EventKind::recruit, EventKind::create, EventKind::share, EventKind::expose,
                      EventKind::infect, EventKind::recover}) {
        if (to_string(kind) == text) {
            return kind;
        }
    }
    return std::nullopt;
}

namespace {

const SimConfig& validated(const SimConfig& config) {
    validate(config);
    return config;
}

}  // namespace

World::World(const SimConfig& config, RunOptions options)
    : config_(validated(config)),
      options_(options),
      walk_rng_(config.seed, StreamLabel::walk),
      content_rng_(config.seed, StreamLabel::meme_content),
      decision_rng_(config.seed, StreamLabel::decisions),
      recruit_rng_(config.seed, StreamLabel::recruitment),
      grid_(config.world, config.neighbor_radius) {
    RngStream placement(config.seed, StreamLabel::placement);
    RngStream perception(config.seed, StreamLabel::perception);

    agents_.resize(config.population);
    positions_.resize(config.population);
    unrecruited_.resize(config.population);
    for (AgentId i = 0; i < config.population; ++i) {
        auto& a = agents_[i];
        a.agent_id = i;
        const double x = placement.uniform01() * config.world.width;
        const double y = placement.uniform01() * config.world.height;
        a.position = torus_displace({x, y}, 0.0, 0.0, config.world);
        a.perception_noise_seed = perception.next_u64();
        positions_[i] = a.position;
        unrecruited_[i] = i;
    }
}

void World::emit(EventKind kind, AgentId agent, std::optional<MemeId> meme) {
    if (options_.record_events) {
        out_.events.push_back({tick_, kind, agent, meme});
    }
}

void World::infect(AgentState& agent, MemeId meme, bool fresh) {
    const FeatureVector f = perceive_features(agent, memes_[meme], config_.perception_noise_sd);
    const double p = share_probability(config_.sharing_model, f);
    agent.add_infection({meme, static_cast<int>(config_.infection_duration_ticks), p, fresh});
    ++live_pairs_;
    emit(EventKind::infect, agent.agent_id, meme);
}

void World::seed_meme(AgentId creator) {
    const auto meme_id = static_cast<MemeId>(memes_.size());
    memes_.push_back(sample_meme_vector(content_rng_, config_.meme_dimension, meme_id, creator));
    out_.meme_hits.push_back(0);
    emit(EventKind::create, creator, meme_id);
    infect(agents_.at(creator), meme_id, false);
}

void World::set_position(AgentId agent, Position p) {
    p = torus_displace(p, 0.0, 0.0, config_.world);
    agents_.at(agent).position = p;
    positions_[agent] = p;
    grid_stale_ = true;
}

void World::recruit_step() {
    if (tick_ % config_.recruit_interval_ticks != 0) {
        return;
    }
    for (std::uint32_t b = 0; b < config_.recruit_batch_size && recruited_ < config_.recruits; ++b) {
        const auto pick = static_cast<std::size_t>(recruit_rng_.bounded(unrecruited_.size()));
        const AgentId chosen = unrecruited_[pick];
        unrecruited_[pick] = unrecruited_.back();
        unrecruited_.pop_back();

        agents_[chosen].recruited = true;
        emit(EventKind::recruit, chosen, std::nullopt);
        const std::uint32_t count = config_.memes_for_recruit(recruited_);
        ++recruited_;
        for (std::uint32_t k = 0; k < count; ++k) {
            seed_meme(chosen);
        }
    }
}

void World::walk_step() {
    const double step = config_.step_size;
    for (auto& a : agents_) {
        const double angle = 2.0 * std::numbers::pi * walk_rng_.uniform01();
        a.position = torus_displace(a.position, step * std::cos(angle), step * std::sin(angle),
                                    config_.world);
        positions_[a.agent_id] = a.position;
    }
    grid_stale_ = true;
}

void World::share_step() {
    if (grid_stale_) {
        grid_.rebuild(positions_);
        grid_stale_ = false;
    }

    struct Pending {
        AgentId agent;
        MemeId meme;
        double p;
    };
    std::vector<Pending> pending;
    pending.reserve(live_pairs_);
    for (const auto& a : agents_) {
        for (const auto& inf : a.infections) {
            pending.push_back({a.agent_id, inf.meme_id, inf.share_probability});
        }
    }

    const int duration = static_cast<int>(config_.infection_duration_ticks);
    for (const auto& [sharer, meme, p] : pending) {
        if (!decide_share(decision_rng_, p)) {
            continue;
        }
        emit(EventKind::share, sharer, meme);
        grid_.query(positions_[sharer], scratch_neighbors_);
        for (const std::uint32_t b : scratch_neighbors_) {
            if (b == sharer) {
                continue;
            }
            emit(EventKind::expose, b, meme);
            ++exposures_;
            ++out_.meme_hits[meme];
            auto& target = agents_[b];
            if (Infection* inf = target.find_infection(meme)) {
                if (config_.reset_timer_on_reexposure) {
                    inf->remaining_ticks = duration;
                    inf->fresh = true;
                }
            } else {
                infect(target, meme, true);
            }
        }
    }
}

void World::recovery_step() {
    for (auto& a : agents_) {
        auto& infs = a.infections;
        std::size_t kept = 0;
        for (std::size_t i = 0; i < infs.size(); ++i) {
            Infection inf = infs[i];
            if (inf.fresh) {
                inf.fresh = false;
            } else {
                --inf.remaining_ticks;
            }
            if (inf.remaining_ticks <= 0) {
                emit(EventKind::recover, a.agent_id, inf.meme_id);
                --live_pairs_;
            } else {
                infs[kept++] = inf;
            }
        }
        infs.resize(kept);
    }
}

void World::advance() {
    recruit_step();
    walk_step();
    share_step();
    recovery_step();
    out_.series.push_back({tick_, live_pairs_, exposures_});
    ++tick_;
}

SimOutput run(const SimConfig& config, RunOptions options) {
    World world(config, options);
    for (std::uint32_t t = 0; t < config.horizon_ticks; ++t) {
        world.advance();
    }
    return world.take_output();
}

}  // namespace memesim
