#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "memesim/geometry.hpp"

namespace memesim {

using AgentId = std::uint32_t;
using MemeId = std::uint32_t;
using Tick = std::uint64_t;

/// Latent content of one meme. The first three components are read as
/// humor, self-relevance and self-reference intensity.
struct MemeVector {
    MemeId meme_id = 0;
    AgentId creator_id = 0;
    std::vector<double> components;
};

/// What a consumer perceives of a meme; the inputs of the sharing model.
struct FeatureVector {
    double humor = 0.0;
    double self_relevance = 0.0;
    double self_reference = 0.0;

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

/// One live (agent, meme) infection.
struct Infection {
    MemeId meme_id = 0;
    /// Share phases this pair still takes part in; always >= 1 while stored.
    int remaining_ticks = 0;
    /// Cached share probability. Perception is deterministic per (agent, meme),
    /// so this is computed once at infection time.
    double share_probability = 0.0;
    /// Set when the infection was acquired or refreshed during this tick's
    /// share phase; the following recovery phase skips the decrement.
    bool fresh = false;
};

struct AgentState {
    AgentId agent_id = 0;
    Position position;
    bool recruited = false;
    /// Sorted by meme id; at most one entry per meme. Absent means susceptible.
    std::vector<Infection> infections;
    std::uint64_t perception_noise_seed = 0;

    const Infection* find_infection(MemeId meme) const {
        auto it = lower_bound(meme);
        return (it != infections.end() && it->meme_id == meme) ? &*it : nullptr;
    }
    Infection* find_infection(MemeId meme) {
        auto it = lower_bound(meme);
        return (it != infections.end() && it->meme_id == meme) ? &*it : nullptr;
    }
    bool is_infected(MemeId meme) const { return find_infection(meme) != nullptr; }

    /// Inserts a new infection; the agent must be susceptible to `infection.meme_id`.
    void add_infection(const Infection& infection) {
        infections.insert(lower_bound(infection.meme_id), infection);
    }

private:
    std::vector<Infection>::iterator lower_bound(MemeId meme) {
        return std::lower_bound(infections.begin(), infections.end(), meme,
                                [](const Infection& inf, MemeId m) { return inf.meme_id < m; });
    }
    std::vector<Infection>::const_iterator lower_bound(MemeId meme) const {
        return std::lower_bound(infections.begin(), infections.end(), meme,
                                [](const Infection& inf, MemeId m) { return inf.meme_id < m; });
    }
};

}  // namespace memesim
