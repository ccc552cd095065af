#pragma once

#include <cstddef>

#include "memesim/rng.hpp"
#include "memesim/types.hpp"

namespace memesim {

/// Draws `dim` independent standard normals as the meme's latent content.
/// Throws ConfigError when dim == 0.
MemeVector sample_meme_vector(RngStream& rng, std::size_t dim, MemeId meme_id, AgentId creator_id);

/// Latent components plus per-consumer Gaussian noise with SD `noise_sd`.
///
/// The noise comes from a substream keyed on (agent perception seed, meme id),
/// so the same agent always perceives the same meme identically. Throws
/// ConfigError when the meme has fewer than three components and InputError
/// for a negative or non-finite `noise_sd`.
FeatureVector perceive_features(const AgentState& agent, const MemeVector& meme, double noise_sd);

}  // namespace memesim
