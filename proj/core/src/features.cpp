#include "memesim/features.hpp"

#include <cmath>

#include "memesim/error.hpp"

namespace memesim {

MemeVector sample_meme_vector(RngStream& rng, std::size_t dim, MemeId meme_id, AgentId creator_id) {
    if (dim == 0) {
        throw ConfigError({"meme_dimension"}, "meme dimension must be at least 1");
    }
    MemeVector meme{meme_id, creator_id, {}};
    meme.components.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        meme.components.push_back(rng.standard_normal());
    }
    return meme;
}

FeatureVector perceive_features(const AgentState& agent, const MemeVector& meme, double noise_sd) {
    if (meme.components.size() < 3) {
        throw ConfigError({"meme_dimension"}, "perception needs at least three meme components");
    }
    if (!std::isfinite(noise_sd) || noise_sd < 0.0) {
        throw InputError("perception noise SD must be finite and non-negative");
    }
    const auto& c = meme.components;
    if (noise_sd == 0.0) {
        return {c[0], c[1], c[2]};
    }
    auto rng = RngStream::keyed(agent.perception_noise_seed, meme.meme_id, StreamLabel::perception);
    const double n0 = rng.standard_normal();
    const double n1 = rng.standard_normal();
    const double n2 = rng.standard_normal();
    return {c[0] + noise_sd * n0, c[1] + noise_sd * n1, c[2] + noise_sd * n2};
}

}  // namespace memesim
