#include "memesim/decision.hpp"

#include <cmath>
#include <string>

#include "memesim/error.hpp"

namespace memesim {

double logistic(double z) noexcept {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double share_probability(const SharingModel& model, const FeatureVector& f) {
    if (!std::isfinite(f.humor) || !std::isfinite(f.self_relevance) ||
        !std::isfinite(f.self_reference)) {
        throw InputError("feature vector contains a non-finite value");
    }
    if (!std::isfinite(model.intercept) || !std::isfinite(model.w_humor) ||
        !std::isfinite(model.w_relevance) || !std::isfinite(model.w_selfref)) {
        throw InputError("sharing model has a non-finite coefficient");
    }
    return logistic(model.linear_term(f));
}

bool decide_share(RngStream& rng, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InputError("share probability outside [0, 1]: " + std::to_string(p));
    }
    return rng.uniform01() < p;
}

double predict_total_hits(const CreatorModel& model, std::span<const double> creator_features) {
    if (creator_features.size() != model.weights.size()) {
        throw InputError("creator model expects " + std::to_string(model.weights.size()) +
                         " features, got " + std::to_string(creator_features.size()));
    }
    double total = model.intercept;
    for (std::size_t i = 0; i < creator_features.size(); ++i) {
        total += model.weights[i] * creator_features[i];
    }
    return total;
}

}  // namespace memesim
