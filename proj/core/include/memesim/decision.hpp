#pragma once

#include <span>
#include <vector>

#include "memesim/rng.hpp"
#include "memesim/types.hpp"

namespace memesim {

/// Consumer model: logistic regression of the share decision on perceived features.
struct SharingModel {
    double intercept = -4.4;
    double w_humor = 0.2;
    double w_relevance = 0.2;
    double w_selfref = 0.1;

    double linear_term(const FeatureVector& f) const {
        return intercept + w_humor * f.humor + w_relevance * f.self_relevance +
               w_selfref * f.self_reference;
    }
};

/// Creator model: linear prediction of a meme's total hits from creator-side ratings.
struct CreatorModel {
    double intercept = 0.0;
    std::vector<double> weights;
};

/// Numerically stable standard logistic.
double logistic(double z) noexcept;

/// sigma(model . f). Throws InputError on non-finite features or coefficients.
double share_probability(const SharingModel& model, const FeatureVector& f);

/// Bernoulli(p) from one uniform draw: true iff u < p. Always consumes one draw.
bool decide_share(RngStream& rng, double p);

/// intercept + weights . features. Throws InputError on a length mismatch.
double predict_total_hits(const CreatorModel& model, std::span<const double> creator_features);

}  // namespace memesim
