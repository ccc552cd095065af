#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace memesim {

/// Purpose of a random stream. Each purpose gets an independent sequence
/// derived from the master seed, so changing how often one subsystem draws
/// never perturbs another.
enum class StreamLabel : std::uint8_t {
    placement,
    walk,
    meme_content,
    decisions,
    perception,
    recruitment,
};

std::string_view to_string(StreamLabel label);

/// Seeded, platform-independent random stream.
///
/// Engine: xoshiro256** with its 256-bit state filled by four successive
/// SplitMix64 outputs, where the SplitMix64 state starts at
/// `seed ^ (0x9E3779B97F4A7C15 * (label + 1))`.
///
/// Derived values:
///   - uniform01(): top 53 bits of one output times 2^-53, in [0, 1).
///   - bounded(n): Lemire multiply-shift with rejection, unbiased in [0, n).
///   - standard_normal(): basic Box-Muller, consuming exactly two outputs:
///     u1 = 1 - uniform01() in (0, 1], u2 = uniform01(),
///     z = sqrt(-2 ln u1) * cos(2 pi u2). The sine branch is discarded so
///     every normal costs the same number of draws.
///
/// Not safe for concurrent use; give each thread its own stream.
class RngStream {
public:
    RngStream(std::uint64_t seed, StreamLabel label);

    /// Counter-style substream keyed on two integers, e.g. (agent seed, meme id).
    static RngStream keyed(std::uint64_t key_a, std::uint64_t key_b, StreamLabel label);

    std::uint64_t next_u64();
    double uniform01();
    std::uint64_t bounded(std::uint64_t n);
    double standard_normal();

    std::uint64_t seed() const noexcept { return seed_; }
    StreamLabel label() const noexcept { return label_; }

private:
    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_;
    StreamLabel label_;
};

/// One N(0, 1) draw using the transform documented on RngStream.
double sample_standard_normal(RngStream& rng);

/// SplitMix64 finalizer, exposed for seed derivation.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace memesim
