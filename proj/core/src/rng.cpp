#include "memesim/rng.hpp"

#include <cmath>
#include <numbers>

namespace memesim {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix_next(std::uint64_t& state) noexcept {
    state += kGolden;
    return mix64(state);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::string_view to_string(StreamLabel label) {
    switch (label) {
        case StreamLabel::placement: return "placement";
        case StreamLabel::walk: return "walk";
        case StreamLabel::meme_content: return "meme-content";
        case StreamLabel::decisions: return "decisions";
        case StreamLabel::perception: return "perception";
        case StreamLabel::recruitment: return "recruitment";
    }
    return "unknown";
}

RngStream::RngStream(std::uint64_t seed, StreamLabel label) : seed_(seed), label_(label) {
    std::uint64_t sm = seed ^ (kGolden * (static_cast<std::uint64_t>(label) + 1));
    for (auto& word : state_) {
        word = splitmix_next(sm);
    }
}

RngStream RngStream::keyed(std::uint64_t key_a, std::uint64_t key_b, StreamLabel label) {
    return RngStream(mix64(key_a) ^ rotl(mix64(key_b + kGolden), 17), label);
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::bounded(std::uint64_t n) {
    if (n == 0) {
        return 0;
    }
    // Reject the low 2^64 mod n outputs so the modulo is unbiased.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) {
            return r % n;
        }
    }
}

double RngStream::standard_normal() {
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double sample_standard_normal(RngStream& rng) { return rng.standard_normal(); }

}  // namespace memesim
