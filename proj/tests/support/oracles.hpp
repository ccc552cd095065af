#pragma once

// Test-only reference implementations. Each one is written independently of
// the library code path it checks.

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "memesim/engine.hpp"
#include "memesim/geometry.hpp"

namespace memesim::testing {

// Reference SplitMix64 / xoshiro256** transcribed from the published C code
// (Vigna, prng.di.unimi.it), driven the way RngStream documents.
struct ReferenceXoshiro {
    std::uint64_t s[4];

    static std::uint64_t splitmix(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    ReferenceXoshiro(std::uint64_t seed, unsigned label_index) {
        std::uint64_t sm = seed ^ (0x9e3779b97f4a7c15ULL * (label_index + 1ULL));
        for (auto& w : s) w = splitmix(sm);
    }
    std::uint64_t next() {
        const std::uint64_t result = rotl(s[1] * 5, 7) * 9;
        const std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }
    double uniform() { return static_cast<double>(next() >> 11) / 9007199254740992.0; }
    double normal() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }
};

// O(N^2) fixed-radius neighbor sets, ascending index order.
inline std::vector<std::uint32_t> brute_force_neighbors(const std::vector<Position>& points,
                                                        Position center, double radius,
                                                        WorldExtent world) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < points.size(); ++i) {
        double dx = std::fabs(points[i].x - center.x);
        double dy = std::fabs(points[i].y - center.y);
        dx = std::min(dx, world.width - dx);
        dy = std::min(dy, world.height - dy);
        if (std::sqrt(dx * dx + dy * dy) <= radius) out.push_back(i);
    }
    return out;
}

// Replays an event log against the SIS state machine and returns one message
// per violation (empty means the log is consistent).
inline std::vector<std::string> check_sis_transitions(const std::vector<EventRecord>& log,
                                                      std::uint32_t max_recruits) {
    std::vector<std::string> violations;
    std::set<std::pair<AgentId, MemeId>> infected;
    std::set<std::pair<AgentId, MemeId>> exposed_this_tick;
    std::set<std::pair<AgentId, MemeId>> created_this_tick;
    std::set<AgentId> recruited;
    Tick current = 0;
    Tick previous_tick = 0;

    auto fail = [&](const EventRecord& e, const std::string& what) {
        violations.push_back("tick " + std::to_string(e.tick) + " agent " + std::to_string(e.agent_id) +
                             ": " + what);
    };

    for (const auto& e : log) {
        if (e.tick < previous_tick) fail(e, "ticks out of order");
        previous_tick = e.tick;
        if (e.tick != current) {
            current = e.tick;
            exposed_this_tick.clear();
            created_this_tick.clear();
        }
        if (e.kind == EventKind::recruit) {
            if (e.meme_id) fail(e, "RECRUIT with meme");
            if (!recruited.insert(e.agent_id).second) fail(e, "agent recruited twice");
            if (recruited.size() > max_recruits) fail(e, "recruit quota exceeded");
            continue;
        }
        if (!e.meme_id) {
            fail(e, "missing meme id");
            continue;
        }
        const auto key = std::make_pair(e.agent_id, *e.meme_id);
        switch (e.kind) {
            case EventKind::create:
                if (!recruited.contains(e.agent_id)) fail(e, "CREATE by unrecruited agent");
                created_this_tick.insert(key);
                break;
            case EventKind::expose:
                exposed_this_tick.insert(key);
                break;
            case EventKind::infect:
                if (infected.contains(key)) fail(e, "INFECT while infected");
                if (!exposed_this_tick.contains(key) && !created_this_tick.contains(key)) {
                    fail(e, "INFECT without same-tick EXPOSE or seed");
                }
                infected.insert(key);
                break;
            case EventKind::share:
                if (!infected.contains(key)) fail(e, "SHARE while susceptible");
                break;
            case EventKind::recover:
                if (!infected.erase(key)) fail(e, "RECOVER while susceptible");
                break;
            case EventKind::recruit:
                break;
        }
    }
    return violations;
}

// Bernoulli log-likelihood written directly from the definition.
inline double reference_log_likelihood(const std::vector<std::vector<double>>& x,
                                       const std::vector<double>& y, const std::vector<double>& beta) {
    double ll = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double eta = beta[0];
        for (std::size_t j = 0; j < x[i].size(); ++j) eta += beta[j + 1] * x[i][j];
        const double p = 1.0 / (1.0 + std::exp(-eta));
        ll += y[i] > 0.5 ? std::log(p) : std::log(1.0 - p);
    }
    return ll;
}

inline std::vector<double> central_difference_gradient(const std::vector<std::vector<double>>& x,
                                                       const std::vector<double>& y,
                                                       std::vector<double> beta, double h = 1e-5) {
    std::vector<double> g(beta.size());
    for (std::size_t j = 0; j < beta.size(); ++j) {
        const double b = beta[j];
        beta[j] = b + h;
        const double up = reference_log_likelihood(x, y, beta);
        beta[j] = b - h;
        const double down = reference_log_likelihood(x, y, beta);
        beta[j] = b;
        g[j] = (up - down) / (2.0 * h);
    }
    return g;
}

// 64-bit FNV-1a, for pinning byte streams.
inline std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace memesim::testing
