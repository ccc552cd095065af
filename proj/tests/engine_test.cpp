#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "memesim/engine.hpp"
#include "memesim/error.hpp"
#include "support/oracles.hpp"

namespace memesim {
namespace {

SimConfig small_config(std::uint64_t seed = 1) {
    SimConfig c;
    c.population = 400;
    c.recruits = 10;
    c.memes_per_recruit = 2;
    c.recruit_interval_ticks = 4;
    c.horizon_ticks = 120;
    c.world = {40, 40};
    c.neighbor_radius = 2.0;
    c.sharing_model = {-2.0, 0.5, 0.5, 0.25};
    c.seed = seed;
    return c;
}

SharingModel always_share() { return {1e6, 0, 0, 0}; }
SharingModel never_share() { return {-1e6, 0, 0, 0}; }

std::size_t count_kind(const std::vector<EventRecord>& log, EventKind kind) {
    return static_cast<std::size_t>(
        std::count_if(log.begin(), log.end(), [&](const EventRecord& e) { return e.kind == kind; }));
}

TEST(Validate, ListsEveryViolatedField) {
    SimConfig c;
    c.recruits = c.population + 1;
    c.neighbor_radius = -1;
    c.meme_dimension = 2;
    try {
        validate(c);
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        const auto& f = e.fields();
        EXPECT_NE(std::find(f.begin(), f.end(), "recruits"), f.end());
        EXPECT_NE(std::find(f.begin(), f.end(), "neighbor_radius"), f.end());
        EXPECT_NE(std::find(f.begin(), f.end(), "meme_dimension"), f.end());
    }
}

TEST(Validate, HorizonMustCoverRecruitmentWhenRequired) {
    SimConfig c;
    c.horizon_ticks = 118 * 4 - 1;
    EXPECT_THROW(validate(c), ConfigError);
    c.horizon_ticks = 118 * 4;
    EXPECT_NO_THROW(validate(c));
    c.horizon_ticks = 10;
    c.require_full_recruitment = false;
    EXPECT_NO_THROW(validate(c));
}

TEST(InitWorld, DefaultConfigPopulation) {
    const World w(SimConfig{});
    EXPECT_EQ(w.agents().size(), 15000u);
    EXPECT_TRUE(w.memes().empty());
    EXPECT_EQ(w.currently_infected(), 0u);
    for (const auto& a : w.agents()) {
        ASSERT_TRUE(a.infections.empty());
        ASSERT_FALSE(a.recruited);
    }
}

TEST(InitWorld, SingleAgentWorld) {
    SimConfig c;
    c.population = 1;
    c.recruits = 1;
    const World w(c);
    EXPECT_EQ(w.agents().size(), 1u);
}

TEST(InitWorld, SameSeedSamePositions) {
    const World a(small_config(5));
    const World b(small_config(5));
    const World c(small_config(6));
    for (std::size_t i = 0; i < a.agents().size(); ++i) {
        ASSERT_EQ(a.agents()[i].position, b.agents()[i].position);
    }
    EXPECT_NE(a.agents()[0].position, c.agents()[0].position);
}

TEST(InitWorld, InvalidConfigThrows) {
    SimConfig c;
    c.recruits = 0;
    EXPECT_THROW(World{c}, ConfigError);
}

TEST(RecruitStep, OneAgentEveryFourTicksUntilQuota) {
    SimConfig c;
    c.sharing_model = never_share();
    World w(c);
    for (Tick t = 0; t < 600; ++t) {
        const auto before = w.recruited_count();
        w.advance();
        const auto expected = (t % 4 == 0 && before < 118) ? before + 1 : before;
        ASSERT_EQ(w.recruited_count(), expected) << "tick " << t;
    }
    EXPECT_EQ(w.recruited_count(), 118u);
    EXPECT_EQ(w.memes().size(), 236u);
}

TEST(RecruitStep, EmitsRecruitCreateInfect) {
    SimConfig c = small_config();
    World w(c);
    w.recruit_step();
    const auto& log = w.output().events;
    ASSERT_EQ(log.size(), 5u);
    EXPECT_EQ(log[0].kind, EventKind::recruit);
    EXPECT_FALSE(log[0].meme_id.has_value());
    EXPECT_EQ(log[1].kind, EventKind::create);
    EXPECT_EQ(log[2].kind, EventKind::infect);
    EXPECT_EQ(log[3].kind, EventKind::create);
    EXPECT_EQ(log[4].kind, EventKind::infect);
    const AgentId creator = log[0].agent_id;
    EXPECT_TRUE(w.agents()[creator].recruited);
    EXPECT_EQ(w.agents()[creator].infections.size(), 2u);
    EXPECT_EQ(w.memes()[1].creator_id, creator);
}

TEST(RecruitStep, BatchAndTotalMemeOverride) {
    SimConfig c;
    c.total_memes = 238;
    c.sharing_model = never_share();
    c.horizon_ticks = 600;
    EXPECT_EQ(run(c, {false}).meme_hits.size(), 238u);

    c.total_memes.reset();
    c.recruit_batch_size = 4;
    World w(c);
    w.recruit_step();
    EXPECT_EQ(w.recruited_count(), 4u);
}

TEST(WalkStep, ZeroStepLeavesPositions) {
    SimConfig c = small_config();
    c.step_size = 0.0;
    World w(c);
    const auto before = w.agents();
    w.walk_step();
    for (std::size_t i = 0; i < before.size(); ++i) {
        ASSERT_EQ(w.agents()[i].position, before[i].position);
    }
}

TEST(WalkStep, FixedLengthStepsStayInBounds) {
    SimConfig c = small_config();
    c.step_size = 1.0;
    World w(c);
    for (int t = 0; t < 20; ++t) {
        const auto before = w.agents();
        w.walk_step();
        for (std::size_t i = 0; i < before.size(); ++i) {
            const auto& p = w.agents()[i].position;
            ASSERT_GE(p.x, 0.0);
            ASSERT_LT(p.x, c.world.width);
            ASSERT_GE(p.y, 0.0);
            ASSERT_LT(p.y, c.world.height);
            // Unit step and the torus is much wider than 2, so the wrapped
            // distance equals the pre-wrap displacement.
            ASSERT_NEAR(torus_distance(before[i].position, p, c.world), 1.0, 1e-12);
        }
    }
}

TEST(ShareStep, NoInfectedAgentsNoEvents) {
    World w(small_config());
    w.share_step();
    EXPECT_TRUE(w.output().events.empty());
}

TEST(ShareStep, ZeroProbabilityMeansNoExposures) {
    SimConfig c = small_config();
    c.sharing_model = never_share();
    const auto out = run(c);
    EXPECT_EQ(out.series.back().cumulative_exposures, 0u);
    EXPECT_EQ(count_kind(out.events, EventKind::expose), 0u);
    EXPECT_EQ(count_kind(out.events, EventKind::share), 0u);
}

TEST(ShareStep, TwoAgentHandTrace) {
    SimConfig c;
    c.population = 2;
    c.recruits = 1;
    c.memes_per_recruit = 1;
    c.horizon_ticks = 10;
    c.step_size = 0.0;
    c.sharing_model = always_share();
    World w(c);
    w.set_position(0, {10, 10});
    w.set_position(1, {11, 10});
    w.recruit_step();
    w.walk_step();
    const auto before = w.output().events.size();
    w.share_step();
    const std::vector<EventRecord> phase(w.output().events.begin() + static_cast<std::ptrdiff_t>(before),
                                         w.output().events.end());
    ASSERT_EQ(phase.size(), 3u);
    const AgentId sharer = phase[0].agent_id;
    EXPECT_EQ(phase[0].kind, EventKind::share);
    EXPECT_EQ(phase[1], (EventRecord{0, EventKind::expose, 1 - sharer, 0}));
    EXPECT_EQ(phase[2], (EventRecord{0, EventKind::infect, 1 - sharer, 0}));
    EXPECT_EQ(w.cumulative_exposures(), 1u);
}

TEST(ShareStep, OutOfRangeNeighborIsNotExposed) {
    SimConfig c;
    c.population = 2;
    c.recruits = 1;
    c.memes_per_recruit = 1;
    c.horizon_ticks = 10;
    c.step_size = 0.0;
    c.sharing_model = always_share();
    World w(c);
    w.set_position(0, {10, 10});
    w.set_position(1, {12.5, 10});
    w.recruit_step();
    w.share_step();
    EXPECT_EQ(w.cumulative_exposures(), 0u);
}

TEST(ShareStep, ReexposureResetsTimerOnlyWhenPolicyOn) {
    for (bool reset : {true, false}) {
        SimConfig c;
        c.population = 2;
        c.recruits = 2;
        c.memes_per_recruit = 1;
        c.total_memes = 2;
        c.recruit_batch_size = 2;
        c.horizon_ticks = 40;
        c.step_size = 0.0;
        c.infection_duration_ticks = 5;
        c.reset_timer_on_reexposure = reset;
        c.sharing_model = always_share();
        World w(c);
        w.set_position(0, {1, 1});
        w.set_position(1, {2, 1});
        for (int t = 0; t < 30; ++t) w.advance();
        // Under reset, mutual re-exposure means no pair ever expires. Without it
        // each creator's own pair runs out after d share phases (ticks 0..4).
        std::vector<EventRecord> recoveries;
        for (const auto& e : w.output().events) {
            if (e.kind == EventKind::recover) recoveries.push_back(e);
        }
        if (reset) {
            EXPECT_TRUE(recoveries.empty());
            EXPECT_EQ(w.currently_infected(), 4u);
        } else {
            ASSERT_FALSE(recoveries.empty());
            EXPECT_EQ(recoveries.front().tick, 4u);
            const auto& first = recoveries.front();
            ASSERT_TRUE(first.meme_id.has_value());
            EXPECT_EQ(first.agent_id, w.memes()[*first.meme_id].creator_id);
        }
    }
}

TEST(RecoveryStep, TimerOfOneRecoversThisTick) {
    SimConfig c = small_config();
    c.infection_duration_ticks = 1;
    c.sharing_model = never_share();
    World w(c);
    w.recruit_step();
    EXPECT_EQ(w.currently_infected(), 2u);
    w.recovery_step();
    EXPECT_EQ(w.currently_infected(), 0u);
    EXPECT_EQ(count_kind(w.output().events, EventKind::recover), 2u);
}

SimConfig pair_world(std::uint32_t duration) {
    SimConfig c;
    c.population = 2;
    c.recruits = 1;
    c.memes_per_recruit = 1;
    c.horizon_ticks = 60;
    c.step_size = 0.0;
    c.infection_duration_ticks = duration;
    c.reset_timer_on_reexposure = false;
    c.sharing_model = always_share();
    return c;
}

TEST(RecoveryStep, InfectedForExactlyDurationSharePhases) {
    for (std::uint32_t d : {1u, 3u, 10u}) {
        World w(pair_world(d));
        w.set_position(0, {5, 5});
        w.set_position(1, {5.5, 5});
        for (int t = 0; t < 60; ++t) w.advance();

        // With p = 1 an infected agent shares in every share phase, so the
        // SHARE events inside one INFECT..RECOVER episode count its phases.
        std::map<AgentId, int> open_shares;
        std::map<AgentId, bool> infected;
        int episodes = 0;
        for (const auto& e : w.output().events) {
            if (e.kind == EventKind::infect) {
                infected[e.agent_id] = true;
                open_shares[e.agent_id] = 0;
            } else if (e.kind == EventKind::share) {
                ++open_shares[e.agent_id];
            } else if (e.kind == EventKind::recover) {
                EXPECT_EQ(open_shares[e.agent_id], static_cast<int>(d)) << "d=" << d;
                infected[e.agent_id] = false;
                ++episodes;
            }
        }
        EXPECT_GT(episodes, 2);
    }
}

TEST(RecoveryStep, RecoveredAgentIsReinfected) {
    World w(pair_world(3));
    w.set_position(0, {5, 5});
    w.set_position(1, {5.5, 5});
    for (int t = 0; t < 20; ++t) w.advance();
    std::map<AgentId, int> infections;
    for (const auto& e : w.output().events) {
        if (e.kind == EventKind::infect) ++infections[e.agent_id];
    }
    EXPECT_GE(infections[0], 2);
    EXPECT_GE(infections[1], 2);
    EXPECT_TRUE(testing::check_sis_transitions(w.output().events, 1).empty());
}

TEST(Run, ZeroHorizonIsEmpty) {
    SimConfig c = small_config();
    c.horizon_ticks = 0;
    c.require_full_recruitment = false;
    const auto out = run(c);
    EXPECT_TRUE(out.series.empty());
    EXPECT_TRUE(out.events.empty());
}

TEST(Run, SameSeedIdenticalOutput) {
    const auto a = run(small_config(9));
    const auto b = run(small_config(9));
    EXPECT_EQ(a, b);
    const auto c = run(small_config(10));
    EXPECT_NE(a.events, c.events);
}

TEST(Run, SeriesAndLogAgree) {
    const auto out = run(small_config(3));
    std::vector<std::uint64_t> per_tick(out.series.size(), 0);
    std::vector<std::uint64_t> hits(out.meme_hits.size(), 0);
    for (const auto& e : out.events) {
        if (e.kind == EventKind::expose) {
            ++per_tick[e.tick];
            ++hits[*e.meme_id];
        }
    }
    std::uint64_t running = 0;
    for (std::size_t t = 0; t < out.series.size(); ++t) {
        running += per_tick[t];
        ASSERT_EQ(out.series[t].cumulative_exposures, running);
        ASSERT_EQ(out.series[t].tick, t);
        if (t > 0) {
            ASSERT_GE(out.series[t].cumulative_exposures, out.series[t - 1].cumulative_exposures);
        }
    }
    EXPECT_EQ(hits, out.meme_hits);
    EXPECT_GT(running, 0u);
}

TEST(Run, TransitionCheckerAcceptsRandomRuns) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        SimConfig c = small_config(seed);
        c.reset_timer_on_reexposure = seed % 2 == 0;
        const auto out = run(c);
        const auto violations = testing::check_sis_transitions(out.events, c.recruits);
        EXPECT_TRUE(violations.empty()) << violations.front();
    }
}

TEST(Run, RecruitedCountNeverExceedsQuota) {
    SimConfig c = small_config(4);
    World w(c);
    std::uint32_t last = 0;
    for (std::uint32_t t = 0; t < c.horizon_ticks; ++t) {
        w.advance();
        ASSERT_GE(w.recruited_count(), last);
        ASSERT_LE(w.recruited_count(), c.recruits);
        last = w.recruited_count();
    }
}

TEST(Run, SaturatesSmallWorldWithinDuration) {
    SimConfig c;
    c.population = 50;
    c.recruits = 3;
    c.memes_per_recruit = 1;
    c.horizon_ticks = 12;
    c.world = {20, 20};
    c.neighbor_radius = 30.0;  // larger than the torus diameter
    c.infection_duration_ticks = 10;
    c.sharing_model = always_share();
    World w(c);
    w.advance();
    // First meme seeded at tick 0 and shared the same tick reaches everyone.
    EXPECT_EQ(w.currently_infected(), 50u);
    for (int t = 1; t < 9; ++t) w.advance();
    EXPECT_EQ(w.currently_infected(), 50u * 3u);
}

TEST(Run, HigherInterceptDoesNotReduceMeanExposures) {
    double low_total = 0.0;
    double high_total = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SimConfig c = small_config(100 + seed);
        c.sharing_model = {-3.0, 0.5, 0.5, 0.25};
        low_total += static_cast<double>(run(c, {false}).series.back().cumulative_exposures);
        c.sharing_model.intercept = -2.0;
        high_total += static_cast<double>(run(c, {false}).series.back().cumulative_exposures);
    }
    EXPECT_GE(high_total, low_total);
}

TEST(EventKind, StringRoundTrip) {
    for (auto k : {EventKind::recruit, EventKind::create, EventKind::share, EventKind::expose,
                   EventKind::infect, EventKind::recover}) {
        EXPECT_EQ(event_kind_from_string(to_string(k)), k);
    }
    EXPECT_FALSE(event_kind_from_string("expose").has_value());
}

}  // namespace
}  // namespace memesim
