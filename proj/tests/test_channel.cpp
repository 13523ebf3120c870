#include "uavsim/channel.hpp"
#include "uavsim/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>
#include <vector>

using namespace uavsim;

namespace {

ScenarioParams uma() { return default_params(Scenario::UMa); }
ScenarioParams rma() { return default_params(Scenario::RMa); }

double sample_std(const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) {
        mean += x;
    }
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) {
        ss += (x - mean) * (x - mean);
    }
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

} // namespace

TEST(Breakpoint, HandEvaluated) {
    EXPECT_NEAR(breakpoint_distance(uma(), 30.0, 25.0), 32480.0, 1e-6);
    EXPECT_NEAR(breakpoint_distance(rma(), 30.0, 10.0), 21991.148575128553, 1e-6);
    EXPECT_EQ(breakpoint_distance(uma(), 30.0, 1.0), 0.0);
    EXPECT_THROW(breakpoint_distance(uma(), 30.0, 0.5), DomainError);
}

TEST(PathlossLos, HandEvaluated) {
    EXPECT_NEAR(pathloss_los(uma(), 99.0, 100.0, 30.0, 50.0), 82.881360887005513, 1e-9);
    EXPECT_NEAR(pathloss_los(rma(), 999.9, 1000.0, 30.0, 10.0), 109.34545982842175, 1e-9);
    EXPECT_THROW(pathloss_los(uma(), 0.0, 0.0, 30.0, 50.0), DomainError);
}

TEST(PathlossLos, UmaContinuousAtBreakpoint) {
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> h(1.5, 300.0);
    std::uniform_real_distribution<double> hb(10.0, 50.0);
    std::uniform_real_distribution<double> fc(0.5, 6.0);
    for (int n = 0; n < 100; ++n) {
        auto p = uma();
        p.fc_ghz = fc(gen);
        const double bs = hb(gen);
        const double uav = h(gen);
        const double d_bp = breakpoint_distance(p, bs, uav);
        const double d3d = std::sqrt(d_bp * d_bp + (uav - bs) * (uav - bs));
        EXPECT_NEAR(pathloss_los_fs(p, d3d, uav), pathloss_los_gr(p, d3d, bs, uav), 1e-9);
    }
}

TEST(PathlossLos, RmaBreakpointJumpBounded) {
    auto p = rma();
    const double bs = 30.0;
    const double h = 10.0;
    const double d_bp = breakpoint_distance(p, bs, h);
    const double d3d = std::hypot(d_bp, h - bs);
    const double jump = pathloss_los_gr(p, d3d, bs, h) - pathloss_los_fs(p, d3d, h);
    EXPECT_NEAR(jump, 40.0 * std::log10(d3d / d_bp), 1e-9);
    EXPECT_LT(jump, 1e-4);
}

TEST(PathlossLos, IncreasingInDistanceWithinBranch) {
    for (const auto& p : {uma(), rma()}) {
        for (double h : {10.0, 50.0, 300.0}) {
            double prev = -1e9;
            for (double d2d = 20.0; d2d < 5000.0; d2d *= 1.3) {
                const double d3d = std::hypot(d2d, h - 30.0);
                const double pl = pathloss_los(p, d2d, d3d, 30.0, h);
                EXPECT_GT(pl, prev);
                prev = pl;
            }
        }
    }
}

TEST(PathlossNlos, HandEvaluatedMaxBinds) {
    // L' = 73.48 dB is below the LOS value, so the max returns the LOS loss
    auto p = uma();
    EXPECT_NEAR(pathloss_nlos(p, 99.0, 100.0, 30.0, 50.0), 82.881360887005513, 1e-9);
}

TEST(PathlossNlos, UmaReferenceHeightTermVanishes) {
    auto p = uma();
    const double d3d = 2000.0;
    const double expected = 13.54 + 39.08 * std::log10(d3d) + 20.0 * std::log10(3.5);
    EXPECT_NEAR(pathloss_nlos(p, std::sqrt(d3d * d3d - 28.5 * 28.5), d3d, 30.0, 1.5), expected, 1e-9);
}

TEST(PathlossNlos, NeverBelowLos) {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> d(1.0, 10000.0);
    std::uniform_real_distribution<double> h(1.0, 300.0);
    for (const auto& p : {uma(), rma()}) {
        for (int n = 0; n < 10000; ++n) {
            const double d2d = d(gen);
            const double uav = h(gen);
            const double d3d = std::hypot(d2d, uav - 30.0);
            EXPECT_GE(pathloss_nlos(p, d2d, d3d, 30.0, uav), pathloss_los(p, d2d, d3d, 30.0, uav));
        }
    }
}

TEST(LosProbability, BoundaryValues) {
    EXPECT_EQ(los_probability(Scenario::RMa, 10.0, 50.0), 1.0);
    EXPECT_NEAR(los_probability(Scenario::RMa, 1010.0, 50.0), 0.36787944117144232, 1e-15);
    for (double h : {1.5, 13.0, 22.0, 100.0}) {
        EXPECT_EQ(los_probability(Scenario::UMa, 18.0, h), 1.0);
    }
    // C'(13) = 0 leaves only the distance term
    const double d = 200.0;
    EXPECT_DOUBLE_EQ(los_probability(Scenario::UMa, d, 13.0), 18.0 / d + std::exp(-d / 63.0) * (1.0 - 18.0 / d));
}

TEST(LosProbability, UnitIntervalAndRmaMonotone) {
    for (double h : {1.5, 10.0, 20.0, 23.0, 50.0, 300.0}) {
        double prev = 2.0;
        for (double d = 0.0; d < 20000.0; d += 7.3) {
            const double pu = los_probability(Scenario::UMa, d, h);
            const double pr = los_probability(Scenario::RMa, d, h);
            EXPECT_GE(pu, 0.0);
            EXPECT_LE(pu, 1.0);
            EXPECT_GE(pr, 0.0);
            EXPECT_LE(pr, 1.0);
            EXPECT_LE(pr, prev);
            prev = pr;
        }
    }
}

TEST(DrawState, Extremes) {
    RngStream rng(1, 2, 3);
    for (int n = 0; n < 1000; ++n) {
        EXPECT_EQ(draw_state(1.0, rng), LinkState::LOS);
        EXPECT_EQ(draw_state(0.0, rng), LinkState::NLOS);
    }
}

TEST(DrawState, EmpiricalFraction) {
    const int n = 100000;
    for (double p : {0.3, 0.05, 0.9}) {
        RngStream rng(99, 0, static_cast<std::uint64_t>(p * 100));
        int los = 0;
        for (int i = 0; i < n; ++i) {
            los += draw_state(p, rng) == LinkState::LOS;
        }
        const double frac = static_cast<double>(los) / n;
        EXPECT_NEAR(frac, p, 3.0 * std::sqrt(p * (1.0 - p) / n));
    }
}

TEST(Shadowing, ZeroSigma) {
    auto p = uma();
    p.sigma_los_db = 0.0;
    RngStream rng(4, 4, 4);
    for (int n = 0; n < 100; ++n) {
        EXPECT_EQ(draw_shadowing(LinkState::LOS, p, rng), 0.0);
    }
}

TEST(Shadowing, SampleSpread) {
    const int n = 100000;
    struct Case {
        ScenarioParams p;
        LinkState state;
        double sigma;
        double tol;
    };
    for (const auto& c : {Case{uma(), LinkState::NLOS, 6.0, 0.1}, Case{rma(), LinkState::NLOS, 8.0, 0.15},
                          Case{uma(), LinkState::LOS, 4.0, 0.08}}) {
        RngStream rng(2024, 1, static_cast<std::uint64_t>(c.sigma));
        std::vector<double> v;
        v.reserve(n);
        for (int i = 0; i < n; ++i) {
            v.push_back(draw_shadowing(c.state, c.p, rng));
        }
        EXPECT_NEAR(sample_std(v), c.sigma, c.tol);
    }
}

TEST(EffectivePathloss, ForcedStatesMatchDeterministicLoss) {
    LinkGeometry link;
    link.d2d = 400.0;
    link.d3d = std::hypot(400.0, 70.0);
    for (auto p : {uma(), rma()}) {
        p.sigma_los_db = 0.0;
        p.sigma_nlos_db = 0.0;
        p.los_mode = LosMode::ForceLos;
        RngStream a(1, 0, 0);
        auto los = effective_pathloss(link, p, 30.0, 100.0, a);
        EXPECT_EQ(los.state.state, LinkState::LOS);
        EXPECT_EQ(los.pathloss_db, pathloss_los(p, link.d2d, link.d3d, 30.0, 100.0));

        p.los_mode = LosMode::ForceNlos;
        RngStream b(1, 0, 0);
        auto nlos = effective_pathloss(link, p, 30.0, 100.0, b);
        EXPECT_EQ(nlos.state.state, LinkState::NLOS);
        EXPECT_EQ(nlos.pathloss_db, pathloss_nlos(p, link.d2d, link.d3d, 30.0, 100.0));
    }
}

TEST(EffectivePathloss, Reproducible) {
    LinkGeometry link;
    link.d2d = 800.0;
    link.d3d = std::hypot(800.0, 20.0);
    const auto p = uma();
    RngStream a(77, 12, 40);
    RngStream b(77, 12, 40);
    const auto x = effective_pathloss(link, p, 30.0, 50.0, a);
    const auto y = effective_pathloss(link, p, 30.0, 50.0, b);
    EXPECT_EQ(x.pathloss_db, y.pathloss_db);
    EXPECT_EQ(x.state.state, y.state.state);
    EXPECT_EQ(x.state.shadow_db, y.state.shadow_db);
}

TEST(RngStream, DistinctKeysGiveDistinctPrefixes) {
    std::set<std::vector<std::uint64_t>> prefixes;
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        for (std::uint64_t sector = 0; sector < 57; ++sector) {
            RngStream rng(12345, trial, sector);
            std::vector<std::uint64_t> prefix(64);
            for (auto& x : prefix) {
                x = rng();
            }
            EXPECT_TRUE(prefixes.insert(prefix).second);
        }
    }
}

TEST(RngStream, UniformRange) {
    RngStream rng(0, 0, 0);
    for (int n = 0; n < 100000; ++n) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(ScenarioParams, Parsing) {
    EXPECT_EQ(parse_scenario("uma"), Scenario::UMa);
    EXPECT_EQ(parse_scenario("RMa"), Scenario::RMa);
    EXPECT_THROW(parse_scenario("umi"), ConfigError);
    EXPECT_EQ(parse_los_mode("nlos"), LosMode::ForceNlos);
    EXPECT_THROW(parse_los_mode("sometimes"), ConfigError);
    EXPECT_EQ(default_params(Scenario::RMa).sigma_nlos_db, 8.0);
    EXPECT_EQ(default_params(Scenario::UMa).sigma_nlos_db, 6.0);
}
