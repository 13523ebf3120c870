#include "uavsim/engine.hpp"
#include "uavsim/error.hpp"
#include "uavsim/units.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace uavsim;

namespace {

KpiSample sample_with(double rsrp) {
    KpiSample s;
    s.rsrp_dbm = rsrp;
    return s;
}

SimulationConfig small_config() {
    SimulationConfig cfg;
    cfg.isd_list = {500.0, 1500.0};
    cfg.altitude_list = {25.0, 150.0};
    cfg.trials = 20;
    cfg.master_seed = 42;
    return cfg;
}

} // namespace

TEST(Quantile, LinearInterpolationRule) {
    const std::vector<KpiSample> s = {sample_with(3.0), sample_with(1.0), sample_with(2.0)};
    const auto st = aggregate(s, Metric::RSRP);
    EXPECT_DOUBLE_EQ(st.mean, 2.0);
    EXPECT_DOUBLE_EQ(st.median, 2.0);
    EXPECT_NEAR(st.p05, 1.1, 1e-12);
    EXPECT_NEAR(st.p95, 2.9, 1e-12);
    EXPECT_EQ(st.n, 3u);
}

TEST(Quantile, ConstantSamples) {
    const std::vector<KpiSample> s(17, sample_with(-71.25));
    const auto st = aggregate(s, Metric::RSRP);
    EXPECT_EQ(st.mean, -71.25);
    EXPECT_EQ(st.median, -71.25);
    EXPECT_EQ(st.p05, -71.25);
    EXPECT_EQ(st.p95, -71.25);
}

TEST(Quantile, EmptyIsUsageError) {
    EXPECT_THROW(aggregate(std::vector<KpiSample>{}, Metric::SINR), UsageError);
}

TEST(Quantile, GaussianFifthPercentile) {
    // The sample 5th percentile of 200 N(0, sigma^2) draws has a standard
    // error of about 0.15 sigma, so +-0.35 sigma is a ~2.3 standard error
    // band: a fixed draw must land inside it and at most a few percent of
    // repeated draws may fall outside.
    std::mt19937_64 gen(2718);
    const double sigma = 6.0;
    const double z05 = -1.6448536269514722;
    std::normal_distribution<double> nd(0.0, sigma);
    int outside = 0;
    const int reps = 400;
    for (int rep = 0; rep < reps; ++rep) {
        std::vector<KpiSample> s;
        for (int i = 0; i < 200; ++i) {
            s.push_back(sample_with(nd(gen)));
        }
        const auto st = aggregate(s, Metric::RSRP);
        if (rep == 0) {
            EXPECT_NEAR(st.p05, z05 * sigma, 0.35 * sigma);
        }
        outside += std::abs(st.p05 - z05 * sigma) > 0.35 * sigma;
        EXPECT_LE(st.p05, st.median);
        EXPECT_LE(st.median, st.p95);
    }
    EXPECT_LE(outside, reps / 20);
}

TEST(RunTrial, Reproducible) {
    const auto layout = build_layout(1000.0, 30.0, {0.0, 120.0, 240.0});
    const auto ch = default_params(Scenario::UMa);
    const RadioConfig radio;
    const AntennaConfig ant;
    const TrialInputs in{layout, ch, radio, ant, 5};
    const auto uav = make_uav(PositionLabel::CellEdge, 1000.0, 100.0);
    const auto a = run_trial(in, uav, 17);
    const auto b = run_trial(in, uav, 17);
    EXPECT_EQ(a.serving_sector, b.serving_sector);
    EXPECT_EQ(a.rsrp_dbm, b.rsrp_dbm);
    EXPECT_EQ(a.sinr_db, b.sinr_db);
    EXPECT_EQ(a.rsrq_db, b.rsrq_db);
    const auto c = run_trial(in, uav, 18);
    EXPECT_NE(a.rsrp_dbm, c.rsrp_dbm);
}

// Forced LOS with no shadowing: the serving link reduces to the closed-form
// chain distance -> elevation -> antenna -> free-space branch -> budget.
TEST(RunTrial, DeterministicChainMatchesHandComposition) {
    const double isd = 500.0;
    const double h = 50.0;
    const auto layout = build_layout(isd, 30.0, {0.0, 120.0, 240.0});
    auto ch = default_params(Scenario::UMa);
    ch.los_mode = LosMode::ForceLos;
    ch.sigma_los_db = 0.0;
    RadioConfig radio;
    const AntennaConfig ant;
    const auto uav = make_uav(PositionLabel::CellMiddle, isd, h);

    const double d2d = 125.0;
    const double d3d = std::sqrt(d2d * d2d + 20.0 * 20.0);
    const double theta = std::atan(20.0 / d3d) * 180.0 / M_PI;
    const double a_v = 12.0 * std::pow((theta + 12.0) / 65.0, 2);
    const double g = 17.0 - a_v;
    const double pl = 28.0 + 22.0 * std::log10(d3d) + 20.0 * std::log10(3.5);
    const double prx = 46.0 + g - pl - 8.0;

    {
        const TrialInputs in{layout, ch, radio, ant, 9};
        const auto k = run_trial(in, uav, 0);
        EXPECT_EQ(k.serving_sector, 0);
        EXPECT_NEAR(k.serving_prx_dbm, prx, 1e-9);
        EXPECT_NEAR(k.rsrp_dbm, prx - 10.0 * std::log10(612.0), 1e-9);
        // every trial is identical
        EXPECT_EQ(run_trial(in, uav, 1).sinr_db, k.sinr_db);
    }
    {
        radio.rho = 0.0;
        const TrialInputs in{layout, ch, radio, ant, 9};
        const auto k = run_trial(in, uav, 3);
        EXPECT_NEAR(k.sinr_db, prx - noise_power(radio), 1e-9);
    }
}

TEST(RunTrial, BudgetsCoverAllSectorsInOrder) {
    const auto layout = build_layout(1000.0, 30.0, {0.0, 120.0, 240.0});
    const auto ch = default_params(Scenario::RMa);
    const RadioConfig radio;
    const AntennaConfig ant;
    const TrialInputs in{layout, ch, radio, ant, 1};
    const auto budgets = trial_budgets(in, make_uav(PositionLabel::CellCenter, 1000.0, 10.0), 0);
    ASSERT_EQ(budgets.size(), 57u);
    for (std::size_t i = 0; i < budgets.size(); ++i) {
        EXPECT_EQ(budgets[i].sector_id, static_cast<int>(i));
        EXPECT_TRUE(std::isfinite(budgets[i].prx_dbm));
    }
}

TEST(RunSweep, GridShapeAndOrdering) {
    const auto cfg = small_config();
    const auto r = run_sweep(cfg);
    // 2 scenarios x 2 ISDs x 2 altitudes x (3 positions + pooled)
    ASSERT_EQ(r.rows.size(), 32u);
    EXPECT_EQ(r.rows.front().point.scenario, Scenario::RMa);
    EXPECT_EQ(r.rows.back().point.scenario, Scenario::UMa);
    EXPECT_FALSE(r.rows[3].point.position.has_value());
    for (const auto& row : r.rows) {
        const std::size_t expected_n = row.point.position ? 20u : 60u;
        for (const auto& st : row.stats) {
            EXPECT_EQ(st.n, expected_n);
            EXPECT_LE(st.p05, st.median);
            EXPECT_LE(st.median, st.p95);
        }
        double max_sinr = -1e300;
        for (const auto& s : row.samples) {
            max_sinr = std::max(max_sinr, s.sinr_db);
        }
        EXPECT_LE(row.stats_for(Metric::SINR).p95, max_sinr);
    }
}

TEST(RunSweep, SingleTrialCollapsesStatistics) {
    auto cfg = small_config();
    cfg.trials = 1;
    cfg.positions = {PositionLabel::CellEdge};
    const auto r = run_sweep(cfg);
    ASSERT_EQ(r.rows.size(), 8u);
    for (const auto& row : r.rows) {
        for (const auto& st : row.stats) {
            EXPECT_EQ(st.mean, st.median);
            EXPECT_EQ(st.p05, st.median);
            EXPECT_EQ(st.p95, st.median);
        }
    }
}

TEST(RunSweep, ParallelMatchesSequential) {
    auto cfg = small_config();
    const auto seq = run_sweep(cfg);
    cfg.threads = 5;
    const auto par = run_sweep(cfg);
    ASSERT_EQ(seq.rows.size(), par.rows.size());
    for (std::size_t i = 0; i < seq.rows.size(); ++i) {
        for (std::size_t m = 0; m < 3; ++m) {
            EXPECT_EQ(seq.rows[i].stats[m].mean, par.rows[i].stats[m].mean);
            EXPECT_EQ(seq.rows[i].stats[m].p05, par.rows[i].stats[m].p05);
        }
    }
}

TEST(RunSweep, ExtendingTrialsKeepsEarlierSamples) {
    auto cfg = small_config();
    const auto short_run = run_sweep(cfg);
    cfg.trials = 40;
    const auto long_run = run_sweep(cfg);
    for (std::size_t i = 0; i < short_run.rows.size(); ++i) {
        if (!short_run.rows[i].point.position) {
            continue;
        }
        for (std::size_t t = 0; t < 20; ++t) {
            EXPECT_EQ(short_run.rows[i].samples[t].sinr_db, long_run.rows[i].samples[t].sinr_db);
        }
    }
}

TEST(RunSweep, DeterministicSigmaCollapses) {
    auto cfg = small_config();
    cfg.los_mode = LosMode::ForceNlos;
    cfg.sigma_nlos_uma_db = 0.0;
    cfg.sigma_nlos_rma_db = 0.0;
    cfg.trials = 5;
    const auto r = run_sweep(cfg);
    for (const auto& row : r.rows) {
        if (!row.point.position) {
            continue;
        }
        for (const auto& st : row.stats) {
            EXPECT_EQ(st.p05, st.p95);
            EXPECT_NEAR(st.mean, st.median, 1e-12);
        }
    }
}

TEST(RunSweep, InvalidAxesRejected) {
    auto cfg = small_config();
    cfg.isd_list = {};
    EXPECT_THROW(run_sweep(cfg), ConfigError);
    cfg = small_config();
    cfg.altitude_list = {30.0}; // cell-center UAV on the antenna
    EXPECT_THROW(run_sweep(cfg), ConfigError);
    cfg = small_config();
    cfg.altitude_list = {0.5}; // below h_e
    EXPECT_THROW(run_sweep(cfg), ConfigError);
    cfg = small_config();
    cfg.trials = 0;
    EXPECT_THROW(run_sweep(cfg), ConfigError);
    cfg = small_config();
    cfg.isd_list = {500.0, 500.0};
    EXPECT_THROW(run_sweep(cfg), ConfigError);
}
