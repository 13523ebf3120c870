#pragma once

#include "uavsim/antenna.hpp"
#include "uavsim/channel.hpp"
#include "uavsim/geometry.hpp"
#include "uavsim/kpi.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace uavsim {

enum class Metric { RSRP, RSRQ, SINR };

inline constexpr std::array<Metric, 3> kAllMetrics = {Metric::RSRP, Metric::RSRQ, Metric::SINR};

std::string_view to_string(Metric metric);
std::string_view unit_of(Metric metric);
double metric_value(const KpiSample& sample, Metric metric);

struct SimulationConfig {
    std::vector<Scenario> scenarios = {Scenario::UMa, Scenario::RMa};
    std::vector<double> isd_list = {500.0, 1000.0, 1500.0, 2000.0};
    std::vector<double> altitude_list = {10.0, 25.0, 50.0, 100.0, 150.0, 300.0};
    std::vector<PositionLabel> positions = {kAllPositions.begin(), kAllPositions.end()};
    int trials = 200;
    std::uint64_t master_seed = 1;
    int threads = 1;

    double bs_height = 30.0;
    std::array<double, 3> boresights_deg = {0.0, 120.0, 240.0};

    RadioConfig radio;
    AntennaConfig antenna;

    double fc_ghz = 3.5;
    double h_e = 1.0;
    double h_blg = 5.0;
    double street_width = 20.0;
    double sigma_los_uma_db = 4.0;
    double sigma_nlos_uma_db = 6.0;
    double sigma_los_rma_db = 4.0;
    double sigma_nlos_rma_db = 8.0;
    LosMode los_mode = LosMode::Model;

    ScenarioParams params_for(Scenario scenario) const;

    /// Throws ConfigError naming the offending field.
    void validate() const;

    bool operator==(const SimulationConfig&) const = default;
};

struct KpiStats {
    Metric metric = Metric::RSRP;
    double mean = 0.0;
    double median = 0.0;
    double p05 = 0.0;
    double p95 = 0.0;
    std::size_t n = 0;
};

/// Empirical quantile with linear interpolation at zero-based rank q*(n-1).
/// `sorted` must be ascending and non-empty.
double quantile_sorted(std::span<const double> sorted, double q);

KpiStats aggregate(std::span<const KpiSample> samples, Metric metric);

struct AxisPoint {
    Scenario scenario = Scenario::UMa;
    double isd = 0.0;
    double altitude = 0.0;
    std::optional<PositionLabel> position; // empty for rows pooled over positions
};

struct AxisResult {
    AxisPoint point;
    std::array<KpiStats, 3> stats; // indexed like kAllMetrics
    std::vector<KpiSample> samples;

    const KpiStats& stats_for(Metric metric) const { return stats[static_cast<std::size_t>(metric)]; }
};

struct SweepResult {
    std::uint64_t master_seed = 0;
    /// Sorted by scenario, ISD, altitude, position (radial order, pooled last).
    std::vector<AxisResult> rows;

    const AxisResult* find(Scenario scenario, double isd, double altitude,
                           std::optional<PositionLabel> position) const;
};

struct TrialInputs {
    const DeploymentLayout& layout;
    const ScenarioParams& channel;
    const RadioConfig& radio;
    const AntennaConfig& antenna;
    std::uint64_t master_seed;
};

/// Per-sector link budgets of one Monte Carlo trial, ordered by sector id.
std::vector<LinkBudget> trial_budgets(const TrialInputs& in, const UavPosition& uav, std::uint64_t trial_index);

KpiSample run_trial(const TrialInputs& in, const UavPosition& uav, std::uint64_t trial_index);

/// Runs every (scenario, ISD, altitude, position) point. Output does not
/// depend on `config.threads`.
SweepResult run_sweep(const SimulationConfig& config);

} // namespace uavsim
