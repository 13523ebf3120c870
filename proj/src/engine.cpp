#include "uavsim/engine.hpp"

#include "uavsim/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>

namespace uavsim {

std::string_view to_string(Metric metric) {
    switch (metric) {
    case Metric::RSRP:
        return "RSRP";
    case Metric::RSRQ:
        return "RSRQ";
    case Metric::SINR:
        return "SINR";
    }
    return "?";
}

std::string_view unit_of(Metric metric) {
    return metric == Metric::RSRP ? "dBm" : "dB";
}

double metric_value(const KpiSample& sample, Metric metric) {
    switch (metric) {
    case Metric::RSRP:
        return sample.rsrp_dbm;
    case Metric::RSRQ:
        return sample.rsrq_db;
    case Metric::SINR:
        return sample.sinr_db;
    }
    return 0.0;
}

ScenarioParams SimulationConfig::params_for(Scenario scenario) const {
    ScenarioParams p;
    p.scenario = scenario;
    p.fc_ghz = fc_ghz;
    p.h_e = h_e;
    p.h_blg = h_blg;
    p.street_width = street_width;
    p.sigma_los_db = scenario == Scenario::UMa ? sigma_los_uma_db : sigma_los_rma_db;
    p.sigma_nlos_db = scenario == Scenario::UMa ? sigma_nlos_uma_db : sigma_nlos_rma_db;
    p.los_mode = los_mode;
    return p;
}

namespace {

template <typename T>
void require_unique(const std::vector<T>& values, const char* name) {
    std::set<T> seen(values.begin(), values.end());
    if (seen.size() != values.size()) {
        throw ConfigError(std::string(name) + " contains duplicate entries");
    }
}

} // namespace

void SimulationConfig::validate() const {
    if (scenarios.empty() || isd_list.empty() || altitude_list.empty() || positions.empty()) {
        throw ConfigError("scenario, isd, altitude and position lists must be non-empty");
    }
    require_unique(scenarios, "scenario");
    require_unique(isd_list, "isd_m");
    require_unique(altitude_list, "altitude_m");
    require_unique(positions, "positions");
    if (trials < 1) {
        throw ConfigError("trials must be >= 1, got " + std::to_string(trials));
    }
    if (threads < 1) {
        throw ConfigError("threads must be >= 1, got " + std::to_string(threads));
    }
    if (!(bs_height > 0.0) || !std::isfinite(bs_height)) {
        throw ConfigError("bs_height_m must be positive");
    }
    for (double isd : isd_list) {
        if (!(isd > 0.0) || !std::isfinite(isd)) {
            throw ConfigError("isd_m entries must be positive, got " + std::to_string(isd));
        }
    }
    for (double h : altitude_list) {
        if (!(h > 0.0) || !std::isfinite(h)) {
            throw ConfigError("altitude_m entries must be positive, got " + std::to_string(h));
        }
        bool has_uma = std::find(scenarios.begin(), scenarios.end(), Scenario::UMa) != scenarios.end();
        if (has_uma && h < h_e) {
            throw ConfigError("altitude_m " + std::to_string(h) + " is below h_e_m; UMa breakpoint undefined");
        }
        bool has_center = std::find(positions.begin(), positions.end(), PositionLabel::CellCenter) != positions.end();
        if (has_center && h == bs_height) {
            throw ConfigError("altitude_m equal to bs_height_m puts the cell-center UAV on the antenna");
        }
    }
    if (bs_height < h_e) {
        throw ConfigError("bs_height_m must not be below h_e_m");
    }
    radio.validate();
    antenna.validate();
    for (Scenario s : scenarios) {
        params_for(s).validate();
    }
}

double quantile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty()) {
        throw UsageError("quantile of an empty sample");
    }
    const double rank = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(rank));
    if (lo + 1 >= sorted.size()) {
        return sorted.back();
    }
    const double frac = rank - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

KpiStats aggregate(std::span<const KpiSample> samples, Metric metric) {
    if (samples.empty()) {
        throw UsageError("aggregate: no samples");
    }
    std::vector<double> values;
    values.reserve(samples.size());
    for (const auto& s : samples) {
        values.push_back(metric_value(s, metric));
    }
    KpiStats st;
    st.metric = metric;
    st.n = values.size();
    st.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    std::sort(values.begin(), values.end());
    st.median = quantile_sorted(values, 0.5);
    st.p05 = quantile_sorted(values, 0.05);
    st.p95 = quantile_sorted(values, 0.95);
    return st;
}

const AxisResult* SweepResult::find(Scenario scenario, double isd, double altitude,
                                    std::optional<PositionLabel> position) const {
    for (const auto& row : rows) {
        const auto& p = row.point;
        if (p.scenario == scenario && p.isd == isd && p.altitude == altitude && p.position == position) {
            return &row;
        }
    }
    return nullptr;
}

std::vector<LinkBudget> trial_budgets(const TrialInputs& in, const UavPosition& uav, std::uint64_t trial_index) {
    std::vector<LinkBudget> budgets;
    budgets.reserve(in.layout.sectors.size());
    for (const auto& sector : in.layout.sectors) {
        const LinkGeometry link = wrapped_link(in.layout, uav, sector);
        const double g = gain(link, sector.boresight_deg, in.antenna);
        RngStream rng(in.master_seed, trial_index, static_cast<std::uint64_t>(sector.sector_id));
        const auto eff = effective_pathloss(link, in.channel, sector.bs_height, uav.h, rng);
        budgets.push_back(make_budget(sector.sector_id, g, eff.pathloss_db, eff.state, in.radio));
    }
    return budgets;
}

KpiSample run_trial(const TrialInputs& in, const UavPosition& uav, std::uint64_t trial_index) {
    const auto budgets = trial_budgets(in, uav, trial_index);
    return evaluate_sample(budgets, in.radio);
}

namespace {

void finish_row(AxisResult& row) {
    for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
        row.stats[m] = aggregate(row.samples, kAllMetrics[m]);
    }
}

} // namespace

SweepResult run_sweep(const SimulationConfig& config) {
    config.validate();

    auto scenarios = config.scenarios;
    std::sort(scenarios.begin(), scenarios.end(),
              [](Scenario a, Scenario b) { return to_string(a) < to_string(b); });
    auto isds = config.isd_list;
    std::sort(isds.begin(), isds.end());
    auto altitudes = config.altitude_list;
    std::sort(altitudes.begin(), altitudes.end());
    auto positions = config.positions;
    std::sort(positions.begin(), positions.end());
    const bool pooled = positions.size() > 1;

    std::vector<DeploymentLayout> layouts;
    layouts.reserve(isds.size());
    for (double isd : isds) {
        layouts.push_back(build_layout(isd, config.bs_height, config.boresights_deg));
    }
    std::vector<ScenarioParams> params;
    for (Scenario s : scenarios) {
        params.push_back(config.params_for(s));
    }

    struct Task {
        std::size_t scenario_idx;
        std::size_t isd_idx;
        double altitude;
        PositionLabel position;
        std::size_t row;
    };

    SweepResult result;
    result.master_seed = config.master_seed;
    std::vector<Task> tasks;
    for (std::size_t si = 0; si < scenarios.size(); ++si) {
        for (std::size_t ii = 0; ii < isds.size(); ++ii) {
            for (double h : altitudes) {
                for (PositionLabel pos : positions) {
                    tasks.push_back({si, ii, h, pos, result.rows.size()});
                    result.rows.push_back({{scenarios[si], isds[ii], h, pos}, {}, {}});
                }
                if (pooled) {
                    result.rows.push_back({{scenarios[si], isds[ii], h, std::nullopt}, {}, {}});
                }
            }
        }
    }

    auto run_task = [&](const Task& t) {
        const TrialInputs in{layouts[t.isd_idx], params[t.scenario_idx], config.radio, config.antenna,
                             config.master_seed};
        const UavPosition uav = make_uav(t.position, isds[t.isd_idx], t.altitude);
        auto& row = result.rows[t.row];
        row.samples.reserve(static_cast<std::size_t>(config.trials));
        for (int trial = 0; trial < config.trials; ++trial) {
            row.samples.push_back(run_trial(in, uav, static_cast<std::uint64_t>(trial)));
        }
        finish_row(row);
    };

    const auto n_threads = std::min<std::size_t>(static_cast<std::size_t>(config.threads), tasks.size());
    if (n_threads <= 1) {
        for (const auto& t : tasks) {
            run_task(t);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> workers;
        for (std::size_t w = 0; w < n_threads; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
                    try {
                        run_task(tasks[i]);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
        for (auto& w : workers) {
            w.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    if (pooled) {
        // Pooled rows directly follow the per-position rows of their axis point.
        for (std::size_t r = 0; r < result.rows.size(); ++r) {
            auto& row = result.rows[r];
            if (row.point.position) {
                continue;
            }
            for (std::size_t k = r - positions.size(); k < r; ++k) {
                const auto& src = result.rows[k].samples;
                row.samples.insert(row.samples.end(), src.begin(), src.end());
            }
            finish_row(row);
        }
    }
    return result;
}

} // namespace uavsim
