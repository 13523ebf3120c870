#pragma once

#include "uavsim/channel.hpp"

#include <Eigen/Core>

#include <span>
#include <vector>

namespace uavsim {

struct RadioConfig {
    double p_tx_dbm = 46.0;
    double l_impl_db = 8.0;
    int n_rb = 51;
    double scs_hz = 30.0e3;
    double noise_figure_db = 7.0;
    double rho = 1.0;
    // Recorded for completeness; no KPI formula uses them.
    double bandwidth_hz = 20.0e6;
    int ssb_rbs = 20;

    void validate() const;

    bool operator==(const RadioConfig&) const = default;
};

struct LinkBudget {
    int sector_id = 0;
    double prx_dbm = 0.0;
    double rsrp_dbm = 0.0;
    double gain_dbi = 0.0;
    double pathloss_db = 0.0;
    PropagationState state;
};

struct KpiSample {
    int serving_sector = 0;
    double serving_prx_dbm = 0.0;
    double rsrp_dbm = 0.0;
    double rsrq_db = 0.0;
    double sinr_db = 0.0;
    double interference_dbm = 0.0; // -inf when there is no interference
    double rssi_dbm = 0.0;
    double noise_dbm = 0.0;
};

/// Thermal noise over the occupied bandwidth 12 * N_RB * SCS.
double noise_power(const RadioConfig& cfg);

double received_power(double gain_dbi, double effective_pathloss_db, const RadioConfig& cfg);

double rsrp(double prx_dbm, const RadioConfig& cfg);

LinkBudget make_budget(int sector_id, double gain_dbi, double effective_pathloss_db, const PropagationState& state,
                       const RadioConfig& cfg);

/// Index into `budgets` of the strongest RSRP; ties go to the lowest sector id.
std::size_t associate(std::span<const LinkBudget> budgets);

/// rho * sum of received powers of every non-serving entry, in mW.
double interference(std::span<const LinkBudget> budgets, std::size_t serving, const RadioConfig& cfg);

/// Same sum over a vector of received powers in dBm.
double interference(const Eigen::ArrayXd& prx_dbm, Eigen::Index serving, double rho);

double sinr(double prx_serving_dbm, double interference_mw, double noise_dbm);

/// RSSI combines serving power, interference and noise in mW.
double rssi(double prx_serving_dbm, double interference_mw, double noise_dbm);

double rsrq(double rsrp_dbm, double rssi_dbm, const RadioConfig& cfg);

KpiSample evaluate_sample(std::span<const LinkBudget> budgets, const RadioConfig& cfg);

} // namespace uavsim
