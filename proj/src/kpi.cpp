#include "uavsim/kpi.hpp"

#include "uavsim/error.hpp"
#include "uavsim/units.hpp"

#include <cmath>
#include <string>

namespace uavsim {

void RadioConfig::validate() const {
    if (n_rb <= 0) {
        throw ConfigError("n_rb must be positive, got " + std::to_string(n_rb));
    }
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw ConfigError("rho must lie in [0, 1], got " + std::to_string(rho));
    }
    if (!(scs_hz > 0.0) || !(bandwidth_hz > 0.0)) {
        throw ConfigError("scs and bandwidth must be positive");
    }
    if (ssb_rbs < 0) {
        throw ConfigError("ssb_rbs must be non-negative");
    }
    if (!std::isfinite(p_tx_dbm) || !std::isfinite(l_impl_db) || !std::isfinite(noise_figure_db)) {
        throw ConfigError("p_tx_dbm, l_impl_db and noise_figure_db must be finite");
    }
}

namespace {
double resource_elements(const RadioConfig& cfg) {
    return 12.0 * static_cast<double>(cfg.n_rb);
}
} // namespace

double noise_power(const RadioConfig& cfg) {
    return kThermalNoiseDbmPerHz + linear_to_db(resource_elements(cfg) * cfg.scs_hz) + cfg.noise_figure_db;
}

double received_power(double gain_dbi, double effective_pathloss_db, const RadioConfig& cfg) {
    return cfg.p_tx_dbm + gain_dbi - effective_pathloss_db - cfg.l_impl_db;
}

double rsrp(double prx_dbm, const RadioConfig& cfg) {
    return prx_dbm - linear_to_db(resource_elements(cfg));
}

LinkBudget make_budget(int sector_id, double gain_dbi, double effective_pathloss_db, const PropagationState& state,
                       const RadioConfig& cfg) {
    LinkBudget b;
    b.sector_id = sector_id;
    b.gain_dbi = gain_dbi;
    b.pathloss_db = effective_pathloss_db;
    b.prx_dbm = received_power(gain_dbi, effective_pathloss_db, cfg);
    b.rsrp_dbm = rsrp(b.prx_dbm, cfg);
    b.state = state;
    return b;
}

std::size_t associate(std::span<const LinkBudget> budgets) {
    if (budgets.empty()) {
        throw UsageError("associate: no link budgets");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < budgets.size(); ++i) {
        const auto& b = budgets[i];
        const auto& cur = budgets[best];
        if (b.rsrp_dbm > cur.rsrp_dbm || (b.rsrp_dbm == cur.rsrp_dbm && b.sector_id < cur.sector_id)) {
            best = i;
        }
    }
    return best;
}

double interference(std::span<const LinkBudget> budgets, std::size_t serving, const RadioConfig& cfg) {
    if (serving >= budgets.size()) {
        throw UsageError("interference: serving index out of range");
    }
    Eigen::ArrayXd prx(static_cast<Eigen::Index>(budgets.size()));
    for (std::size_t i = 0; i < budgets.size(); ++i) {
        prx(static_cast<Eigen::Index>(i)) = budgets[i].prx_dbm;
    }
    return interference(prx, static_cast<Eigen::Index>(serving), cfg.rho);
}

double interference(const Eigen::ArrayXd& prx_dbm, Eigen::Index serving, double rho) {
    Eigen::ArrayXd mw = (prx_dbm / 10.0 * std::log(10.0)).exp();
    mw(serving) = 0.0;
    return rho * mw.sum();
}

double sinr(double prx_serving_dbm, double interference_mw, double noise_dbm) {
    return linear_to_db(db_to_linear(prx_serving_dbm) / (interference_mw + db_to_linear(noise_dbm)));
}

double rssi(double prx_serving_dbm, double interference_mw, double noise_dbm) {
    return linear_to_db(db_to_linear(prx_serving_dbm) + interference_mw + db_to_linear(noise_dbm));
}

double rsrq(double rsrp_dbm, double rssi_dbm, const RadioConfig& cfg) {
    return rsrp_dbm - rssi_dbm + linear_to_db(static_cast<double>(cfg.n_rb));
}

KpiSample evaluate_sample(std::span<const LinkBudget> budgets, const RadioConfig& cfg) {
    const std::size_t serving = associate(budgets);
    const auto& s = budgets[serving];

    KpiSample k;
    k.serving_sector = s.sector_id;
    k.serving_prx_dbm = s.prx_dbm;
    k.rsrp_dbm = s.rsrp_dbm;
    k.noise_dbm = noise_power(cfg);
    const double i_mw = interference(budgets, serving, cfg);
    k.interference_dbm = linear_to_db(i_mw);
    k.sinr_db = sinr(s.prx_dbm, i_mw, k.noise_dbm);
    k.rssi_dbm = rssi(s.prx_dbm, i_mw, k.noise_dbm);
    k.rsrq_db = rsrq(k.rsrp_dbm, k.rssi_dbm, cfg);
    return k;
}

} // namespace uavsim
