#include "uavsim/antenna.hpp"

#include "uavsim/error.hpp"
#include "uavsim/units.hpp"

#include <algorithm>
#include <string>

namespace uavsim {

void AntennaConfig::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw ConfigError(std::string(name) + " must be positive, got " + std::to_string(v));
        }
    };
    positive(theta_3db_deg, "theta_3db_deg");
    positive(phi_3db_deg, "phi_3db_deg");
    positive(sla_v_db, "sla_v_db");
    positive(a_m_db, "a_m_db");
    if (!std::isfinite(g_max_dbi) || !std::isfinite(tilt_deg)) {
        throw ConfigError("g_max_dbi and tilt_deg must be finite");
    }
}

AngularOffsets angular_offsets(double phi_deg, double theta_deg, double boresight_deg, double tilt_deg) {
    return {wrap_signed_deg(phi_deg - boresight_deg), theta_deg + tilt_deg};
}

Attenuation attenuation(const AngularOffsets& offsets, const AntennaConfig& cfg) {
    const double v = offsets.d_theta_deg / cfg.theta_3db_deg;
    const double h = offsets.d_phi_deg / cfg.phi_3db_deg;
    Attenuation a;
    a.vertical_db = std::min(cfg.sla_v_db, 12.0 * v * v);
    a.horizontal_db = std::min(cfg.a_m_db, 12.0 * h * h);
    a.total_db = std::min(cfg.a_m_db, a.vertical_db + a.horizontal_db);
    return a;
}

double gain(const LinkGeometry& link, double boresight_deg, const AntennaConfig& cfg) {
    const auto offsets = angular_offsets(link.phi_deg, link.theta_deg, boresight_deg, cfg.tilt_deg);
    return cfg.g_max_dbi - attenuation(offsets, cfg).total_db;
}

} // namespace uavsim
