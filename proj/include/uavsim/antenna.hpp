#pragma once

#include "uavsim/geometry.hpp"

namespace uavsim {

struct AntennaConfig {
    double g_max_dbi = 17.0;
    double tilt_deg = 12.0;
    double theta_3db_deg = 65.0;
    double phi_3db_deg = 65.0;
    double sla_v_db = 30.0;
    double a_m_db = 30.0;

    void validate() const;

    bool operator==(const AntennaConfig&) const = default;
};

struct AngularOffsets {
    double d_phi_deg = 0.0;   // wrapped to [-180, 180)
    double d_theta_deg = 0.0; // not wrapped
};

struct Attenuation {
    double vertical_db = 0.0;
    double horizontal_db = 0.0;
    double total_db = 0.0;
};

AngularOffsets angular_offsets(double phi_deg, double theta_deg, double boresight_deg, double tilt_deg);

Attenuation attenuation(const AngularOffsets& offsets, const AntennaConfig& cfg);

/// Composite sector gain toward the UAV, in dBi. Always within
/// [g_max - a_m, g_max].
double gain(const LinkGeometry& link, double boresight_deg, const AntennaConfig& cfg);

} // namespace uavsim
