#pragma once

#include <cmath>
#include <numbers>

namespace uavsim {

inline constexpr double kSpeedOfLight = 3.0e8; // m/s
inline constexpr double kThermalNoiseDbmPerHz = -174.0;

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

/// Wraps an angle in degrees to [-180, 180).
inline double wrap_signed_deg(double deg) {
    double w = std::fmod(deg + 180.0, 360.0);
    if (w < 0.0) {
        w += 360.0;
    }
    if (w >= 360.0) {
        w = 0.0;
    }
    return w - 180.0;
}

/// Wraps an angle in degrees to [0, 360).
inline double wrap_unsigned_deg(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w < 0.0) {
        w += 360.0;
    }
    // fmod of a tiny negative value can round up to exactly 360
    return w >= 360.0 ? 0.0 : w;
}

} // namespace uavsim
