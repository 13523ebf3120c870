#pragma once

#include "uavsim/geometry.hpp"
#include "uavsim/rng.hpp"

#include <string_view>

namespace uavsim {

enum class Scenario { UMa, RMa };

std::string_view to_string(Scenario scenario);
Scenario parse_scenario(std::string_view text);

enum class LinkState { LOS, NLOS };

/// How the per-link LOS state is decided. `Model` draws from the LOS
/// probability; the forced modes pin every link and are meant for
/// deterministic checks.
enum class LosMode { Model, ForceLos, ForceNlos };

std::string_view to_string(LosMode mode);
LosMode parse_los_mode(std::string_view text);

struct ScenarioParams {
    Scenario scenario = Scenario::UMa;
    double fc_ghz = 3.5;
    double h_e = 1.0;             // UMa effective environment height
    double h_blg = 5.0;           // RMa average building height
    double street_width = 20.0;   // RMa average street width
    double sigma_los_db = 4.0;
    double sigma_nlos_db = 6.0;
    LosMode los_mode = LosMode::Model;

    void validate() const;
};

/// Table I parameters for a scenario (sigma_NLOS is 6 dB UMa, 8 dB RMa).
ScenarioParams default_params(Scenario scenario);

struct PropagationState {
    LinkState state = LinkState::NLOS;
    double los_prob = 0.0;
    double shadow_db = 0.0;
};

/// Breakpoint distance in metres. Frequency enters in Hz here.
double breakpoint_distance(const ScenarioParams& p, double bs_height, double h);

double pathloss_los(const ScenarioParams& p, double d2d, double d3d, double bs_height, double h);
double pathloss_nlos(const ScenarioParams& p, double d2d, double d3d, double bs_height, double h);

/// Free-space-dominated and ground-reflection branches of the two-slope
/// LOS model, exposed for continuity checks.
double pathloss_los_fs(const ScenarioParams& p, double d3d, double h);
double pathloss_los_gr(const ScenarioParams& p, double d3d, double bs_height, double h);

double los_probability(Scenario scenario, double d2d, double h);

LinkState draw_state(double p_los, RngStream& rng);

double draw_shadowing(LinkState state, const ScenarioParams& p, RngStream& rng);

struct EffectivePathloss {
    double pathloss_db = 0.0; // L'_s = L_s + X_s
    PropagationState state;
};

/// LOS probability, state draw, deterministic path loss for the drawn
/// state and log-normal shadowing. The uniform for the state is always
/// drawn first, even in a forced LOS mode, then the shadowing deviate.
EffectivePathloss effective_pathloss(const LinkGeometry& link, const ScenarioParams& p, double bs_height, double h,
                                     RngStream& rng);

} // namespace uavsim
