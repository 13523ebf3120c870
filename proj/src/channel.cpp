#include "uavsim/channel.hpp"

#include "uavsim/error.hpp"
#include "uavsim/units.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace uavsim {

std::string_view to_string(Scenario scenario) {
    return scenario == Scenario::UMa ? "uma" : "rma";
}

Scenario parse_scenario(std::string_view text) {
    if (text == "uma" || text == "UMa") {
        return Scenario::UMa;
    }
    if (text == "rma" || text == "RMa") {
        return Scenario::RMa;
    }
    throw ConfigError("unknown scenario '" + std::string(text) + "' (expected uma or rma)");
}

std::string_view to_string(LosMode mode) {
    switch (mode) {
    case LosMode::Model:
        return "model";
    case LosMode::ForceLos:
        return "los";
    case LosMode::ForceNlos:
        return "nlos";
    }
    return "?";
}

LosMode parse_los_mode(std::string_view text) {
    if (text == "model") {
        return LosMode::Model;
    }
    if (text == "los") {
        return LosMode::ForceLos;
    }
    if (text == "nlos") {
        return LosMode::ForceNlos;
    }
    throw ConfigError("unknown los_mode '" + std::string(text) + "' (expected model, los or nlos)");
}

void ScenarioParams::validate() const {
    if (!(fc_ghz > 0.0) || !std::isfinite(fc_ghz)) {
        throw ConfigError("fc_ghz must be positive");
    }
    if (!(sigma_los_db >= 0.0) || !(sigma_nlos_db >= 0.0)) {
        throw ConfigError("shadowing sigma must be non-negative");
    }
    if (!(h_e >= 0.0) || !(h_blg > 0.0) || !(street_width > 0.0)) {
        throw ConfigError("h_e must be non-negative; h_blg and street_width positive");
    }
}

ScenarioParams default_params(Scenario scenario) {
    ScenarioParams p;
    p.scenario = scenario;
    p.sigma_los_db = 4.0;
    p.sigma_nlos_db = scenario == Scenario::UMa ? 6.0 : 8.0;
    return p;
}

double breakpoint_distance(const ScenarioParams& p, double bs_height, double h) {
    const double fc_hz = p.fc_ghz * 1.0e9;
    if (p.scenario == Scenario::UMa) {
        if (h < p.h_e || bs_height < p.h_e) {
            throw DomainError("UMa breakpoint needs heights >= h_e = " + std::to_string(p.h_e) +
                              " m, got h = " + std::to_string(h));
        }
        return 4.0 * (bs_height - p.h_e) * (h - p.h_e) * fc_hz / kSpeedOfLight;
    }
    if (!(h > 0.0)) {
        throw DomainError("RMa breakpoint needs h > 0, got " + std::to_string(h));
    }
    return 2.0 * std::numbers::pi * bs_height * h * fc_hz / kSpeedOfLight;
}

namespace {

void require_positive_d3d(double d3d) {
    if (!(d3d > 0.0)) {
        throw DomainError("path loss needs d3d > 0, got " + std::to_string(d3d));
    }
}

double uma_nlos_prime(const ScenarioParams& p, double d3d, double h) {
    return 13.54 + 39.08 * std::log10(d3d) + 20.0 * std::log10(p.fc_ghz) - 0.6 * (h - 1.5);
}

double rma_nlos_prime(const ScenarioParams& p, double d3d, double bs_height, double h) {
    const double hbl = p.h_blg;
    const double ratio = hbl / bs_height;
    const double log_h = std::log10(11.75 * h);
    return 161.04 - 7.1 * std::log10(p.street_width) + 7.5 * std::log10(hbl) -
           (24.37 - 3.7 * ratio * ratio) * std::log10(bs_height) +
           (43.42 - 3.1 * std::log10(bs_height)) * (std::log10(d3d) - 3.0) + 20.0 * std::log10(p.fc_ghz) -
           (3.2 * log_h * log_h - 4.97);
}

} // namespace

double pathloss_los_fs(const ScenarioParams& p, double d3d, double h) {
    require_positive_d3d(d3d);
    if (p.scenario == Scenario::UMa) {
        return 28.0 + 22.0 * std::log10(d3d) + 20.0 * std::log10(p.fc_ghz);
    }
    if (!(h > 0.0)) {
        throw DomainError("RMa path loss needs h > 0");
    }
    return 20.0 * std::log10(40.0 * std::numbers::pi * d3d * p.fc_ghz / 3.0) +
           std::min(0.03 * std::pow(h, 1.72), 10.0) * std::log10(d3d) -
           std::min(0.044 * std::pow(p.h_blg, 1.72), 14.77) + 0.002 * std::log10(h) * d3d;
}

double pathloss_los_gr(const ScenarioParams& p, double d3d, double bs_height, double h) {
    require_positive_d3d(d3d);
    const double d_bp = breakpoint_distance(p, bs_height, h);
    if (p.scenario == Scenario::UMa) {
        const double dh = bs_height - h;
        return 28.0 + 40.0 * std::log10(d3d) + 20.0 * std::log10(p.fc_ghz) - 9.0 * std::log10(d_bp * d_bp + dh * dh);
    }
    return pathloss_los_fs(p, d3d, h) + 40.0 * std::log10(d3d / d_bp);
}

double pathloss_los(const ScenarioParams& p, double d2d, double d3d, double bs_height, double h) {
    require_positive_d3d(d3d);
    const double d_bp = breakpoint_distance(p, bs_height, h);
    return d2d <= d_bp ? pathloss_los_fs(p, d3d, h) : pathloss_los_gr(p, d3d, bs_height, h);
}

double pathloss_nlos(const ScenarioParams& p, double d2d, double d3d, double bs_height, double h) {
    const double los = pathloss_los(p, d2d, d3d, bs_height, h);
    const double prime =
        p.scenario == Scenario::UMa ? uma_nlos_prime(p, d3d, h) : rma_nlos_prime(p, d3d, bs_height, h);
    return std::max(los, prime);
}

double los_probability(Scenario scenario, double d2d, double h) {
    double prob = 1.0;
    if (scenario == Scenario::RMa) {
        if (d2d > 10.0) {
            prob = std::exp(-(d2d - 10.0) / 1000.0);
        }
    } else if (d2d > 18.0) {
        // C'(h) is extended past 23 m; the clamp below bounds the result.
        const double c_prime = h <= 13.0 ? 0.0 : std::pow((h - 13.0) / 10.0, 1.5);
        const double near = 18.0 / d2d + std::exp(-d2d / 63.0) * (1.0 - 18.0 / d2d);
        const double r = d2d / 100.0;
        prob = near * (1.0 + c_prime * 1.25 * r * r * r * std::exp(-d2d / 150.0));
    }
    return std::clamp(prob, 0.0, 1.0);
}

LinkState draw_state(double p_los, RngStream& rng) {
    return rng.uniform() < p_los ? LinkState::LOS : LinkState::NLOS;
}

double draw_shadowing(LinkState state, const ScenarioParams& p, RngStream& rng) {
    const double sigma = state == LinkState::LOS ? p.sigma_los_db : p.sigma_nlos_db;
    return sigma * rng.standard_normal();
}

EffectivePathloss effective_pathloss(const LinkGeometry& link, const ScenarioParams& p, double bs_height, double h,
                                     RngStream& rng) {
    EffectivePathloss out;
    out.state.los_prob = los_probability(p.scenario, link.d2d, h);
    const LinkState drawn = draw_state(out.state.los_prob, rng);
    switch (p.los_mode) {
    case LosMode::Model:
        out.state.state = drawn;
        break;
    case LosMode::ForceLos:
        out.state.state = LinkState::LOS;
        break;
    case LosMode::ForceNlos:
        out.state.state = LinkState::NLOS;
        break;
    }

    const double deterministic = out.state.state == LinkState::LOS
                                     ? pathloss_los(p, link.d2d, link.d3d, bs_height, h)
                                     : pathloss_nlos(p, link.d2d, link.d3d, bs_height, h);
    out.state.shadow_db = draw_shadowing(out.state.state, p, rng);
    out.pathloss_db = deterministic + out.state.shadow_db;
    return out;
}

} // namespace uavsim
