#pragma once

#include "uavsim/engine.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace uavsim {

/// Flat `key = value` configuration. `#` starts a comment; lists are
/// comma-separated. Keys mirror the simulation parameter table, e.g.
///
///     scenario   = uma, rma
///     isd_m      = 500, 1000
///     altitude_m = 10, 50, 300
///     trials     = 200
///     rho        = 1
///
/// See config_keys() for the full set.
const std::vector<std::string_view>& config_keys();

/// Applies one setting. `location` is used in error messages
/// (e.g. "run.cfg:12" or "--trials").
void apply_setting(SimulationConfig& cfg, std::string_view key, std::string_view value, std::string_view location);

void apply_config_text(SimulationConfig& cfg, std::string_view text, std::string_view source);

/// Defaults, then the file (if non-empty path). Validates the result.
SimulationConfig load_config(const std::string& path);

/// Every key in config_keys() with full round-trip precision.
std::string serialize_config(const SimulationConfig& cfg);

} // namespace uavsim
