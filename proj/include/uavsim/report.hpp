#pragma once

#include "uavsim/engine.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace uavsim {

inline constexpr std::string_view kCsvHeader =
    "scenario,isd_m,altitude_m,position,metric,unit,mean,median,p05,p95,n_trials,master_seed";

/// Numeric fields printed with six significant digits.
std::string format_number(double value);

void write_csv(const SweepResult& result, std::ostream& out);

/// Throws IoError when `path` cannot be written.
void emit_csv(const SweepResult& result, const std::string& path);

std::string emit_summary(const SweepResult& result);

struct TrendCheck {
    std::string id;     // "7a" .. "7d"
    std::string name;
    bool applicable = true; // false if the sweep lacks the axis points the check needs
    bool passed = false;
    std::string detail;
};

/// Monotone-trend checks on cell-middle rows of one scenario. The median
/// check (7d) only exists for UMa.
std::vector<TrendCheck> check_trends(const SweepResult& result, Scenario scenario);

} // namespace uavsim
