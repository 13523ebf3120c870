#include "uavsim/report.hpp"

#include "uavsim/error.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace uavsim {

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

namespace {

std::string_view position_name(const std::optional<PositionLabel>& pos) {
    return pos ? to_string(*pos) : std::string_view("pooled");
}

} // namespace

void write_csv(const SweepResult& result, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& row : result.rows) {
        const auto& p = row.point;
        for (Metric m : kAllMetrics) {
            const auto& st = row.stats_for(m);
            out << to_string(p.scenario) << ',' << format_number(p.isd) << ',' << format_number(p.altitude) << ','
                << position_name(p.position) << ',' << to_string(m) << ',' << unit_of(m) << ','
                << format_number(st.mean) << ',' << format_number(st.median) << ',' << format_number(st.p05) << ','
                << format_number(st.p95) << ',' << st.n << ',' << result.master_seed << '\n';
        }
    }
}

void emit_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_csv(result, out);
    out.flush();
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

namespace {

struct Grid {
    std::vector<double> isds;
    std::vector<double> altitudes;
};

Grid grid_of(const SweepResult& result, Scenario scenario) {
    Grid g;
    for (const auto& row : result.rows) {
        if (row.point.scenario != scenario) {
            continue;
        }
        if (std::find(g.isds.begin(), g.isds.end(), row.point.isd) == g.isds.end()) {
            g.isds.push_back(row.point.isd);
        }
        if (std::find(g.altitudes.begin(), g.altitudes.end(), row.point.altitude) == g.altitudes.end()) {
            g.altitudes.push_back(row.point.altitude);
        }
    }
    std::sort(g.isds.begin(), g.isds.end());
    std::sort(g.altitudes.begin(), g.altitudes.end());
    return g;
}

std::vector<Scenario> scenarios_of(const SweepResult& result) {
    std::vector<Scenario> out;
    for (const auto& row : result.rows) {
        if (std::find(out.begin(), out.end(), row.point.scenario) == out.end()) {
            out.push_back(row.point.scenario);
        }
    }
    return out;
}

std::optional<PositionLabel> reference_position(const SweepResult& result) {
    bool any_pooled = false;
    std::optional<PositionLabel> first;
    for (const auto& row : result.rows) {
        if (row.point.position == PositionLabel::CellMiddle) {
            return PositionLabel::CellMiddle;
        }
        if (!row.point.position) {
            any_pooled = true;
        } else if (!first) {
            first = row.point.position;
        }
    }
    return any_pooled ? std::nullopt : first;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) {
        s.insert(0, width - s.size(), ' ');
    }
    return s;
}

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const AxisResult* middle_row(const SweepResult& r, Scenario s, double isd, double h) {
    return r.find(s, isd, h, PositionLabel::CellMiddle);
}

TrendCheck not_applicable(std::string id, std::string name, std::string why) {
    return {std::move(id), std::move(name), false, false, std::move(why)};
}

// Means (or medians) of one metric along ISD at fixed altitude, or along
// altitude at fixed ISD.
std::vector<double> series(const SweepResult& r, Scenario s, Metric m, const std::vector<double>& isds,
                           const std::vector<double>& altitudes, bool use_median) {
    std::vector<double> out;
    for (double isd : isds) {
        for (double h : altitudes) {
            const auto* row = middle_row(r, s, isd, h);
            const auto& st = row->stats_for(m);
            out.push_back(use_median ? st.median : st.mean);
        }
    }
    return out;
}

bool non_increasing(const std::vector<double>& v) {
    return std::is_sorted(v.rbegin(), v.rend());
}

bool non_decreasing(const std::vector<double>& v) {
    return std::is_sorted(v.begin(), v.end());
}

std::string list_values(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + fixed2(v[i]);
    }
    return out + "]";
}

std::size_t argmax(const std::vector<double>& v) {
    return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

bool within(double value, double anchor, double tolerance) {
    return std::abs(value - anchor) <= tolerance;
}

// Median RSRP/RSRQ decoupling with altitude (UMa). The ISD behind the
// reference curves is not known, so the check passes when any swept ISD
// meets every condition.
TrendCheck check_median_decoupling(const SweepResult& result) {
    TrendCheck c{"7d", "UMa median RSRP drops >= 3 dB and median RSRQ >= 2 dB from best altitude to 300 m, "
                       "levels within 8 dB of (-70, -75) dBm and (-12, -15) dB",
                 true, false, ""};
    const Grid g = grid_of(result, Scenario::UMa);
    const bool has_300 = std::find(g.altitudes.begin(), g.altitudes.end(), 300.0) != g.altitudes.end();
    if (g.isds.empty() || !has_300 || g.altitudes.size() < 2 ||
        !middle_row(result, Scenario::UMa, g.isds.front(), 300.0)) {
        return not_applicable(c.id, c.name, "needs UMa cell-middle rows including 300 m and a lower altitude");
    }
    constexpr double kTolerance = 8.0;
    for (double isd : g.isds) {
        const auto rsrp = series(result, Scenario::UMa, Metric::RSRP, {isd}, g.altitudes, true);
        const auto rsrq = series(result, Scenario::UMa, Metric::RSRQ, {isd}, g.altitudes, true);
        const auto top = g.altitudes.size() - 1; // 300 m is the largest altitude in the sweep
        const double rsrp_best = rsrp[argmax(rsrp)];
        const double rsrq_best = rsrq[argmax(rsrq)];
        const double rsrp_drop = rsrp_best - rsrp[top];
        const double rsrq_drop = rsrq_best - rsrq[top];
        const bool ok = g.altitudes[top] == 300.0 && rsrp_drop >= 3.0 && rsrq_drop >= 2.0 &&
                        within(rsrp_best, -70.0, kTolerance) && within(rsrp[top], -75.0, kTolerance) &&
                        within(rsrq_best, -12.0, kTolerance) && within(rsrq[top], -15.0, kTolerance);
        c.passed = c.passed || ok;
        c.detail += "ISD " + format_number(isd) + (ok ? " ok" : " no") + " (RSRP " + fixed2(rsrp_best) + " -> " +
                    fixed2(rsrp[top]) + ", RSRQ " + fixed2(rsrq_best) + " -> " + fixed2(rsrq[top]) + "); ";
    }
    return c;
}

} // namespace

std::vector<TrendCheck> check_trends(const SweepResult& result, Scenario scenario) {
    std::vector<TrendCheck> checks;
    const Grid g = grid_of(result, scenario);
    const bool has_middle =
        !g.isds.empty() && middle_row(result, scenario, g.isds.front(), g.altitudes.front()) != nullptr;

    // 7a
    {
        TrendCheck c{"7a", "mean RSRP non-increasing in ISD at every altitude", true, true, ""};
        if (!has_middle || g.isds.size() < 2) {
            c = not_applicable(c.id, c.name, "needs cell-middle rows at two or more ISDs");
        } else {
            for (double h : g.altitudes) {
                const auto v = series(result, scenario, Metric::RSRP, g.isds, {h}, false);
                if (!non_increasing(v)) {
                    c.passed = false;
                    c.detail += "h=" + format_number(h) + " " + list_values(v) + "; ";
                }
            }
        }
        checks.push_back(c);
    }

    // 7b
    {
        TrendCheck c{"7b", "mean SINR and RSRQ non-decreasing in ISD at altitudes >= 50 m", true, true, ""};
        std::vector<double> high;
        std::copy_if(g.altitudes.begin(), g.altitudes.end(), std::back_inserter(high),
                     [](double h) { return h >= 50.0; });
        if (!has_middle || g.isds.size() < 2 || high.empty()) {
            c = not_applicable(c.id, c.name, "needs cell-middle rows at two or more ISDs and altitudes >= 50 m");
        } else {
            for (double h : high) {
                for (Metric m : {Metric::SINR, Metric::RSRQ}) {
                    const auto v = series(result, scenario, m, g.isds, {h}, false);
                    if (!non_decreasing(v)) {
                        c.passed = false;
                        c.detail +=
                            std::string(to_string(m)) + " h=" + format_number(h) + " " + list_values(v) + "; ";
                    }
                }
            }
        }
        checks.push_back(c);
    }

    // 7c
    {
        TrendCheck c{"7c", "mean SINR non-increasing in altitude from 50 m to 300 m at ISD 500 m", true, true, ""};
        std::vector<double> span;
        std::copy_if(g.altitudes.begin(), g.altitudes.end(), std::back_inserter(span),
                     [](double h) { return h >= 50.0 && h <= 300.0; });
        const bool has_500 = std::find(g.isds.begin(), g.isds.end(), 500.0) != g.isds.end();
        if (!has_middle || !has_500 || span.size() < 2) {
            c = not_applicable(c.id, c.name, "needs ISD 500 m and two or more altitudes in [50, 300] m");
        } else {
            const auto v = series(result, scenario, Metric::SINR, {500.0}, span, false);
            c.passed = non_increasing(v);
            c.detail = list_values(v);
        }
        checks.push_back(c);
    }

    if (scenario == Scenario::UMa) {
        checks.push_back(check_median_decoupling(result));
    }
    return checks;
}

std::string emit_summary(const SweepResult& result) {
    std::ostringstream out;
    const auto ref = reference_position(result);
    out << "master seed " << result.master_seed << ", statistics at position " << position_name(ref) << "\n";
    for (Scenario s : scenarios_of(result)) {
        const Grid g = grid_of(result, s);
        out << "\n== " << to_string(s) << " ==\n";
        for (double isd : g.isds) {
            out << "ISD " << format_number(isd) << " m\n";
            out << pad("alt_m", 8) << pad("RSRP_dBm", 11) << pad("RSRQ_dB", 10) << pad("SINR_dB", 10) << "\n";
            for (double h : g.altitudes) {
                const auto* row = result.find(s, isd, h, ref);
                if (!row) {
                    continue;
                }
                out << pad(format_number(h), 8) << pad(fixed2(row->stats_for(Metric::RSRP).mean), 11)
                    << pad(fixed2(row->stats_for(Metric::RSRQ).mean), 10)
                    << pad(fixed2(row->stats_for(Metric::SINR).mean), 10) << "\n";
            }
        }
        out << "trend checks (cell-middle):\n";
        for (const auto& c : check_trends(result, s)) {
            out << "  [" << (c.applicable ? (c.passed ? "PASS" : "FAIL") : "SKIP") << "] " << c.id << " " << c.name;
            if (!c.detail.empty()) {
                out << " -- " << c.detail;
            }
            out << "\n";
        }
    }
    return out.str();
}

} // namespace uavsim
