#include "uavsim/config.hpp"

#include "uavsim/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace uavsim {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = s.find(',');
        out.push_back(trim(s.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        s.remove_prefix(comma + 1);
    }
    return out;
}

struct Setting {
    std::string_view key;
    std::string_view location;

    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError(std::string(location) + ": " + std::string(key) + ": " + what);
    }

    double to_double(std::string_view text) const {
        double v = 0.0;
        const auto* end = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(text.data(), end, v);
        if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
            fail("expected a number, got '" + std::string(text) + "'");
        }
        return v;
    }

    template <typename Int>
    Int to_integer(std::string_view text) const {
        Int v{};
        const auto* end = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(text.data(), end, v);
        if (ec != std::errc() || ptr != end) {
            fail("expected an integer, got '" + std::string(text) + "'");
        }
        return v;
    }

    std::vector<double> to_doubles(std::string_view text) const {
        std::vector<double> out;
        for (auto item : split_list(text)) {
            out.push_back(to_double(item));
        }
        return out;
    }

    double positive(std::string_view text) const {
        const double v = to_double(text);
        if (!(v > 0.0)) {
            fail("must be positive, got " + std::string(text));
        }
        return v;
    }

    double non_negative(std::string_view text) const {
        const double v = to_double(text);
        if (!(v >= 0.0)) {
            fail("must be non-negative, got " + std::string(text));
        }
        return v;
    }
};

using Handler = std::function<void(SimulationConfig&, const Setting&, std::string_view)>;

const std::vector<std::pair<std::string_view, Handler>>& handlers() {
    static const std::vector<std::pair<std::string_view, Handler>> table = {
        {"scenario",
         [](SimulationConfig& c, const Setting& s, std::string_view v) {
             c.scenarios.clear();
             if (v == "both") {
                 c.scenarios = {Scenario::UMa, Scenario::RMa};
                 return;
             }
             for (auto item : split_list(v)) {
                 try {
                     c.scenarios.push_back(parse_scenario(item));
                 } catch (const ConfigError& e) {
                     s.fail(e.what());
                 }
             }
         }},
        {"isd_m",
         [](SimulationConfig& c, const Setting& s, std::string_view v) {
             c.isd_list = s.to_doubles(v);
             for (double x : c.isd_list) {
                 if (!(x > 0.0)) {
                     s.fail("entries must be positive");
                 }
             }
         }},
        {"altitude_m",
         [](SimulationConfig& c, const Setting& s, std::string_view v) {
             c.altitude_list = s.to_doubles(v);
             for (double x : c.altitude_list) {
                 if (!(x > 0.0)) {
                     s.fail("entries must be positive");
                 }
             }
         }},
        {"positions",
         [](SimulationConfig& c, const Setting& s, std::string_view v) {
             c.positions.clear();
             for (auto item : split_list(v)) {
                 try {
                     c.positions.push_back(parse_position_label(item));
                 } catch (const ConfigError& e) {
                     s.fail(e.what());
                 }
             }
         }},
        {"trials",
         [](SimulationConfig& c, const Setting& s, std::string_view v) {
             c.trials = s.to_integer<int>(v);
             if (c.trials < 1) {
                 s.fail("must be >= 1");
             }
         }},
        {"seed", [](SimulationConfig& c, const Setting& s,
                    std::string_view v) { c.master_seed = s.to_integer<std::uint64_t>(v); }},
        {"threads",
         [](SimulationConfig& c, const Setting& s, std::string_view v) {
             c.threads = s.to_integer<int>(v);
             if (c.threads < 1) {
                 s.fail("must be >= 1");
             }
         }},
        {"los_mode",
         [](SimulationConfig& c, const Setting& s, std::string_view v) {
             try {
                 c.los_mode = parse_los_mode(v);
             } catch (const ConfigError& e) {
                 s.fail(e.what());
             }
         }},
        {"fc_ghz", [](SimulationConfig& c, const Setting& s, std::string_view v) { c.fc_ghz = s.positive(v); }},
        {"bandwidth_hz",
         [](SimulationConfig& c, const Setting& s, std::string_view v) { c.radio.bandwidth_hz = s.positive(v); }},
        {"scs_hz", [](SimulationConfig& c, const Setting& s, std::string_view v) { c.radio.scs_hz = s.positive(v); }},
        {"n_rb",
         [](SimulationConfig& c, const Setting& s, std::string_view v) {
             c.radio.n_rb = s.to_integer<int>(v);
             if (c.radio.n_rb < 1) {
                 s.fail("must be >= 1");
             }
         }},
        {"ssb_rbs",
         [](SimulationConfig& c, const Setting& s, std::string_view v) {
             c.radio.ssb_rbs = s.to_integer<int>(v);
             if (c.radio.ssb_rbs < 0) {
                 s.fail("must be >= 0");
             }
         }},
        {"p_tx_dbm", [](SimulationConfig& c, const Setting& s, std::string_view v) { c.radio.p_tx_dbm = s.to_double(v); }},
        {"noise_figure_db",
         [](SimulationConfig& c, const Setting& s, std::string_view v) { c.radio.noise_figure_db = s.to_double(v); }},
        {"l_impl_db", [](SimulationConfig& c, const Setting& s, std::string_view v) { c.radio.l_impl_db = s.to_double(v); }},
        {"rho",
         [](SimulationConfig& c, const Setting& s, std::string_view v) {
             const double r = s.to_double(v);
             if (!(r >= 0.0 && r <= 1.0)) {
                 s.fail("must lie in [0, 1], got " + std::string(v));
             }
             c.radio.rho = r;
         }},
        {"g_max_dbi", [](SimulationConfig& c, const Setting& s, std::string_view v) { c.antenna.g_max_dbi = s.to_double(v); }},
        {"phi_3db_deg",
         [](SimulationConfig& c, const Setting& s, std::string_view v) { c.antenna.phi_3db_deg = s.positive(v); }},
        {"theta_3db_deg",
         [](SimulationConfig& c, const Setting& s, std::string_view v) { c.antenna.theta_3db_deg = s.positive(v); }},
        {"tilt_deg", [](SimulationConfig& c, const Setting& s, std::string_view v) { c.antenna.tilt_deg = s.to_double(v); }},
        {"sla_v_db", [](SimulationConfig& c, const Setting& s, std::string_view v) { c.antenna.sla_v_db = s.positive(v); }},
        {"a_m_db", [](SimulationConfig& c, const Setting& s, std::string_view v) { c.antenna.a_m_db = s.positive(v); }},
        {"boresights_deg",
         [](SimulationConfig& c, const Setting& s, std::string_view v) {
             const auto list = s.to_doubles(v);
             if (list.size() != 3) {
                 s.fail("expected exactly three angles");
             }
             c.boresights_deg = {list[0], list[1], list[2]};
         }},
        {"bs_height_m", [](SimulationConfig& c, const Setting& s, std::string_view v) { c.bs_height = s.positive(v); }},
        {"h_e_m", [](SimulationConfig& c, const Setting& s, std::string_view v) { c.h_e = s.non_negative(v); }},
        {"h_blg_m", [](SimulationConfig& c, const Setting& s, std::string_view v) { c.h_blg = s.positive(v); }},
        {"street_width_m",
         [](SimulationConfig& c, const Setting& s, std::string_view v) { c.street_width = s.positive(v); }},
        {"sigma_los_uma_db",
         [](SimulationConfig& c, const Setting& s, std::string_view v) { c.sigma_los_uma_db = s.non_negative(v); }},
        {"sigma_nlos_uma_db",
         [](SimulationConfig& c, const Setting& s, std::string_view v) { c.sigma_nlos_uma_db = s.non_negative(v); }},
        {"sigma_los_rma_db",
         [](SimulationConfig& c, const Setting& s, std::string_view v) { c.sigma_los_rma_db = s.non_negative(v); }},
        {"sigma_nlos_rma_db",
         [](SimulationConfig& c, const Setting& s, std::string_view v) { c.sigma_nlos_rma_db = s.non_negative(v); }},
    };
    return table;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join_doubles(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? ", " : "") + fmt_double(values[i]);
    }
    return out;
}

} // namespace

const std::vector<std::string_view>& config_keys() {
    static const std::vector<std::string_view> keys = [] {
        std::vector<std::string_view> k;
        for (const auto& [name, handler] : handlers()) {
            k.push_back(name);
        }
        return k;
    }();
    return keys;
}

void apply_setting(SimulationConfig& cfg, std::string_view key, std::string_view value, std::string_view location) {
    const Setting setting{key, location};
    value = trim(value);
    if (value.empty()) {
        setting.fail("missing value");
    }
    for (const auto& [name, handler] : handlers()) {
        if (name == key) {
            handler(cfg, setting, value);
            return;
        }
    }
    throw ConfigError(std::string(location) + ": unknown key '" + std::string(key) + "'");
}

void apply_config_text(SimulationConfig& cfg, std::string_view text, std::string_view source) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::string location = std::string(source) + ":" + std::to_string(line_no);
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(location + ": expected 'key = value', got '" + std::string(line) + "'");
        }
        apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1), location);
    }
}

SimulationConfig load_config(const std::string& path) {
    SimulationConfig cfg;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) {
            throw ConfigError(path + ": cannot open config file");
        }
        std::stringstream buf;
        buf << in.rdbuf();
        apply_config_text(cfg, buf.str(), path);
    }
    cfg.validate();
    return cfg;
}

std::string serialize_config(const SimulationConfig& c) {
    std::map<std::string_view, std::string> values;
    {
        std::string s;
        for (std::size_t i = 0; i < c.scenarios.size(); ++i) {
            s += (i ? ", " : "") + std::string(to_string(c.scenarios[i]));
        }
        values["scenario"] = s;
    }
    {
        std::string s;
        for (std::size_t i = 0; i < c.positions.size(); ++i) {
            s += (i ? ", " : "") + std::string(to_string(c.positions[i]));
        }
        values["positions"] = s;
    }
    values["isd_m"] = join_doubles(c.isd_list);
    values["altitude_m"] = join_doubles(c.altitude_list);
    values["trials"] = std::to_string(c.trials);
    values["seed"] = std::to_string(c.master_seed);
    values["threads"] = std::to_string(c.threads);
    values["los_mode"] = std::string(to_string(c.los_mode));
    values["fc_ghz"] = fmt_double(c.fc_ghz);
    values["bandwidth_hz"] = fmt_double(c.radio.bandwidth_hz);
    values["scs_hz"] = fmt_double(c.radio.scs_hz);
    values["n_rb"] = std::to_string(c.radio.n_rb);
    values["ssb_rbs"] = std::to_string(c.radio.ssb_rbs);
    values["p_tx_dbm"] = fmt_double(c.radio.p_tx_dbm);
    values["noise_figure_db"] = fmt_double(c.radio.noise_figure_db);
    values["l_impl_db"] = fmt_double(c.radio.l_impl_db);
    values["rho"] = fmt_double(c.radio.rho);
    values["g_max_dbi"] = fmt_double(c.antenna.g_max_dbi);
    values["phi_3db_deg"] = fmt_double(c.antenna.phi_3db_deg);
    values["theta_3db_deg"] = fmt_double(c.antenna.theta_3db_deg);
    values["tilt_deg"] = fmt_double(c.antenna.tilt_deg);
    values["sla_v_db"] = fmt_double(c.antenna.sla_v_db);
    values["a_m_db"] = fmt_double(c.antenna.a_m_db);
    values["boresights_deg"] = join_doubles({c.boresights_deg.begin(), c.boresights_deg.end()});
    values["bs_height_m"] = fmt_double(c.bs_height);
    values["h_e_m"] = fmt_double(c.h_e);
    values["h_blg_m"] = fmt_double(c.h_blg);
    values["street_width_m"] = fmt_double(c.street_width);
    values["sigma_los_uma_db"] = fmt_double(c.sigma_los_uma_db);
    values["sigma_nlos_uma_db"] = fmt_double(c.sigma_nlos_uma_db);
    values["sigma_los_rma_db"] = fmt_double(c.sigma_los_rma_db);
    values["sigma_nlos_rma_db"] = fmt_double(c.sigma_nlos_rma_db);

    std::string out;
    for (auto key : config_keys()) {
        out += std::string(key) + " = " + values.at(key) + "\n";
    }
    return out;
}

} // namespace uavsim
