// simulate: Monte Carlo RSRP/RSRQ/SINR sweeps for UAVs in a 19-site
// tri-sector network. Writes plot-ready CSV or a text summary.

#include "uavsim/config.hpp"
#include "uavsim/engine.hpp"
#include "uavsim/error.hpp"
#include "uavsim/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

enum ExitCode : int { kOk = 0, kConfigError = 2, kRuntimeError = 3, kIoError = 4 };

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"UAV cellular coverage/interference simulator"};
    app.name("simulate");

    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    std::vector<std::pair<std::string, std::string>> overrides; // (key, value) in command-line order

    app.add_option("--config", config_path, "key = value configuration file");
    auto add_override = [&](const std::string& flag, const std::string& key, const std::string& help) {
        app.add_option_function<std::string>(
            flag, [&overrides, key](const std::string& v) { overrides.emplace_back(key, v); }, help);
    };
    add_override("--scenario", "scenario", "uma, rma or both");
    add_override("--isd", "isd_m", "comma-separated inter-site distances in m");
    add_override("--alt", "altitude_m", "comma-separated UAV altitudes in m");
    add_override("--positions", "positions", "comma-separated subset of cell-center,cell-middle,cell-edge");
    add_override("--trials", "trials", "Monte Carlo trials per axis point");
    add_override("--seed", "seed", "master seed");
    add_override("--threads", "threads", "worker threads (output is identical for any value)");
    add_override("--los-mode", "los_mode", "model, los or nlos");
    std::vector<std::string> raw_sets;
    app.add_option("--set", raw_sets, "extra KEY=VALUE override, repeatable");
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--format", format, "csv or summary")->check(CLI::IsMember({"csv", "summary"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        uavsim::SimulationConfig cfg;
        if (!config_path.empty()) {
            cfg = uavsim::load_config(config_path);
        }
        for (const auto& [key, value] : overrides) {
            uavsim::apply_setting(cfg, key, value, "--" + key);
        }
        for (const auto& kv : raw_sets) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) {
                throw uavsim::ConfigError("--set: expected KEY=VALUE, got '" + kv + "'");
            }
            uavsim::apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1), "--set");
        }
        cfg.validate();

        const auto result = uavsim::run_sweep(cfg);

        if (format == "csv") {
            if (out_path.empty()) {
                uavsim::write_csv(result, std::cout);
            } else {
                uavsim::emit_csv(result, out_path);
            }
        } else {
            const std::string text = uavsim::emit_summary(result);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path, std::ios::trunc);
                if (!(out << text)) {
                    throw uavsim::IoError("cannot write '" + out_path + "'");
                }
            }
        }
    } catch (const uavsim::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kConfigError;
    } catch (const uavsim::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRuntimeError;
    }
    return kOk;
}
