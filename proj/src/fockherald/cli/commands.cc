// Copyright 2026 The fockherald Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fockherald/cli/commands.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fockherald/analytic/formulas.h"
#include "fockherald/cli/validate.h"
#include "fockherald/cnot/search.h"
#include "fockherald/errors.h"
#include "fockherald/schemes/schemes.h"

using namespace fockherald;
using namespace fockherald::cli;

namespace {

double parse_number(const std::string &token, const std::string &context) {
    size_t used = 0;
    double v;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception &) {
        throw UsageError("'" + context + "': '" + token + "' is not a number");
    }
    if (used != token.size() || !std::isfinite(v)) {
        throw UsageError("'" + context + "': '" + token + "' is not a finite number");
    }
    return v;
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) {
        parts.push_back(part);
    }
    if (!text.empty() && text.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

uint32_t as_count(double v, const char *what) {
    if (v < 0 || v != std::floor(v) || v > 1e6) {
        throw UsageError(std::string(what) + " must be a non-negative integer");
    }
    return static_cast<uint32_t>(v);
}

void require_nonempty(const std::vector<double> &values, const char *flag) {
    if (values.empty()) {
        throw UsageError(std::string(flag) + " must list at least one value");
    }
}

std::string fmt(double v) {
    return format_number(v);
}

std::string fmt(size_t v) {
    return std::to_string(v);
}

std::string join_angles(const cnot::StateAngles &angles) {
    std::string out;
    for (size_t k = 0; k < angles.size(); k++) {
        if (k) {
            out += ';';
        }
        out += fmt(angles[k]);
    }
    return out;
}

}  // namespace

std::vector<double> cli::parse_list(const std::string &text) {
    if (text.empty()) {
        return {};
    }
    if (text.find(':') != std::string::npos) {
        auto parts = split(text, ':');
        if (parts.size() != 3) {
            throw UsageError("range '" + text + "' must be start:stop:count");
        }
        double start = parse_number(parts[0], text);
        double stop = parse_number(parts[1], text);
        double count = parse_number(parts[2], text);
        if (count < 1 || count != std::floor(count)) {
            throw UsageError("range '" + text + "' needs a positive integer count");
        }
        std::vector<double> values;
        for (size_t k = 0; k < count; k++) {
            values.push_back(count == 1 ? start : start + (stop - start) * k / (count - 1));
        }
        return values;
    }
    std::vector<double> values;
    for (const auto &token : split(text, ',')) {
        values.push_back(parse_number(token, text));
    }
    return values;
}

CommandResult cli::cmd_suppression(const SuppressionParams &p) {
    require_nonempty(p.efficiencies, "--eta-eff");
    require_nonempty(p.reflectivities, "--eta-ref");
    Table table({"eta_eff", "eta_ref", "n", "p_m1"});
    for (const auto &row : schemes::suppression_grid(p.efficiencies, p.reflectivities, p.n_max)) {
        table.add_row({fmt(row.efficiency), fmt(row.reflectivity), fmt(size_t{row.n}), fmt(row.p_m1)});
    }
    nlohmann::json params = {
        {"eta_eff", p.efficiencies},
        {"eta_ref", p.reflectivities},
        {"n_max", p.n_max},
    };
    return {"suppression", params, {{"suppression", std::move(table)}}, 0, ""};
}

CommandResult cli::cmd_cascade(const CascadeParams &p) {
    require_nonempty(p.ports, "--ports");
    require_nonempty(p.efficiencies, "--eta-eff");
    Table table({"ports", "eta_eff", "n", "m", "probability", "analytic"});
    for (double port_value : p.ports) {
        size_t ports = as_count(port_value, "--ports");
        if (ports < 2 || (ports & (ports - 1)) != 0) {
            throw UsageError("--ports values must be powers of two >= 2");
        }
        for (double eff : p.efficiencies) {
            for (uint32_t n = 0; n <= p.n_max; n++) {
                auto dist = schemes::simulate_cascade(n, {ports, eff});
                for (size_t m = 0; m < dist.size(); m++) {
                    std::string analytic;
                    if (m == n && n <= ports) {
                        analytic = fmt(analytic::cascade_prob_correct(n, ports, eff));
                    }
                    table.add_row({fmt(ports), fmt(eff), fmt(size_t{n}), fmt(m), fmt(dist[m]), analytic});
                }
            }
        }
    }
    nlohmann::json params = {
        {"ports", p.ports},
        {"eta_eff", p.efficiencies},
        {"n_max", p.n_max},
    };
    return {"cascade", params, {{"cascade", std::move(table)}}, 0, ""};
}

CommandResult cli::cmd_tdm(const TdmParams &p) {
    schemes::TdmConfig cfg{p.coupling, p.loop_transmission, p.round_trips, p.efficiency, {}};
    if (p.uniform_schedule) {
        cfg.coupling_schedule = schemes::uniform_tdm_schedule(p.round_trips);
    }
    Table table({"n", "m", "probability", "remainder"});
    for (uint32_t n = 0; n <= p.n_max; n++) {
        auto result = schemes::simulate_tdm(n, cfg);
        for (size_t m = 0; m < result.distribution.size(); m++) {
            table.add_row({fmt(size_t{n}), fmt(m), fmt(result.distribution[m]), fmt(result.remainder_probability)});
        }
    }
    nlohmann::json params = {
        {"coupling", p.coupling},
        {"loop_transmission", p.loop_transmission},
        {"round_trips", p.round_trips},
        {"eta_eff", p.efficiency},
        {"n_max", p.n_max},
        {"uniform_schedule", p.uniform_schedule},
        {"coupling_schedule", cfg.coupling_schedule},
    };
    return {"tdm", params, {{"tdm", std::move(table)}}, 0, ""};
}

CommandResult cli::cmd_chain(const ChainParams &p) {
    require_nonempty(p.ks, "--k");
    require_nonempty(p.efficiencies, "--eta-eff");
    Table table({"k", "eta_eff", "eta_ref", "n", "p_accept", "p_analytic"});
    for (double k_value : p.ks) {
        uint32_t k = as_count(k_value, "--k");
        for (double eff : p.efficiencies) {
            for (uint32_t n = 0; n <= p.n_max; n++) {
                double simulated = schemes::simulate_chain(n, {k, p.first_reflectivity, eff});
                double analytic = analytic::chain_prob_mk(n, k, p.first_reflectivity, eff);
                table.add_row({fmt(size_t{k}), fmt(eff), fmt(p.first_reflectivity), fmt(size_t{n}), fmt(simulated),
                               fmt(analytic)});
            }
        }
    }
    nlohmann::json params = {
        {"k", p.ks},
        {"eta_eff", p.efficiencies},
        {"eta_ref", p.first_reflectivity},
        {"n_max", p.n_max},
    };
    return {"chain", params, {{"chain", std::move(table)}}, 0, ""};
}

CommandResult cli::cmd_cnot_sweep(const CnotSweepParams &p) {
    cnot::CnotConfig base = p.config ? cnot::load_config(p.config->string()) : cnot::default_cnot_config();
    cnot::require_calibrated(base);

    cnot::SearchSettings settings;
    settings.seed = p.seed;
    settings.random_starts = p.random_starts;
    settings.probes_only = p.probes_only;

    Table table({"eta_eff", "eta_ref", "f_min", "p_at_fmin", "p_min", "argmin_params"});
    std::ostringstream summary;
    auto add = [&](const std::string &eff, const std::string &ref, const cnot::GateMetrics &m) {
        table.add_row({eff, ref, fmt(m.fidelity_min), fmt(m.probability_at_fmin), fmt(m.probability_min),
                       join_angles(m.argmin_angles)});
        summary << "eta_eff=" << (eff.empty() ? "ideal" : eff) << " eta_ref=" << (ref.empty() ? "-" : ref)
                << " F_min=" << fmt(m.fidelity_min) << " P=" << fmt(m.probability_at_fmin)
                << " P_min=" << fmt(m.probability_min) << "\n";
    };

    if (p.detector_model == "ideal") {
        auto m = cnot::worst_case_search(base.with_model(cnot::IdealNumberResolving{}), settings);
        add("", "", m);
    } else if (p.detector_model == "nondiscriminating" || p.detector_model == "chain") {
        bool nd = p.detector_model == "nondiscriminating";
        require_nonempty(p.efficiencies, "--eta-eff");
        if (!nd) {
            require_nonempty(p.reflectivities, "--eta-ref");
        }
        for (const auto &cell : cnot::sweep_metrics(base, p.efficiencies, p.reflectivities, settings, p.threads, nd)) {
            add(fmt(cell.efficiency), fmt(cell.reflectivity), cell.metrics);
        }
    } else {
        throw UsageError("unknown detector model '" + p.detector_model + "'");
    }

    nlohmann::json params = {
        {"eta_eff", p.efficiencies},
        {"eta_ref", p.reflectivities},
        {"detector_model", p.detector_model},
        {"probes_only", p.probes_only},
        {"random_starts", p.random_starts},
        {"config", cnot::config_to_json(base)},
    };
    return {"cnot-sweep", params, {{"cnot_sweep", std::move(table)}}, 0, summary.str()};
}

CommandResult cli::cmd_validate(const ValidateParams &p) {
    cnot::CnotConfig cfg = p.config ? cnot::load_config(p.config->string()) : cnot::default_cnot_config();
    ValidationReport report = run_validation(cfg);

    Table table({"suite", "cases", "max_discrepancy", "tolerance", "passed"});
    std::ostringstream summary;
    for (const auto &s : report.suites) {
        table.add_row({s.name, fmt(s.cases), fmt(s.max_discrepancy), fmt(s.tolerance), s.passed ? "true" : "false"});
        summary << (s.passed ? "PASS " : "FAIL ") << s.name << " cases=" << s.cases
                << " max_discrepancy=" << fmt(s.max_discrepancy) << "\n";
    }
    const auto &cal = report.calibration;
    table.add_row({"cnot_calibration", fmt(cal.entries.size()), fmt(cal.herald_spread), fmt(cnot::kCalibrationTolerance),
                   cal.passed ? "true" : "false"});
    summary << (cal.passed ? "PASS " : "FAIL ") << "cnot_calibration herald_probability="
            << fmt(cal.herald_probability) << "\n";
    if (!cal.passed) {
        summary << cal.diagnostics();
    }
    nlohmann::json params = {{"config", cnot::config_to_json(cfg)}};
    return {"validate", params, {{"validate", std::move(table)}}, report.passed() ? 0 : 1, summary.str()};
}

nlohmann::json cli::write_result(const CommandResult &result, const RunOptions &options, double seconds) {
    std::filesystem::create_directories(options.out_dir);
    nlohmann::json outputs = nlohmann::json::array();
    for (const auto &[stem, table] : result.tables) {
        bool csv = options.format == OutputFormat::Csv;
        auto path = options.out_dir / (stem + (csv ? ".csv" : ".json"));
        std::ofstream file(path, std::ios::binary);
        file << (csv ? table.to_csv() : table.to_json().dump(2) + "\n");
        if (!file) {
            throw std::runtime_error("failed to write " + path.string());
        }
        outputs.push_back(path.string());
    }
    nlohmann::json manifest = {
        {"command", result.command},
        {"params", result.params},
        {"version", kToolVersion},
        {"seed", options.seed},
        {"outputs", outputs},
        {"duration_seconds", seconds},
    };
    auto path = options.out_dir / (result.command + ".manifest.json");
    std::ofstream file(path, std::ios::binary);
    file << manifest.dump(2) << "\n";
    if (!file) {
        throw std::runtime_error("failed to write " + path.string());
    }
    return manifest;
}

int cli::run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Heralded photon-counting and linear-optics gate simulator"};
    app.require_subcommand(1);

    RunOptions options;
    std::string out_dir = ".";
    std::string format = "csv";
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--seed", options.seed, "Random seed");
    app.add_option("--format", format, "Table format")->check(CLI::IsMember({"csv", "json"}));

    auto *suppression = app.add_subcommand("suppression", "Chain-detector P(m=1|n) grid")->fallthrough();
    std::string sup_eff = "0.8,0.9,0.99";
    std::string sup_ref = "0.011,0.1,0.5";
    uint32_t sup_n = 6;
    suppression->add_option("--eta-eff", sup_eff, "Detector efficiencies");
    suppression->add_option("--eta-ref", sup_ref, "Beamsplitter reflectivities");
    suppression->add_option("--n-max", sup_n, "Largest photon number");

    auto *cascade = app.add_subcommand("cascade", "Binary-tree cascade click distributions")->fallthrough();
    std::string cas_ports = "2,4,8,16";
    std::string cas_eff = "0.8,0.9,1";
    uint32_t cas_n = 4;
    cascade->add_option("--ports", cas_ports, "Detector counts (powers of two)");
    cascade->add_option("--eta-eff", cas_eff, "Detector efficiencies");
    cascade->add_option("--n-max", cas_n, "Largest photon number");

    auto *tdm = app.add_subcommand("tdm", "Time-multiplexed loop detector")->fallthrough();
    TdmParams tdm_params;
    tdm->add_option("--coupling", tdm_params.coupling, "Out-coupling probability per round trip");
    tdm->add_option("--loop-transmission", tdm_params.loop_transmission, "Loop survival per round trip");
    tdm->add_option("--round-trips", tdm_params.round_trips, "Number of time bins");
    tdm->add_option("--eta-eff", tdm_params.efficiency, "Detector efficiency");
    tdm->add_option("--n-max", tdm_params.n_max, "Largest photon number");
    tdm->add_flag("--uniform-schedule", tdm_params.uniform_schedule, "Equal out-coupling per bin");

    auto *chain = app.add_subcommand("chain", "Chain detector acceptance probabilities")->fallthrough();
    std::string chain_k = "1,2,3";
    std::string chain_eff = "0.9,0.99,1";
    ChainParams chain_params;
    chain->add_option("--k", chain_k, "Clicking detector counts");
    chain->add_option("--eta-eff", chain_eff, "Detector efficiencies");
    chain->add_option("--eta-ref", chain_params.first_reflectivity, "First reflectivity");
    chain->add_option("--n-max", chain_params.n_max, "Largest photon number");

    auto *sweep = app.add_subcommand("cnot-sweep", "Worst-case CNOT fidelity and herald probability")->fallthrough();
    std::string sweep_eff = "0.99";
    std::string sweep_ref = "0.011";
    std::string sweep_config;
    CnotSweepParams sweep_params;
    sweep->add_option("--eta-eff", sweep_eff, "Detector efficiencies");
    sweep->add_option("--eta-ref", sweep_ref, "Chain reflectivities");
    sweep->add_option("--detector-model", sweep_params.detector_model, "ideal|nondiscriminating|chain")
        ->check(CLI::IsMember({"ideal", "nondiscriminating", "chain"}));
    sweep->add_flag("--probes-only", sweep_params.probes_only, "Skip the continuous search");
    sweep->add_option("--random-starts", sweep_params.random_starts, "Random search starts");
    sweep->add_option("--config", sweep_config, "Gate config JSON");

    auto *validate = app.add_subcommand("validate", "Run agreement suites and gate calibration")->fallthrough();
    std::string validate_config;
    validate->add_option("--config", validate_config, "Gate config JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        options.out_dir = out_dir;
        options.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
        auto start = std::chrono::steady_clock::now();
        CommandResult result;
        if (*suppression) {
            result = cmd_suppression({parse_list(sup_eff), parse_list(sup_ref), sup_n});
        } else if (*cascade) {
            result = cmd_cascade({parse_list(cas_ports), parse_list(cas_eff), cas_n});
        } else if (*tdm) {
            result = cmd_tdm(tdm_params);
        } else if (*chain) {
            chain_params.ks = parse_list(chain_k);
            chain_params.efficiencies = parse_list(chain_eff);
            result = cmd_chain(chain_params);
        } else if (*sweep) {
            sweep_params.efficiencies = parse_list(sweep_eff);
            sweep_params.reflectivities = parse_list(sweep_ref);
            if (!sweep_config.empty()) {
                sweep_params.config = sweep_config;
            }
            sweep_params.seed = options.seed;
            sweep_params.threads = cnot::sweep_threads_from_env();
            result = cmd_cnot_sweep(sweep_params);
        } else {
            ValidateParams params;
            if (!validate_config.empty()) {
                params.config = validate_config;
            }
            result = cmd_validate(params);
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        auto manifest = write_result(result, options, seconds);
        out << result.summary;
        for (const auto &path : manifest["outputs"]) {
            out << "wrote " << path.get<std::string>() << "\n";
        }
        return result.exit_code;
    } catch (const ValidationError &e) {
        err << "validation failed: " << e.what() << "\n";
        return 1;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error &e) {
        err << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}
