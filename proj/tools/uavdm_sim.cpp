// SPDX-License-Identifier: Apache-2.0
//
// uavdm - secure directional-modulation link simulation for UAV receivers
// Copyright (C) 2026 The uavdm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Flight simulation driver:
//
//   uavdm-sim run --config scenario.cfg [--out results.csv] [--format csv|json] [--parallel 4]
//   uavdm-sim sweep-power --config scenario.cfg --powers 0,5,10,15,20,25,30
//   uavdm-sim sweep-antennas --config scenario.cfg --antennas 4,8,16,32,64

#include "uavdm/config.hpp"
#include "uavdm/errors.hpp"
#include "uavdm/experiment.hpp"
#include "uavdm/results_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace
{

struct Options
{
    std::string config;
    std::string out;
    std::string format;
    std::string summary;
    unsigned parallel = 1;
    std::vector<double> powers;
    std::vector<std::size_t> antennas;
};

void add_common(CLI::App *cmd, Options &opt, bool config_required)
{
    auto *c = cmd->add_option("--config", opt.config, "Scenario file (key = value)");
    if (config_required)
        c->required();
    c->check(CLI::ExistingFile);
    cmd->add_option("--out", opt.out, "Result file; overrides output.path");
    cmd->add_option("--format", opt.format, "csv or json; overrides output.format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--parallel", opt.parallel, "Worker threads (0 = all cores)");
    cmd->add_option("--summary", opt.summary, "Also write per-combination aggregates as CSV");
}

int execute(const Options &opt)
{
    auto cfg = opt.config.empty() ? uavdm::parse_config_text("") : uavdm::parse_config(opt.config);
    if (!opt.out.empty())
        cfg.output_path = opt.out;
    if (!opt.format.empty())
        cfg.output_format = uavdm::parse_output_format(opt.format);
    if (!opt.powers.empty())
        cfg.power_sweep_dbm = opt.powers;
    if (!opt.antennas.empty())
        cfg.antenna_sweep = opt.antennas;
    cfg.validate();

    const auto result = uavdm::run_experiment(cfg, opt.parallel);
    uavdm::write_results(result.records, cfg.output_format, cfg.output_path);

    const auto summary = uavdm::format_summary(result.aggregates);
    if (!opt.summary.empty())
    {
        std::ofstream out(opt.summary, std::ios::binary | std::ios::trunc);
        if (!(out << summary))
            throw uavdm::IoError("cannot write summary to '" + opt.summary + "'");
    }
    std::cout << summary;
    std::cerr << "wrote " << result.records.size() << " records to " << cfg.output_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"UAV directional-modulation secrecy simulator"};
    app.require_subcommand(1);

    Options opt;
    auto *run = app.add_subcommand("run", "Run the experiment described by a config file");
    add_common(run, opt, true);

    auto *power = app.add_subcommand("sweep-power", "Run with an overridden transmit-power sweep");
    add_common(power, opt, false);
    power->add_option("--powers", opt.powers, "Transmit powers in dBm")->required()->delimiter(',');

    auto *ant = app.add_subcommand("sweep-antennas", "Run with an overridden antenna-count sweep");
    add_common(ant, opt, false);
    ant->add_option("--antennas", opt.antennas, "Antenna counts")
        ->required()
        ->delimiter(',')
        ->check(CLI::Range(std::size_t{2}, std::size_t{4096}));

    CLI11_PARSE(app, argc, argv);

    try
    {
        return execute(opt);
    }
    catch (const uavdm::ConfigError &e)
    {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }
    catch (const uavdm::IoError &e)
    {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 3;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
