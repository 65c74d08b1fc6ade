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

#pragma once

#include "uavdm/ais.hpp"
#include "uavdm/core_model.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace uavdm
{

struct Strategy
{
    enum class Kind
    {
        ais,         // alternating beamforming / closed-form PA
        fixed,       // leakage beamformers at a fixed beta
        grid_oracle, // alternating loop with exhaustive-search PA
    };

    Kind kind = Kind::ais;
    double beta = 0.5; // only for Kind::fixed

    static Strategy ais() { return {Kind::ais, 0.5}; }
    static Strategy fixed(double b) { return {Kind::fixed, b}; }
    static Strategy grid_oracle() { return {Kind::grid_oracle, 0.5}; }

    // "ais", "fixed(0.5)", "grid_oracle"
    std::string name() const;
    static Strategy parse(std::string_view text); // throws ConfigError

    friend bool operator==(const Strategy &, const Strategy &) = default;
};

enum class OutputFormat
{
    csv,
    json,
};

std::string_view to_string(OutputFormat f);
OutputFormat parse_output_format(std::string_view text); // throws ConfigError

struct ExperimentConfig
{
    ScenarioGeometry geometry;
    ArrayConfig array; // num_antennas is taken from antenna_sweep
    double noise_dbm_bob = -70.0;
    double noise_dbm_eve = -70.0;
    std::vector<double> power_sweep_dbm{10.0, 20.0, 30.0};
    std::vector<std::size_t> antenna_sweep{4, 8, 16};
    std::vector<Strategy> strategies{Strategy::ais(), Strategy::fixed(0.5), Strategy::fixed(0.9)};
    AisConfig ais;
    double grid_step = 1e-4;
    // Degenerate scenario: Eve sees exactly Bob's link at every sample.
    bool eve_mirrors_bob = false;
    std::string output_path = "results.csv";
    OutputFormat output_format = OutputFormat::csv;

    void validate() const; // throws ValidationError naming the key
};

/*!
Flat `key = value` text, one entry per line, `#` starts a comment. Every key is
optional; omitted keys keep the defaults above. Recognized keys:

    geometry.alice, geometry.eve,          x,y,z in metres
    geometry.start, geometry.end           (z defaults to geometry.altitude)
    geometry.altitude, geometry.speed, geometry.sample_interval,
    geometry.path_loss_exponent, geometry.reference_gain,
    geometry.eve_mirrors_bob               true|false
    array.spacing                          d / lambda
    noise.bob_dbm, noise.eve_dbm
    sweep.power_dbm                        comma-separated dBm values
    sweep.antennas                         comma-separated antenna counts
    strategies                             e.g. ais, fixed(0.5), grid_oracle
    ais.beta_init, ais.epsilon, ais.max_iterations
    oracle.grid_step
    output.path, output.format             csv|json
*/
ExperimentConfig parse_config_text(std::string_view text);
ExperimentConfig parse_config(const std::filesystem::path &path); // IoError if unreadable

// Emits every key; parse_config_text(serialize_config(c)) reproduces c exactly.
std::string serialize_config(const ExperimentConfig &cfg);

} // namespace uavdm
