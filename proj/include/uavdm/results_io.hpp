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

#include "uavdm/config.hpp"
#include "uavdm/experiment.hpp"

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uavdm
{

// Column order of the CSV output; JSON objects use the same names.
inline constexpr std::array<std::string_view, 11> kResultFields{
    "strategy", "M", "Ps_dbm", "n", "theta_b", "beta", "Rb", "Re", "Rs", "iterations", "converged"};

// Reals are written with 12 significant digits.
std::string format_results(std::span<const ResultRecord> records, OutputFormat format);
void write_results(std::span<const ResultRecord> records, OutputFormat format,
                   const std::filesystem::path &path); // IoError on failure

std::vector<ResultRecord> parse_results_csv(std::string_view text);
std::vector<ResultRecord> parse_results_json(std::string_view text);
std::vector<ResultRecord> read_results(const std::filesystem::path &path, OutputFormat format);

std::string format_summary(std::span<const AggregateRecord> aggregates);

} // namespace uavdm
