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
#include "uavdm/core_model.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace uavdm
{

// 10^(dBm / 10)
double dbm_to_mw(double dbm);

// One row per (strategy, M, P_s, n).
struct ResultRecord
{
    std::string strategy;
    std::size_t antennas = 0;
    double power_dbm = 0.0;
    int sample = 0;
    double theta_bob = 0.0;
    double beta = 0.0;
    double rate_bob = 0.0;
    double rate_eve = 0.0;
    double secrecy_rate = 0.0;
    int iterations = 0; // 0 for fixed strategies
    bool converged = true;

    friend bool operator==(const ResultRecord &, const ResultRecord &) = default;
};

// Flight-level summary of one (strategy, M, P_s) combination.
struct AggregateRecord
{
    std::string strategy;
    std::size_t antennas = 0;
    double power_dbm = 0.0;
    int points = 0;
    double mean_secrecy_rate = 0.0;    // mean over n of max(0, R_b - R_e)
    double clamped_sum_rate = 0.0;     // sum over n of max(0, R_b - R_e)
    double secrecy_sum_rate = 0.0;     // max(0, sum over n of (R_b - R_e))
    int unconverged = 0;
};

struct ExperimentResult
{
    std::vector<ResultRecord> records;
    std::vector<AggregateRecord> aggregates;
};

// Link at one trajectory sample with linear (mW) power and noise.
LinkState make_link(const TrajectorySample &sample, const ExperimentConfig &cfg, std::size_t antennas,
                    double power_dbm);

// Runs one strategy at one link; the record's strategy/M/P_s fields are left for the caller.
ResultRecord evaluate_point(const LinkState &link, const Strategy &strategy, const ExperimentConfig &cfg);

/*!
Full sweep. Records come back ordered by strategy (config order), antenna count,
power, then sample index, independent of `parallelism` (worker threads; 0 picks
the hardware concurrency). Points that hit the AIS iteration cap are kept with
`converged == false` and reported on stderr.
*/
ExperimentResult run_experiment(const ExperimentConfig &cfg, unsigned parallelism = 1);

std::vector<AggregateRecord> aggregate(const std::vector<ResultRecord> &records);

} // namespace uavdm
