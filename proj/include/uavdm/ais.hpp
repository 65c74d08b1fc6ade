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

#include "uavdm/beamforming.hpp"
#include "uavdm/power_allocation.hpp"
#include "uavdm/rates.hpp"

#include <optional>
#include <vector>

namespace uavdm
{

// How the power-allocation half of an iteration picks the next beta.
enum class PowerStep
{
    closed_form, // optimal_beta
    grid_search, // beta_grid_oracle at AisConfig::grid_step
    hold,        // keep beta_init; reduces the loop to a one-shot fixed-PA design
};

struct AisConfig
{
    double beta_init = 0.1;
    double epsilon = 1e-6; // on |f(beta^i) - f(beta^{i-1})|, bits/s/Hz
    int max_iterations = 50;
    PowerStep power_step = PowerStep::closed_form;
    double grid_step = 1e-4;

    void validate() const; // throws ConfigError
};

struct AisIterate
{
    double beta = 0.0;
    BeamformingPair beamformers; // leakage beamformers designed at `beta`
    double rate_gap = 0.0;       // R_b - R_e at (beta, beamformers)
};

struct AisTrace
{
    // iterates[0] is the initialization; iterates[i] follows the i-th PA step.
    std::vector<AisIterate> iterates;
    bool converged = false;
    int iterations_used = 0;
};

struct AisResult
{
    double beta = 0.0;
    BeamformingPair beamformers;
    RateBreakdown rates;
    // Last closed-form PA step (solved on the previous iterate's beamformers);
    // empty for the other power steps.
    std::optional<PaSolution> power_allocation;
    AisTrace trace;
};

/*!
Alternating optimization at one sampling point.

Starting from beta_init, each iteration designs the Max-SLNR / Max-ANLNR pair at
the current beta, re-solves the power allocation for that pair, and redesigns the
beamformers at the new beta. The loop stops once the rate gap changes by at most
epsilon between successive iterates, or after max_iterations PA steps. On
convergence the last iterate is returned; at the cap the best iterate seen is
returned with `trace.converged == false`.
*/
AisResult optimize_point(const LinkState &link, const AisConfig &cfg = {});

struct BaselineResult
{
    BeamformingPair beamformers;
    RateBreakdown rates;
};

// Leakage beamformers and rates at a fixed beta in (0, 1), no iteration.
BaselineResult run_baseline(const LinkState &link, double fixed_beta);

} // namespace uavdm
