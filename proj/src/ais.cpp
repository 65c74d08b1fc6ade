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

#include "uavdm/ais.hpp"
#include "uavdm/errors.hpp"

#include <cmath>
#include <string>

namespace uavdm
{

void AisConfig::validate() const
{
    if (!(beta_init > 0.0 && beta_init < 1.0))
        throw ConfigError("AIS initial beta must lie in (0, 1)");
    if (!(epsilon > 0.0))
        throw ConfigError("AIS tolerance must be positive");
    if (max_iterations < 1)
        throw ConfigError("AIS needs at least one iteration");
    if (power_step == PowerStep::grid_search && !(grid_step > 0.0 && grid_step <= 1e-2))
        throw ConfigError("grid step must lie in (0, 1e-2]");
}

namespace
{

AisIterate design_at(const LinkState &link, double beta)
{
    AisIterate it;
    it.beta = beta;
    it.beamformers = leakage_beamformers(link, beta);
    it.rate_gap = rate_gap(link, it.beamformers, beta);
    return it;
}

} // namespace

AisResult optimize_point(const LinkState &link, const AisConfig &cfg)
{
    cfg.validate();
    link.validate();

    AisResult result;
    auto &trace = result.trace;
    trace.iterates.push_back(design_at(link, cfg.beta_init));

    while (trace.iterations_used < cfg.max_iterations)
    {
        const AisIterate &prev = trace.iterates.back();
        double next_beta = prev.beta;
        switch (cfg.power_step)
        {
        case PowerStep::closed_form:
            result.power_allocation = optimal_beta(link, prev.beamformers);
            next_beta = result.power_allocation->beta_star;
            break;
        case PowerStep::grid_search:
            next_beta = beta_grid_oracle(link, prev.beamformers, cfg.grid_step).beta;
            break;
        case PowerStep::hold:
            break;
        }

        trace.iterates.push_back(design_at(link, next_beta));
        ++trace.iterations_used;

        const auto &last = trace.iterates.back();
        const auto &before = trace.iterates[trace.iterates.size() - 2];
        if (std::abs(last.rate_gap - before.rate_gap) <= cfg.epsilon)
        {
            trace.converged = true;
            break;
        }
    }

    const AisIterate *chosen = &trace.iterates.back();
    if (!trace.converged)
    {
        for (const auto &it : trace.iterates)
            if (it.rate_gap > chosen->rate_gap)
                chosen = &it;
    }
    result.beta = chosen->beta;
    result.beamformers = chosen->beamformers;
    result.rates = secrecy_rate(link, result.beamformers, result.beta);
    return result;
}

BaselineResult run_baseline(const LinkState &link, double fixed_beta)
{
    if (!(fixed_beta > 0.0 && fixed_beta < 1.0))
        throw DomainError("fixed power allocation must lie in (0, 1), got " + std::to_string(fixed_beta));
    BaselineResult out;
    out.beamformers = leakage_beamformers(link, fixed_beta);
    out.rates = secrecy_rate(link, out.beamformers, fixed_beta);
    return out;
}

} // namespace uavdm
