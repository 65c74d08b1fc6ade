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
#include "uavdm/core_model.hpp"

#include <span>

namespace uavdm
{

// Squared array responses |h^H v|^2 of both receivers to both beamformers.
struct ProjectionGains
{
    double bob_message = 0.0; // |h_b^H v_b|^2
    double bob_noise = 0.0;   // |h_b^H v_an|^2
    double eve_message = 0.0; // |h_e^H v_b|^2
    double eve_noise = 0.0;   // |h_e^H v_an|^2
};

ProjectionGains projection_gains(const LinkState &link, const BeamformingPair &bf);

// Rates in bits/s/Hz, received powers in the link's power unit.
struct RateBreakdown
{
    double rate_bob = 0.0;
    double rate_eve = 0.0;
    double secrecy_rate = 0.0; // max(0, rate_bob - rate_eve)
    double signal_power_bob = 0.0;
    double an_power_bob = 0.0;
    double signal_power_eve = 0.0;
    double an_power_eve = 0.0;

    double rate_gap() const noexcept { return rate_bob - rate_eve; }
};

double rate_bob(const LinkState &link, const BeamformingPair &bf, double beta);
double rate_eve(const LinkState &link, const BeamformingPair &bf, double beta);

// rate_bob - rate_eve without clamping; may be negative.
double rate_gap(const LinkState &link, const BeamformingPair &bf, double beta);

RateBreakdown secrecy_rate(const LinkState &link, const BeamformingPair &bf, double beta);

// max(0, sum). Feed it per-point rate gaps to obtain the flight-level secrecy
// sum-rate; feeding clamped per-point rates yields the per-point-clamped sum.
double secrecy_sum_rate(std::span<const double> per_point);

} // namespace uavdm
