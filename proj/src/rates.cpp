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

#include "uavdm/rates.hpp"
#include "uavdm/errors.hpp"
#include "uavdm/vector_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace uavdm
{
namespace
{

void check_inputs(const LinkState &link, const BeamformingPair &bf, double beta)
{
    if (!(beta >= 0.0 && beta <= 1.0))
        throw DomainError("power allocation factor must lie in [0, 1], got " + std::to_string(beta));
    if (bf.message.size() != link.num_antennas() || bf.noise.size() != link.num_antennas())
        throw DomainError("beamformer length does not match the array");
}

struct Received
{
    double signal;
    double an;
};

Received received_bob(const LinkState &link, const ProjectionGains &p, double beta)
{
    return {link.gain_bob * beta * link.power * p.bob_message,
            link.gain_bob * (1.0 - beta) * link.power * p.bob_noise};
}

Received received_eve(const LinkState &link, const ProjectionGains &p, double beta)
{
    return {link.gain_eve * beta * link.power * p.eve_message,
            link.gain_eve * (1.0 - beta) * link.power * p.eve_noise};
}

double capacity(const Received &r, double noise)
{
    return std::log2(1.0 + r.signal / (r.an + noise));
}

} // namespace

ProjectionGains projection_gains(const LinkState &link, const BeamformingPair &bf)
{
    const auto hb = link.h_bob.entries();
    const auto he = link.h_eve.entries();
    return {projection_power(hb, bf.message), projection_power(hb, bf.noise), projection_power(he, bf.message),
            projection_power(he, bf.noise)};
}

double rate_bob(const LinkState &link, const BeamformingPair &bf, double beta)
{
    check_inputs(link, bf, beta);
    return capacity(received_bob(link, projection_gains(link, bf), beta), link.noise_bob);
}

double rate_eve(const LinkState &link, const BeamformingPair &bf, double beta)
{
    check_inputs(link, bf, beta);
    return capacity(received_eve(link, projection_gains(link, bf), beta), link.noise_eve);
}

double rate_gap(const LinkState &link, const BeamformingPair &bf, double beta)
{
    const auto r = secrecy_rate(link, bf, beta);
    return r.rate_gap();
}

RateBreakdown secrecy_rate(const LinkState &link, const BeamformingPair &bf, double beta)
{
    check_inputs(link, bf, beta);
    const auto p = projection_gains(link, bf);
    const auto bob = received_bob(link, p, beta);
    const auto eve = received_eve(link, p, beta);

    RateBreakdown out;
    out.rate_bob = capacity(bob, link.noise_bob);
    out.rate_eve = capacity(eve, link.noise_eve);
    out.secrecy_rate = std::max(0.0, out.rate_bob - out.rate_eve);
    out.signal_power_bob = bob.signal;
    out.an_power_bob = bob.an;
    out.signal_power_eve = eve.signal;
    out.an_power_eve = eve.an;
    return out;
}

double secrecy_sum_rate(std::span<const double> per_point)
{
    if (per_point.empty())
        throw DomainError("secrecy sum-rate of an empty trajectory");
    return std::max(0.0, std::accumulate(per_point.begin(), per_point.end(), 0.0));
}

} // namespace uavdm
