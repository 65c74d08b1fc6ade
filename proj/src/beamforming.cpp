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

#include "uavdm/beamforming.hpp"
#include "uavdm/errors.hpp"
#include "uavdm/vector_ops.hpp"

#include <cmath>
#include <string>

namespace uavdm
{
namespace
{

void check_beta(double beta)
{
    if (!(beta >= 0.0 && beta <= 1.0))
        throw DomainError("power allocation factor must lie in [0, 1], got " + std::to_string(beta));
}

void check_vector(std::span<const Complex> v, const LinkState &link)
{
    if (v.size() != link.num_antennas())
        throw DomainError("beamformer length does not match the array");
}

// Ratio a |t^H v|^2 / (a |l^H v|^2 + noise ||v||^2) shared by SLNR and ANLNR.
double leakage_ratio(std::span<const Complex> v, std::span<const Complex> target,
                     std::span<const Complex> leak, double power, double noise)
{
    const double num = power * projection_power(target, v);
    const double den = power * projection_power(leak, v) + noise * squared_norm(v);
    return num / den;
}

// Normalize to unit norm and flip the sign so that Re(v[0]) >= 0.
CVector canonical(CVector v)
{
    const double len = std::sqrt(squared_norm(v));
    const double sign = v.front().real() < 0.0 ? -1.0 : 1.0;
    for (auto &x : v)
        x *= sign / len;
    return v;
}

} // namespace

double slnr_value(std::span<const Complex> v, const LinkState &link, double beta)
{
    check_beta(beta);
    check_vector(v, link);
    return leakage_ratio(v, link.h_bob.entries(), link.h_eve.entries(), beta * link.power, link.noise_bob);
}

double anlnr_value(std::span<const Complex> v, const LinkState &link, double beta)
{
    check_beta(beta);
    check_vector(v, link);
    return leakage_ratio(v, link.h_eve.entries(), link.h_bob.entries(), (1.0 - beta) * link.power,
                         link.noise_eve);
}

CVector slnr_beamformer(const LinkState &link, double beta)
{
    check_beta(beta);
    link.validate();
    return canonical(solve_shifted_rank_one(link.noise_bob, link.h_eve.entries(), beta * link.power,
                                            link.h_bob.entries()));
}

CVector anlnr_beamformer(const LinkState &link, double beta)
{
    check_beta(beta);
    link.validate();
    return canonical(solve_shifted_rank_one(link.noise_eve, link.h_bob.entries(), (1.0 - beta) * link.power,
                                            link.h_eve.entries()));
}

BeamformingPair leakage_beamformers(const LinkState &link, double beta)
{
    return {slnr_beamformer(link, beta), anlnr_beamformer(link, beta)};
}

} // namespace uavdm
