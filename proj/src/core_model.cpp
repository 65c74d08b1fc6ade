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

#include "uavdm/core_model.hpp"
#include "uavdm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace uavdm
{

void ArrayConfig::validate() const
{
    if (num_antennas < 2)
        throw ConfigError("array needs at least 2 antennas, got " + std::to_string(num_antennas));
    if (!(spacing_over_wavelength > 0.0) || !std::isfinite(spacing_over_wavelength))
        throw ConfigError("element spacing must be positive");
}

double norm(const Point3 &p)
{
    return std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
}

void ScenarioGeometry::validate() const
{
    if (!(norm(flight_end - flight_start) > 0.0))
        throw ConfigError("flight start and end coincide");
    if (!(speed > 0.0))
        throw ConfigError("speed must be positive");
    if (!(sample_interval > 0.0))
        throw ConfigError("sample interval must be positive");
    if (!(altitude > 0.0))
        throw ConfigError("altitude must be positive");
    if (!(path_loss_exponent > 0.0))
        throw ConfigError("path loss exponent must be positive");
    if (!(reference_gain > 0.0))
        throw ConfigError("reference gain must be positive");
    if (flight_start.z != altitude || flight_end.z != altitude)
        throw ConfigError("flight start and end must both lie at the flight altitude");
}

void LinkState::validate() const
{
    if (h_bob.size() < 2 || h_bob.size() != h_eve.size())
        throw DomainError("link steering vectors must share a length >= 2");
    if (!(gain_bob > 0.0 && gain_eve > 0.0))
        throw DomainError("path-loss gains must be positive");
    if (!(noise_bob > 0.0 && noise_eve > 0.0))
        throw DomainError("noise variances must be positive");
    if (!(power > 0.0))
        throw DomainError("transmit power must be positive");
}

SteeringVector steering_vector(double theta, const ArrayConfig &array)
{
    array.validate();
    if (!(theta >= 0.0 && theta <= kPi))
        throw DomainError("steering angle must lie in [0, pi], got " + std::to_string(theta));

    const auto m_count = array.num_antennas;
    const double centre = (static_cast<double>(m_count) + 1.0) / 2.0;
    const double c = std::cos(theta);
    CVector entries(m_count);
    for (std::size_t i = 0; i < m_count; ++i)
    {
        const double m = static_cast<double>(i + 1); // 1-based antenna index
        const double psi = -(m - centre) * array.spacing_over_wavelength * c;
        entries[i] = std::polar(1.0, 2.0 * kPi * psi);
    }
    return SteeringVector(std::move(entries));
}

double axis_angle(const Point3 &direction)
{
    const double len = norm(direction);
    if (!(len > 0.0))
        throw DomainError("direction vector has zero length");
    return std::acos(std::clamp(direction.x / len, -1.0, 1.0));
}

std::vector<TrajectorySample> sample_trajectory(const ScenarioGeometry &geom)
{
    geom.validate();

    const Point3 path = geom.flight_end - geom.flight_start;
    const double length = norm(path);
    const double duration = length / geom.speed;
    // Tolerate rounding in T / dt so that e.g. 800 m at 8 m/s gives exactly 100 samples.
    const double ratio = duration / geom.sample_interval;
    const auto count = static_cast<long long>(std::floor(ratio * (1.0 + 1e-12)));
    if (count <= 0)
        throw ConfigError("trajectory is shorter than one sample interval");

    const Point3 to_eve = geom.eve - geom.alice;
    const double dist_eve = norm(to_eve);
    if (!(dist_eve > 0.0))
        throw DomainError("Eve is collocated with Alice");
    const double theta_eve = axis_angle(to_eve);

    std::vector<TrajectorySample> samples;
    samples.reserve(static_cast<std::size_t>(count));
    for (long long n = 1; n <= count; ++n)
    {
        const double travelled = static_cast<double>(n) * geom.sample_interval * geom.speed;
        TrajectorySample s;
        s.index = static_cast<int>(n);
        s.bob = geom.flight_start + (travelled / length) * path;
        const Point3 to_bob = s.bob - geom.alice;
        s.dist_bob = norm(to_bob);
        if (!(s.dist_bob > 0.0))
            throw DomainError("sample " + std::to_string(n) + " places Bob at Alice's position");
        s.theta_bob = axis_angle(to_bob);
        s.theta_eve = theta_eve;
        s.dist_eve = dist_eve;
        samples.push_back(s);
    }
    return samples;
}

double path_loss(double distance, const ScenarioGeometry &geom)
{
    if (!(distance > 0.0))
        throw DomainError("path loss needs a positive distance");
    return geom.reference_gain / std::pow(distance, geom.path_loss_exponent);
}

} // namespace uavdm
