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

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace uavdm
{

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr double kPi = 3.14159265358979323846;

// Uniform linear array along the +x axis.
struct ArrayConfig
{
    std::size_t num_antennas = 8;
    double spacing_over_wavelength = 0.5; // d / lambda

    void validate() const; // throws ConfigError
};

// Unit-modulus array response toward one direction. Length M, norm sqrt(M).
class SteeringVector
{
public:
    SteeringVector() = default;
    explicit SteeringVector(CVector entries) : entries_(std::move(entries)) {}

    std::size_t size() const noexcept { return entries_.size(); }
    const Complex &operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Complex> entries() const noexcept { return entries_; }
    const CVector &vector() const noexcept { return entries_; }

private:
    CVector entries_;
};

struct Point3
{
    double x = 0.0, y = 0.0, z = 0.0;

    friend Point3 operator+(const Point3 &a, const Point3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Point3 operator-(const Point3 &a, const Point3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Point3 operator*(double s, const Point3 &a) { return {s * a.x, s * a.y, s * a.z}; }
    friend bool operator==(const Point3 &, const Point3 &) = default;
};

double norm(const Point3 &p);

// Positions in metres, Alice's array axis along +x. Defaults: straight 800 m
// flight at 20 m altitude, Eve on the ground 200 m from Alice.
struct ScenarioGeometry
{
    Point3 alice{0.0, 0.0, 0.0};
    Point3 eve{200.0, 0.0, 0.0};
    Point3 flight_start{0.0, 0.0, 20.0};
    Point3 flight_end{800.0, 0.0, 20.0};
    double altitude = 20.0;
    double speed = 8.0;           // m/s
    double sample_interval = 1.0; // s
    double path_loss_exponent = 2.0;
    double reference_gain = 1.0; // path loss at the 1 m reference distance

    void validate() const; // throws ConfigError
};

struct TrajectorySample
{
    int index = 0; // 1-based
    Point3 bob;
    double theta_bob = 0.0;
    double theta_eve = 0.0;
    double dist_bob = 0.0;
    double dist_eve = 0.0;
};

// Everything needed to evaluate one sampling point. Powers and noise variances
// share one linear unit (the harness uses mW).
struct LinkState
{
    SteeringVector h_bob;
    SteeringVector h_eve;
    double gain_bob = 1.0;
    double gain_eve = 1.0;
    double noise_bob = 1.0;
    double noise_eve = 1.0;
    double power = 1.0;
    int sample_index = 0;

    std::size_t num_antennas() const noexcept { return h_bob.size(); }
    void validate() const; // throws DomainError
};

// Entry m (1-based) is exp(j 2 pi Psi(m)), Psi(m) = -(m - (M+1)/2) (d/lambda) cos(theta).
SteeringVector steering_vector(double theta, const ArrayConfig &array);

// Angle between the +x array axis and the vector `direction`, in [0, pi].
double axis_angle(const Point3 &direction);

std::vector<TrajectorySample> sample_trajectory(const ScenarioGeometry &geom);

// alpha / distance^c
double path_loss(double distance, const ScenarioGeometry &geom);

} // namespace uavdm
