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

#include <cfloat>
#include <optional>
#include <string_view>

namespace uavdm
{

// At least quad precision where the platform offers it cheaply.
#if defined(__SIZEOF_FLOAT128__) && LDBL_MANT_DIG < 113
__extension__ typedef __float128 wide_real;
#else
using wide_real = long double;
#endif

inline wide_real wide_abs(wide_real x) { return x < 0 ? -x : x; }
wide_real wide_sqrt(wide_real x);

/*!
For fixed beamformers the rate gap R_b - R_e as a function of the power
allocation factor beta is log2 of a ratio of quadratics:

    phi(beta) = (A beta^2 + B beta + C) / (D beta^2 + E beta + F),   F = C.

Both quadratics are products of positive received-power terms, so C = F > 0 and
phi(0) = 1. The coefficients are held in wide_real.
*/
struct RationalCoefficients
{
    wide_real A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;

    wide_real numerator(wide_real beta) const { return (A * beta + B) * beta + C; }
    wide_real denominator(wide_real beta) const { return (D * beta + E) * beta + F; }
    wide_real phi(wide_real beta) const { return numerator(beta) / denominator(beta); }

    // log2 phi(beta), the rate gap in bits/s/Hz.
    double rate_gap(double beta) const;

    // Leading coefficient of the derivative numerator, AE - BD.
    wide_real slope_leading() const { return A * E - B * D; }
    bool is_constant() const { return A == D && B == E; }
};

/*!
A-F exactly as derived from the received signal and AN powers. Runs a built-in
self-check: log2 phi must reproduce rate_gap() within 1e-9 at
beta in {0, 0.25, 0.5, 0.75, 1}; a mismatch throws ConsistencyError.
*/
RationalCoefficients rational_coefficients(const LinkState &link, const BeamformingPair &bf);

// Variant without the self-check, for callers that verify independently.
RationalCoefficients rational_coefficients_unchecked(const LinkState &link, const BeamformingPair &bf);

/*!
Zeros of the derivative numerator (AE-BD) beta^2 + 2C(A-D) beta + C(B-E).

`root1`/`root2` are (-C(A-D) +/- sqrt(delta)) / (AE-BD) and exist when AE-BD != 0
and delta >= 0; `root3` = (E-B) / (2(A-D)) covers AE-BD = 0 with A != D. Roots are
reported whether or not they lie inside (0, 1).
*/
struct StationaryPoints
{
    double delta = 0.0; // C^2 (A-D)^2 - C (AE-BD)(B-E)
    std::optional<double> root1;
    std::optional<double> root2;
    std::optional<double> root3;
    bool constant = false; // A = D and B = E: phi is identically 1
};

StationaryPoints stationary_points(const RationalCoefficients &c);

enum class Candidate
{
    root1,
    root2,
    degenerate_root,
    endpoint_1,
    constant_function,
};

std::string_view to_string(Candidate c);

struct PaSolution
{
    double beta_star = 1.0;
    // Unclamped rate gap log2 phi(beta_star); <= 0 means no positive secrecy is
    // reachable with these beamformers.
    double secrecy_rate_at_beta = 0.0;
    Candidate winning_candidate = Candidate::endpoint_1;
    double delta = 0.0;
    RationalCoefficients coefficients;

    bool zero_secrecy() const noexcept { return secrecy_rate_at_beta <= 0.0; }
};

/*!
Closed-form Max-SR power allocation for fixed beamformers.

The maximizer of phi over (0, 1] is taken from the stationary points inside the
open interval plus the endpoint 1; beta = 0 (zero secrecy) is never returned.
When phi decreases on the whole interval the endpoint 1 is returned with its
nonpositive rate gap, and the secrecy rate clamps to zero downstream. Ties within
a relative 1e-12 in phi go to the larger beta.
*/
PaSolution optimal_beta(const LinkState &link, const BeamformingPair &bf);
PaSolution optimal_beta(const RationalCoefficients &coefficients);

struct GridOptimum
{
    double beta = 0.0;
    double rate_gap = 0.0;
};

// Exhaustive search of rate_gap() over {0, step, 2 step, ..., 1}; step in (0, 1e-2].
// Ties keep the larger beta.
GridOptimum beta_grid_oracle(const LinkState &link, const BeamformingPair &bf, double step);

} // namespace uavdm
