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

#include "uavdm/core_model.hpp"

#include <span>

namespace uavdm
{

// Unit-norm beamformers for the confidential message (toward Bob) and the
// artificial noise (toward Eve).
struct BeamformingPair
{
    CVector message;
    CVector noise;
};

/*!
Signal-to-leakage-and-noise ratio of a message beamformer:

    beta P |h_b^H v|^2 / v^H (beta P h_e h_e^H + sigma_b^2 I) v

`v` is expected to be unit norm.
*/
double slnr_value(std::span<const Complex> v, const LinkState &link, double beta);

/*!
Artificial-noise-and-leakage-to-noise ratio of an AN beamformer:

    (1-beta) P |h_e^H v|^2 / v^H ((1-beta) P h_b h_b^H + sigma_e^2 I) v
*/
double anlnr_value(std::span<const Complex> v, const LinkState &link, double beta);

/*!
Max-SLNR message beamformer for a fixed power-allocation factor.

Returns the normalized (beta P h_e h_e^H + sigma_b^2 I)^{-1} h_b, evaluated with
the rank-one inverse identity in O(M). beta = 0 is accepted and yields the
matched filter h_b / sqrt(M). The sign is fixed so that the first entry has a
nonnegative real part.
*/
CVector slnr_beamformer(const LinkState &link, double beta);

/*!
Max-ANLNR artificial-noise beamformer, the mirror of slnr_beamformer with the
roles of Bob and Eve exchanged and (1 - beta) P as the AN power. beta = 1 yields
h_e / sqrt(M).
*/
CVector anlnr_beamformer(const LinkState &link, double beta);

// Both leakage beamformers at the same beta.
BeamformingPair leakage_beamformers(const LinkState &link, double beta);

} // namespace uavdm
