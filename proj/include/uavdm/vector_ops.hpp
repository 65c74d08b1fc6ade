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

#include <cmath>
#include <span>
#include <stdexcept>

namespace uavdm
{

// x^H y
inline Complex inner(std::span<const Complex> x, std::span<const Complex> y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("inner: length mismatch");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += std::conj(x[i]) * y[i];
    return acc;
}

inline double squared_norm(std::span<const Complex> x)
{
    double acc = 0.0;
    for (const auto &v : x)
        acc += std::norm(v);
    return acc;
}

// |x^H y|^2
inline double projection_power(std::span<const Complex> x, std::span<const Complex> y)
{
    return std::norm(inner(x, y));
}

// (a I + x x^H)^{-1} y via Sherman-Morrison: (1/a)(y - x (x^H y) / (a + ||x||^2)).
// `scale` multiplies x, i.e. the matrix is a I + scale^2 x x^H for real scale.
inline CVector solve_shifted_rank_one(double a, std::span<const Complex> x, double scale_sq,
                                      std::span<const Complex> y)
{
    const Complex xy = inner(x, y);
    const double denom = a + scale_sq * squared_norm(x);
    const Complex coeff = scale_sq * xy / denom;
    CVector out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        out[i] = (y[i] - x[i] * coeff) / a;
    return out;
}

} // namespace uavdm
