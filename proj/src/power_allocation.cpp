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

#include "uavdm/power_allocation.hpp"
#include "uavdm/errors.hpp"
#include "uavdm/rates.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace uavdm
{

double RationalCoefficients::rate_gap(double beta) const
{
    return static_cast<double>(std::log2(static_cast<long double>(phi(beta))));
}

wide_real wide_sqrt(wide_real x)
{
    if (!(x > 0))
        return 0;
    wide_real s = std::sqrt(static_cast<long double>(x));
    for (int i = 0; i < 2; ++i)
        s = (s + x / s) / 2;
    return s;
}

RationalCoefficients rational_coefficients_unchecked(const LinkState &link, const BeamformingPair &bf)
{
    link.validate();
    if (bf.message.size() != link.num_antennas() || bf.noise.size() != link.num_antennas())
        throw DomainError("beamformer length does not match the array");

    const auto p = projection_gains(link, bf);
    using LD = wide_real;
    const LD P = link.power;
    const LD gb = link.gain_bob, ge = link.gain_eve;
    const LD sb = link.noise_bob, se = link.noise_eve;

    // Per receiver, 1 + SINR(beta) = (X + beta Y) / (X - beta Z) with
    //   X = g P |h^H v_an|^2 + sigma^2   (interference plus noise at beta = 0)
    //   Y = g P (|h^H v_b|^2 - |h^H v_an|^2)
    //   Z = g P |h^H v_an|^2
    const LD Xb = gb * P * LD(p.bob_noise) + sb;
    const LD Yb = gb * P * (LD(p.bob_message) - LD(p.bob_noise));
    const LD Zb = gb * P * LD(p.bob_noise);
    const LD Xe = ge * P * LD(p.eve_noise) + se;
    const LD Ye = ge * P * (LD(p.eve_message) - LD(p.eve_noise));
    const LD Ze = ge * P * LD(p.eve_noise);

    // phi = (Xb + beta Yb)(Xe - beta Ze) / ((Xb - beta Zb)(Xe + beta Ye))
    RationalCoefficients c;
    c.A = -(Yb * Ze); // g_ab g_ae P^2 |h_e^H v_an|^2 (|h_b^H v_an|^2 - |h_b^H v_b|^2)
    c.B = Xe * Yb - Ze * Xb;
    c.C = Xb * Xe;
    c.D = -(Zb * Ye); // g_ab g_ae P^2 |h_b^H v_an|^2 (|h_e^H v_an|^2 - |h_e^H v_b|^2)
    c.E = Xb * Ye - Zb * Xe;
    c.F = c.C;
    return c;
}

RationalCoefficients rational_coefficients(const LinkState &link, const BeamformingPair &bf)
{
    auto c = rational_coefficients_unchecked(link, bf);
    for (double beta : {0.0, 0.25, 0.5, 0.75, 1.0})
    {
        const double from_phi = c.rate_gap(beta);
        const double from_rates = rate_gap(link, bf, beta);
        if (!(std::abs(from_phi - from_rates) <= 1e-9))
        {
            std::ostringstream msg;
            msg.precision(17);
            msg << "rational coefficients disagree with the rate formulas at beta=" << beta << ": log2 phi="
                << from_phi << ", R_b-R_e=" << from_rates;
            throw ConsistencyError(msg.str());
        }
    }
    return c;
}

StationaryPoints stationary_points(const RationalCoefficients &c)
{
    using LD = wide_real;
    StationaryPoints sp;
    const LD k = c.slope_leading();  // AE - BD
    const LD half_b = c.C * (c.A - c.D); // half the linear coefficient
    const LD delta = half_b * half_b - c.C * k * (c.B - c.E);
    sp.delta = static_cast<double>(delta);

    if (c.is_constant())
    {
        sp.constant = true;
        return sp;
    }
    if (k == 0)
    {
        if (c.A != c.D)
            sp.root3 = static_cast<double>((c.E - c.B) / (2 * (c.A - c.D)));
        return sp;
    }
    if (delta < 0)
        return sp;

    // Cancellation-free pairing of the two roots; root1 takes +sqrt(delta).
    const LD s = wide_sqrt(delta);
    const LD prod_num = c.C * (c.B - c.E); // root1 * root2 = prod_num / k
    if (half_b >= 0)
    {
        const LD q = -half_b - s;
        if (q == 0)
        {
            sp.root1 = sp.root2 = 0.0;
            return sp;
        }
        sp.root2 = static_cast<double>(q / k);
        sp.root1 = static_cast<double>(prod_num / q);
    }
    else
    {
        const LD q = -half_b + s;
        sp.root1 = static_cast<double>(q / k);
        sp.root2 = static_cast<double>(prod_num / q);
    }
    return sp;
}

std::string_view to_string(Candidate c)
{
    switch (c)
    {
    case Candidate::root1:
        return "root1";
    case Candidate::root2:
        return "root2";
    case Candidate::degenerate_root:
        return "degenerate_root";
    case Candidate::endpoint_1:
        return "endpoint_1";
    case Candidate::constant_function:
        return "constant_function";
    }
    return "unknown";
}

namespace
{

bool inside_open_unit(const std::optional<double> &r)
{
    return r && *r > 0.0 && *r < 1.0;
}

struct Best
{
    double beta;
    wide_real phi;
    Candidate tag;

    void offer(double b, wide_real value, Candidate t)
    {
        const wide_real scale = std::max(wide_abs(value), wide_abs(phi));
        if (wide_abs(value - phi) <= wide_real(1e-12) * scale)
        {
            if (b > beta)
                *this = {b, value, t};
        }
        else if (value > phi)
        {
            *this = {b, value, t};
        }
    }
};

} // namespace

PaSolution optimal_beta(const RationalCoefficients &c)
{
    const auto sp = stationary_points(c);

    PaSolution sol;
    sol.coefficients = c;
    sol.delta = sp.delta;

    Best best{1.0, c.phi(1), Candidate::endpoint_1};
    if (sp.constant)
    {
        // Any beta is optimal.
        best.tag = Candidate::constant_function;
    }
    else if (c.slope_leading() == 0)
    {
        // Single stationary point (E-B)/(2(A-D)); without one phi is monotone.
        if (inside_open_unit(sp.root3))
            best.offer(*sp.root3, c.phi(*sp.root3), Candidate::degenerate_root);
    }
    else if (sp.delta < 0)
    {
        // No real stationary point. AE-BD > 0: phi increases, 1 is optimal.
        // AE-BD < 0: phi decreases and the supremum sits at the excluded
        // beta = 0; 1 remains the only candidate and the rate gap is <= 0.
    }
    else
    {
        if (inside_open_unit(sp.root1))
            best.offer(*sp.root1, c.phi(*sp.root1), Candidate::root1);
        if (inside_open_unit(sp.root2))
            best.offer(*sp.root2, c.phi(*sp.root2), Candidate::root2);
    }

    sol.beta_star = best.beta;
    sol.winning_candidate = best.tag;
    sol.secrecy_rate_at_beta = c.rate_gap(best.beta);
    return sol;
}

PaSolution optimal_beta(const LinkState &link, const BeamformingPair &bf)
{
    return optimal_beta(rational_coefficients(link, bf));
}

GridOptimum beta_grid_oracle(const LinkState &link, const BeamformingPair &bf, double step)
{
    if (!(step > 0.0 && step <= 1e-2))
        throw DomainError("grid step must lie in (0, 1e-2]");

    const auto count = static_cast<long long>(std::ceil(1.0 / step - 1e-9));
    GridOptimum best{0.0, rate_gap(link, bf, 0.0)};
    for (long long k = 1; k <= count; ++k)
    {
        const double beta = k == count ? 1.0 : static_cast<double>(k) * step;
        const double value = rate_gap(link, bf, beta);
        if (value >= best.rate_gap)
            best = {beta, value};
    }
    return best;
}

} // namespace uavdm
