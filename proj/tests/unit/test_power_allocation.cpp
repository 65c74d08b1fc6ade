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

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "uavdm/errors.hpp"
#include "uavdm/power_allocation.hpp"
#include "uavdm/rates.hpp"

#include <algorithm>
#include <cmath>
#include <map>

using namespace uavdm;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

LinkState symmetric_link(std::size_t m, double power)
{
    LinkState l;
    l.h_bob = steering_vector(0.7, {m, 0.5});
    l.h_eve = l.h_bob;
    l.gain_bob = l.gain_eve = 4e-5;
    l.noise_bob = l.noise_eve = 1e-7;
    l.power = power;
    return l;
}

RationalCoefficients make(double a, double b, double c, double d, double e)
{
    RationalCoefficients r;
    r.A = a;
    r.B = b;
    r.C = c;
    r.D = d;
    r.E = e;
    r.F = c;
    return r;
}

// Dense scan of phi over [0, 1], independent of the case analysis.
std::pair<double, wide_real> scan_phi(const RationalCoefficients &c, int points = 1000000)
{
    double best_b = 0.0;
    wide_real best = 1; // phi(0)
    for (int k = 1; k <= points; ++k)
    {
        const wide_real b = wide_real(k) / points;
        const wide_real v = (c.A * b * b + c.B * b + c.C) / (c.D * b * b + c.E * b + c.F);
        if (v > best)
        {
            best = v;
            best_b = static_cast<double>(b);
        }
    }
    return {best_b, best};
}

} // namespace

TEST_CASE("rational_coefficients - symmetric links give phi identically 1")
{
    testing::Rng rng(30);
    const auto link = symmetric_link(8, 100.0);
    for (int i = 0; i < 10; ++i)
    {
        const auto bf = testing::random_beamformers(link, rng, static_cast<std::size_t>(i));
        const auto c = rational_coefficients(link, bf);
        CHECK(c.A == c.D);
        CHECK(c.B == c.E);
        CHECK(c.C == c.F);
        CHECK(c.is_constant());
        for (double beta : {0.0, 0.3, 1.0})
            CHECK(c.phi(beta) == 1);

        const auto sp = stationary_points(c);
        CHECK(sp.constant);
        CHECK_FALSE(sp.root1);
        CHECK_FALSE(sp.root2);
        CHECK_FALSE(sp.root3);

        const auto sol = optimal_beta(link, bf);
        CHECK(sol.beta_star == 1.0);
        CHECK(sol.winning_candidate == Candidate::constant_function);
        CHECK(sol.secrecy_rate_at_beta == 0.0);

        const auto grid = beta_grid_oracle(link, bf, 1e-3);
        CHECK(grid.rate_gap == 0.0);
    }
}

TEST_CASE("rational_coefficients - positivity, f(0) = 0 and the rate identity")
{
    testing::Rng rng(31);
    for (std::size_t i = 0; i < 200; ++i)
    {
        const std::size_t m = 4 << rng.index(3);
        const auto link = testing::random_link(m, 10.0 * (1 + rng.index(3)), rng);
        const auto bf = testing::random_beamformers(link, rng, i);
        const auto c = rational_coefficients(link, bf);
        CHECK(c.C > 0);
        CHECK(c.F == c.C);
        CHECK(c.phi(0) == 1);
        CHECK(c.rate_gap(0.0) == 0.0);
        for (int k = 0; k < 100; ++k)
        {
            const double beta = k / 99.0;
            CHECK(c.denominator(beta) > 0);
            const double expected = testing::ref_rate_bob(link, bf, beta) - testing::ref_rate_eve(link, bf, beta);
            CHECK_THAT(c.rate_gap(beta), WithinAbs(expected, 1e-9));
        }
    }
}

TEST_CASE("rational_coefficients - self-check rejects inconsistent inputs")
{
    testing::Rng rng(32);
    auto link = testing::random_link(4, 20.0, rng);
    const auto bf = leakage_beamformers(link, 0.5);
    // Non-finite powers break the identity; the self-check must notice.
    link.power = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(rational_coefficients(link, bf), ConsistencyError);
}

TEST_CASE("stationary_points - constructed cases")
{
    SECTION("no real roots, increasing")
    {
        const auto c = make(0.1, 2.0, 1.0, 0.0, 1.0);
        const auto sp = stationary_points(c);
        CHECK(sp.delta < 0.0);
        CHECK_FALSE(sp.root1);
        CHECK_FALSE(sp.root2);
        const auto sol = optimal_beta(c);
        CHECK(sol.beta_star == 1.0);
        CHECK(sol.winning_candidate == Candidate::endpoint_1);
        CHECK(sol.secrecy_rate_at_beta > 0.0);
    }
    SECTION("no real roots, decreasing: endpoint 1 with a negative gap")
    {
        const auto c = make(0.0, 1.0, 1.0, 0.1, 2.0);
        const auto sp = stationary_points(c);
        CHECK(sp.delta < 0.0);
        CHECK(c.slope_leading() < 0);
        const auto sol = optimal_beta(c);
        CHECK(sol.beta_star == 1.0);
        CHECK(sol.winning_candidate == Candidate::endpoint_1);
        CHECK_THAT(sol.secrecy_rate_at_beta, WithinAbs(std::log2(2.0 / 3.1), 1e-15));
        CHECK(sol.zero_secrecy());
    }
    SECTION("AE - BD = 0 with an interior stationary point")
    {
        const auto c = make(-1.0, 1.0, 1.0, 0.0, 0.0); // phi = 1 + b - b^2
        const auto sp = stationary_points(c);
        REQUIRE(sp.root3);
        CHECK(*sp.root3 == 0.5);
        const auto sol = optimal_beta(c);
        CHECK(sol.beta_star == 0.5);
        CHECK(sol.winning_candidate == Candidate::degenerate_root);
        CHECK_THAT(sol.secrecy_rate_at_beta, WithinAbs(std::log2(1.25), 1e-15));
    }
    SECTION("AE - BD = 0 with the stationary point outside (0, 1)")
    {
        const auto c = make(-1.0, 3.0, 1.0, 0.0, 0.0);
        const auto sp = stationary_points(c);
        REQUIRE(sp.root3);
        CHECK(*sp.root3 == 1.5);
        CHECK(optimal_beta(c).beta_star == 1.0);
    }
    SECTION("AE - BD = 0 and A = D: monotone ratio of linears")
    {
        const auto c = make(0.0, 1.0, 1.0, 0.0, 2.0);
        const auto sp = stationary_points(c);
        CHECK_FALSE(sp.constant);
        CHECK_FALSE(sp.root3);
        const auto sol = optimal_beta(c);
        CHECK(sol.beta_star == 1.0);
        CHECK(sol.winning_candidate == Candidate::endpoint_1);
    }
    SECTION("both roots inside (0, 1), the local maximum wins")
    {
        // derivative numerator = -0.1 (b - 0.3)(b - 0.7)
        const auto c = make(10.05, -6.221, 1.0, 10.0, -6.2);
        const auto sp = stationary_points(c);
        REQUIRE(sp.root1);
        REQUIRE(sp.root2);
        CHECK_THAT(*sp.root1, WithinAbs(0.3, 1e-12));
        CHECK_THAT(*sp.root2, WithinAbs(0.7, 1e-12));
        CHECK_THAT(sp.delta, WithinAbs(4e-4, 1e-12));
        const auto sol = optimal_beta(c);
        CHECK(sol.winning_candidate == Candidate::root2);
        CHECK_THAT(sol.beta_star, WithinAbs(0.7, 1e-12));
        CHECK(c.phi(sol.beta_star) > c.phi(1));
    }
}

TEST_CASE("stationary_points - roots zero the derivative numerator")
{
    testing::Rng rng(33);
    int with_roots = 0;
    for (std::size_t i = 0; i < 500; ++i)
    {
        const std::size_t m = 4 << rng.index(3);
        const auto link = testing::random_link(m, 10.0 * (1 + rng.index(3)), rng);
        const auto c = rational_coefficients(link, testing::random_beamformers(link, rng, i));
        const auto sp = stationary_points(c);
        const wide_real k = c.slope_leading(), lin = 2 * c.C * (c.A - c.D), con = c.C * (c.B - c.E);
        for (const auto &r : {sp.root1, sp.root2, sp.root3})
        {
            if (!r)
                continue;
            ++with_roots;
            const wide_real b = *r;
            const wide_real residual = k * b * b + lin * b + con;
            const wide_real scale = wide_abs(k * b * b) + wide_abs(lin * b) + wide_abs(con);
            CHECK(static_cast<double>(wide_abs(residual)) <= 1e-8 * static_cast<double>(scale));
        }
        if (sp.delta < 0)
        {
            CHECK_FALSE(sp.root1);
            CHECK_FALSE(sp.root2);
        }
    }
    CHECK(with_roots > 0);
}

TEST_CASE("optimal_beta - Eve receiving nothing makes the full power best")
{
    testing::Rng rng(34);
    auto link = testing::random_link(8, 20.0, rng);
    link.gain_eve = 1e-300;
    const auto bf = leakage_beamformers(link, 0.5);
    const auto sol = optimal_beta(link, bf);
    CHECK(sol.beta_star == 1.0);
    CHECK_THAT(sol.secrecy_rate_at_beta, WithinAbs(rate_bob(link, bf, 1.0), 1e-9));
    CHECK(beta_grid_oracle(link, bf, 1e-3).beta == 1.0);
}

TEST_CASE("optimal_beta - matches a dense scan of phi on constructed coefficients")
{
    testing::Rng rng(35);
    for (int i = 0; i < 300; ++i)
    {
        // Physically shaped coefficients from positive received-power terms.
        const double xb_noise = rng.uniform(0.01, 1.0), xe_noise = rng.uniform(0.01, 1.0);
        const double zb = rng.uniform(0.0, 5.0), ze = rng.uniform(0.0, 5.0);
        const double yb = rng.uniform(-zb, 5.0), ye = rng.uniform(-ze, 5.0);
        const wide_real Xb = zb + xb_noise, Xe = ze + xe_noise;
        RationalCoefficients c;
        c.A = -(yb * ze);
        c.B = Xe * yb - ze * Xb;
        c.C = Xb * Xe;
        c.D = -(zb * ye);
        c.E = Xb * ye - zb * Xe;
        c.F = c.C;
        const auto sol = optimal_beta(c);
        const auto scan = scan_phi(c, 20000);
        // achieved secrecy is clamped at zero, i.e. phi at 1
        const wide_real achieved = std::max(c.phi(sol.beta_star), wide_real(1));
        CHECK(achieved >= scan.second * (1 - wide_real(1e-12)));
        if (scan.second > 1 + wide_real(1e-9))
            CHECK(c.phi(sol.beta_star) > 1);
        CHECK(sol.beta_star > 0.0);
        CHECK(sol.beta_star <= 1.0);
        const double expected = static_cast<double>(std::log2(static_cast<long double>(c.phi(sol.beta_star))));
        CHECK_THAT(sol.secrecy_rate_at_beta, WithinAbs(expected, 1e-15));
    }
}

TEST_CASE("optimal_beta - closed form vs exhaustive search on random links")
{
    testing::Rng rng(36);
    std::map<Candidate, int> winners;
    for (std::size_t i = 0; i < 300; ++i)
    {
        const std::size_t m = 4 << rng.index(3);
        const double power_dbm = 10.0 * (1 + rng.index(3));
        const auto link = testing::random_link(m, power_dbm, rng);
        const auto bf = testing::random_beamformers(link, rng, i);
        const auto sol = optimal_beta(link, bf);
        const auto grid = beta_grid_oracle(link, bf, 1e-4);
        ++winners[sol.winning_candidate];

        // Achieved secrecy: the grid includes beta = 0 (gap 0), the closed form clamps at 0.
        const double closed = std::max(0.0, sol.secrecy_rate_at_beta);
        CHECK(grid.rate_gap >= 0.0);
        CHECK(closed >= grid.rate_gap - 1e-9);
        // Arbitrary vectors can peak inside the last grid cell; leakage designs cannot.
        if (i % 4 != 3)
            CHECK_THAT(closed, WithinAbs(grid.rate_gap, 1e-6));

        // Reporting invariance against the rates module.
        CHECK_THAT(sol.secrecy_rate_at_beta, WithinAbs(rate_gap(link, bf, sol.beta_star), 1e-9));
        CHECK(sol.beta_star > 0.0);
        CHECK(sol.beta_star <= 1.0);
    }
    CHECK(winners[Candidate::endpoint_1] > 0);
    CHECK(winners[Candidate::root1] + winners[Candidate::root2] > 0);
}

TEST_CASE("beta_grid_oracle - grid bounds and precondition")
{
    testing::Rng rng(37);
    const auto link = testing::random_link(4, 20.0, rng);
    const auto bf = leakage_beamformers(link, 0.5);
    CHECK_THROWS_AS(beta_grid_oracle(link, bf, 0.0), DomainError);
    CHECK_THROWS_AS(beta_grid_oracle(link, bf, 0.02), DomainError);
    const auto coarse = beta_grid_oracle(link, bf, 1e-2);
    const auto fine = beta_grid_oracle(link, bf, 1e-4);
    CHECK(fine.rate_gap >= coarse.rate_gap - 1e-12);
    CHECK(std::abs(fine.beta - coarse.beta) <= 1e-2 + 1e-12);
    const auto sol = optimal_beta(link, bf);
    if (sol.secrecy_rate_at_beta > 0.0)
        CHECK(std::abs(fine.beta - sol.beta_star) <= 1e-4 + 1e-12);
}
