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
#include "uavdm/ais.hpp"
#include "uavdm/errors.hpp"
#include "uavdm/experiment.hpp"

#include <algorithm>
#include <cmath>

using namespace uavdm;
using Catch::Matchers::WithinAbs;

namespace
{

LinkState default_scenario_link(std::size_t sample, std::size_t m, double power_dbm)
{
    const ExperimentConfig cfg;
    const auto samples = sample_trajectory(cfg.geometry);
    return make_link(samples.at(sample), cfg, m, power_dbm);
}

bool same_vectors(const CVector &a, const CVector &b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return false;
    return true;
}

} // namespace

TEST_CASE("optimize_point - identical links converge at once with zero secrecy")
{
    LinkState link;
    link.h_bob = steering_vector(0.9, {8, 0.5});
    link.h_eve = link.h_bob;
    link.gain_bob = link.gain_eve = 1e-4;
    link.noise_bob = link.noise_eve = 1e-10;
    link.power = 100.0;
    const auto r = optimize_point(link);
    CHECK(r.trace.converged);
    CHECK(r.trace.iterations_used == 1);
    CHECK(r.rates.secrecy_rate == 0.0);
    REQUIRE(r.power_allocation);
    CHECK(r.power_allocation->winning_candidate == Candidate::constant_function);
}

TEST_CASE("optimize_point - default scenario converges within a few iterations")
{
    for (double p : {10.0, 20.0, 30.0})
    {
        const auto link = default_scenario_link(49, 8, p);
        const auto r = optimize_point(link);
        CHECK(r.trace.converged);
        CHECK(r.trace.iterations_used <= 3);
        CHECK(r.rates.secrecy_rate > 0.0);
    }
}

TEST_CASE("optimize_point - result is consistent with independent recomputation")
{
    testing::Rng rng(40);
    for (int i = 0; i < 100; ++i)
    {
        const std::size_t m = 4 << rng.index(3);
        const auto link = testing::random_link(m, 10.0 * (1 + rng.index(3)), rng);
        const auto r = optimize_point(link);

        const double rb = testing::ref_rate_bob(link, r.beamformers, r.beta);
        const double re = testing::ref_rate_eve(link, r.beamformers, r.beta);
        CHECK_THAT(r.rates.secrecy_rate, WithinAbs(std::max(0.0, rb - re), 1e-9));
        CHECK(r.rates.secrecy_rate >= 0.0);

        // final vectors are the leakage design at the final beta
        const auto redesign = leakage_beamformers(link, r.beta);
        CHECK(same_vectors(redesign.message, r.beamformers.message));
        CHECK(same_vectors(redesign.noise, r.beamformers.noise));

        const auto &its = r.trace.iterates;
        REQUIRE(its.size() == static_cast<std::size_t>(r.trace.iterations_used) + 1);
        CHECK(its.front().beta == AisConfig{}.beta_init);
        if (r.trace.converged)
        {
            CHECK(std::abs(its.back().rate_gap - its[its.size() - 2].rate_gap) <= AisConfig{}.epsilon);
            CHECK(r.beta == its.back().beta);
        }
        for (const auto &it : its)
            CHECK_THAT(it.rate_gap,
                       WithinAbs(testing::ref_rate_bob(link, it.beamformers, it.beta) -
                                     testing::ref_rate_eve(link, it.beamformers, it.beta),
                                 1e-9));
    }
}

TEST_CASE("optimize_point - each PA step is optimal for the previous beamformers")
{
    testing::Rng rng(41);
    for (int i = 0; i < 50; ++i)
    {
        const auto link = testing::random_link(8, 20.0, rng);
        const auto r = optimize_point(link);
        const auto &its = r.trace.iterates;
        for (std::size_t k = 1; k < its.size(); ++k)
        {
            const auto &prev = its[k - 1];
            const double at_prev = rate_gap(link, prev.beamformers, prev.beta);
            const double at_new = rate_gap(link, prev.beamformers, its[k].beta);
            // the new beta never does worse than the old one on the same vectors (clamped at 0)
            CHECK(std::max(0.0, at_new) >= std::max(0.0, at_prev) - 1e-9);

            // and beats beta = 1 and every interior stationary point outright
            CHECK(at_new >= rate_gap(link, prev.beamformers, 1.0) - 1e-9);
            const auto sp = stationary_points(rational_coefficients(link, prev.beamformers));
            for (const auto &root : {sp.root1, sp.root2, sp.root3})
                if (root && *root > 0.0 && *root < 1.0)
                    CHECK(at_new >= rate_gap(link, prev.beamformers, *root) - 1e-9);
        }
    }
}

TEST_CASE("optimize_point - deterministic")
{
    testing::Rng rng(42);
    const auto link = testing::random_link(16, 30.0, rng);
    const auto a = optimize_point(link);
    const auto b = optimize_point(link);
    CHECK(a.beta == b.beta);
    CHECK(a.rates.secrecy_rate == b.rates.secrecy_rate);
    CHECK(a.trace.iterations_used == b.trace.iterations_used);
    CHECK(same_vectors(a.beamformers.message, b.beamformers.message));
}

TEST_CASE("optimize_point - iteration cap returns the best iterate unconverged")
{
    testing::Rng rng(43);
    AisConfig cfg;
    cfg.epsilon = 1e-300;
    cfg.max_iterations = 1;
    for (int i = 0; i < 20; ++i)
    {
        const auto link = testing::random_link(8, 20.0, rng);
        const auto r = optimize_point(link, cfg);
        if (r.trace.converged)
            continue; // exact repeat of the gap
        CHECK(r.trace.iterations_used == 1);
        const auto &its = r.trace.iterates;
        REQUIRE(its.size() == 2);
        const double best = std::max(its[0].rate_gap, its[1].rate_gap);
        CHECK(r.rates.rate_gap() == best);
    }
}

TEST_CASE("optimize_point - grid-search power step agrees with the closed form")
{
    testing::Rng rng(44);
    AisConfig grid;
    grid.power_step = PowerStep::grid_search;
    grid.grid_step = 1e-4;
    for (int i = 0; i < 10; ++i)
    {
        const auto link = testing::random_link(8, 20.0, rng);
        const auto a = optimize_point(link);
        const auto g = optimize_point(link, grid);
        CHECK_FALSE(g.power_allocation);
        CHECK_THAT(a.rates.secrecy_rate, WithinAbs(g.rates.secrecy_rate, 1e-4));
    }
}

TEST_CASE("optimize_point - holding beta reproduces the fixed baseline")
{
    testing::Rng rng(45);
    AisConfig hold;
    hold.power_step = PowerStep::hold;
    hold.max_iterations = 1;
    for (double beta : {0.3, 0.5, 0.9})
    {
        hold.beta_init = beta;
        const auto link = testing::random_link(8, 20.0, rng);
        const auto h = optimize_point(link, hold);
        const auto b = run_baseline(link, beta);
        CHECK(h.trace.converged);
        CHECK(h.beta == beta);
        CHECK(h.rates.secrecy_rate == b.rates.secrecy_rate);
        CHECK(same_vectors(h.beamformers.message, b.beamformers.message));
    }
}

TEST_CASE("run_baseline - closed example and preconditions")
{
    testing::Rng rng(46);
    const auto link = testing::random_link(4, 10.0, rng);
    const auto b = run_baseline(link, 0.5);
    const auto bf = leakage_beamformers(link, 0.5);
    CHECK(same_vectors(b.beamformers.noise, bf.noise));
    CHECK_THAT(b.rates.rate_bob, WithinAbs(testing::ref_rate_bob(link, bf, 0.5), 1e-10));
    CHECK_THAT(b.rates.rate_eve, WithinAbs(testing::ref_rate_eve(link, bf, 0.5), 1e-10));
    CHECK_THROWS_AS(run_baseline(link, 0.0), DomainError);
    CHECK_THROWS_AS(run_baseline(link, 1.0), DomainError);

    LinkState same = link;
    same.h_eve = same.h_bob;
    same.gain_eve = same.gain_bob;
    same.noise_eve = same.noise_bob;
    CHECK(run_baseline(same, 0.5).rates.secrecy_rate == 0.0);

    LinkState silent = link;
    silent.gain_eve = 1e-300;
    const auto s9 = run_baseline(silent, 0.9);
    CHECK_THAT(s9.rates.secrecy_rate, WithinAbs(rate_bob(silent, s9.beamformers, 0.9), 1e-12));
}

TEST_CASE("AisConfig - validation")
{
    AisConfig c;
    CHECK_NOTHROW(c.validate());
    c.beta_init = 1.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.epsilon = 0.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.max_iterations = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}
