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

#include "uavdm/experiment.hpp"
#include "uavdm/ais.hpp"
#include "uavdm/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iostream>
#include <mutex>
#include <thread>

namespace uavdm
{

double dbm_to_mw(double dbm)
{
    return std::pow(10.0, dbm / 10.0);
}

LinkState make_link(const TrajectorySample &sample, const ExperimentConfig &cfg, std::size_t antennas,
                    double power_dbm)
{
    ArrayConfig array = cfg.array;
    array.num_antennas = antennas;

    LinkState link;
    link.sample_index = sample.index;
    link.h_bob = steering_vector(sample.theta_bob, array);
    link.gain_bob = path_loss(sample.dist_bob, cfg.geometry);
    link.noise_bob = dbm_to_mw(cfg.noise_dbm_bob);
    link.power = dbm_to_mw(power_dbm);
    if (cfg.eve_mirrors_bob)
    {
        link.h_eve = link.h_bob;
        link.gain_eve = link.gain_bob;
        link.noise_eve = link.noise_bob;
    }
    else
    {
        link.h_eve = steering_vector(sample.theta_eve, array);
        link.gain_eve = path_loss(sample.dist_eve, cfg.geometry);
        link.noise_eve = dbm_to_mw(cfg.noise_dbm_eve);
    }
    return link;
}

ResultRecord evaluate_point(const LinkState &link, const Strategy &strategy, const ExperimentConfig &cfg)
{
    ResultRecord rec;
    rec.sample = link.sample_index;
    rec.strategy = strategy.name();

    RateBreakdown rates;
    if (strategy.kind == Strategy::Kind::fixed)
    {
        const auto base = run_baseline(link, strategy.beta);
        rec.beta = strategy.beta;
        rates = base.rates;
    }
    else
    {
        AisConfig ais = cfg.ais;
        ais.grid_step = cfg.grid_step;
        ais.power_step = strategy.kind == Strategy::Kind::ais ? PowerStep::closed_form : PowerStep::grid_search;
        const auto res = optimize_point(link, ais);
        rec.beta = res.beta;
        rec.iterations = res.trace.iterations_used;
        rec.converged = res.trace.converged;
        rates = res.rates;
    }
    rec.rate_bob = rates.rate_bob;
    rec.rate_eve = rates.rate_eve;
    rec.secrecy_rate = rates.secrecy_rate;
    return rec;
}

std::vector<AggregateRecord> aggregate(const std::vector<ResultRecord> &records)
{
    std::vector<AggregateRecord> out;
    for (const auto &r : records)
    {
        if (out.empty() || out.back().strategy != r.strategy || out.back().antennas != r.antennas ||
            out.back().power_dbm != r.power_dbm)
        {
            AggregateRecord a;
            a.strategy = r.strategy;
            a.antennas = r.antennas;
            a.power_dbm = r.power_dbm;
            out.push_back(a);
        }
        auto &a = out.back();
        ++a.points;
        a.clamped_sum_rate += r.secrecy_rate;
        a.secrecy_sum_rate += r.rate_bob - r.rate_eve;
        if (!r.converged)
            ++a.unconverged;
    }
    for (auto &a : out)
    {
        a.mean_secrecy_rate = a.clamped_sum_rate / a.points;
        a.secrecy_sum_rate = std::max(0.0, a.secrecy_sum_rate);
    }
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig &cfg, unsigned parallelism)
{
    cfg.validate();
    const auto samples = sample_trajectory(cfg.geometry);

    struct WorkItem
    {
        const Strategy *strategy;
        std::size_t antennas;
        double power_dbm;
        const TrajectorySample *sample;
    };
    std::vector<WorkItem> items;
    items.reserve(cfg.strategies.size() * cfg.antenna_sweep.size() * cfg.power_sweep_dbm.size() * samples.size());
    for (const auto &s : cfg.strategies)
        for (auto m : cfg.antenna_sweep)
            for (auto p : cfg.power_sweep_dbm)
                for (const auto &smp : samples)
                    items.push_back({&s, m, p, &smp});

    std::vector<ResultRecord> records(items.size());
    auto run_item = [&](std::size_t i) {
        const auto &w = items[i];
        const auto link = make_link(*w.sample, cfg, w.antennas, w.power_dbm);
        auto rec = evaluate_point(link, *w.strategy, cfg);
        rec.antennas = w.antennas;
        rec.power_dbm = w.power_dbm;
        rec.theta_bob = w.sample->theta_bob;
        records[i] = std::move(rec);
    };

    if (parallelism == 0)
        parallelism = std::max(1u, std::thread::hardware_concurrency());
    parallelism = static_cast<unsigned>(std::min<std::size_t>(parallelism, items.size()));

    if (parallelism <= 1)
    {
        for (std::size_t i = 0; i < items.size(); ++i)
            run_item(i);
    }
    else
    {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> workers;
            for (unsigned t = 0; t < parallelism; ++t)
                workers.emplace_back([&] {
                    for (std::size_t i = next++; i < items.size(); i = next++)
                    {
                        try
                        {
                            run_item(i);
                        }
                        catch (...)
                        {
                            std::lock_guard lock(failure_mutex);
                            if (!failure)
                                failure = std::current_exception();
                            next = items.size();
                        }
                    }
                });
        }
        if (failure)
            std::rethrow_exception(failure);
    }

    for (const auto &r : records)
        if (!r.converged)
            std::cerr << "warning: " << r.strategy << " M=" << r.antennas << " Ps=" << r.power_dbm
                      << "dBm n=" << r.sample << " stopped at the iteration cap without converging\n";

    ExperimentResult result;
    result.aggregates = aggregate(records);
    result.records = std::move(records);
    return result;
}

} // namespace uavdm
