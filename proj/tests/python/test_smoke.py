# SPDX-License-Identifier: Apache-2.0
import math

import pytest

import uavdm


def make_link(theta_b=1.0, theta_e=0.4, m=8, power_dbm=20.0):
    arr = uavdm.ArrayConfig(m, 0.5)
    return uavdm.LinkState(
        uavdm.steering_vector(theta_b, arr),
        uavdm.steering_vector(theta_e, arr),
        1.0 / 300.0**2,
        1.0 / 200.0**2,
        1e-10,
        1e-10,
        10.0 ** (power_dbm / 10.0),
    )


def test_steering_vector_broadside():
    h = uavdm.steering_vector(math.pi / 2, uavdm.ArrayConfig(4, 0.5))
    assert len(h) == 4
    assert all(abs(x - 1.0) < 1e-15 for x in h)


def test_steering_vector_rejects_bad_angle():
    with pytest.raises(ValueError):
        uavdm.steering_vector(-0.5, uavdm.ArrayConfig(4, 0.5))


def test_power_allocation_matches_grid():
    link = make_link()
    bf = uavdm.leakage_beamformers(link, 0.3)
    sol = uavdm.optimal_beta(link, bf)
    grid = uavdm.beta_grid_oracle(link, bf, 1e-4)
    assert 0.0 < sol.beta_star <= 1.0
    assert abs(max(0.0, sol.secrecy_rate_at_beta) - grid.rate_gap) < 1e-6
    assert sol.winning_candidate in {"root1", "root2", "degenerate_root", "endpoint_1", "constant_function"}
    assert abs(sol.coefficients.C - sol.coefficients.F) == 0.0


def test_optimize_point_beats_fixed():
    link = make_link()
    res = uavdm.optimize_point(link)
    assert res.trace.converged
    assert res.rates.secrecy_rate >= uavdm.run_baseline(link, 0.5).rates.secrecy_rate - 1e-9
    assert len(res.trace.iterates) == res.trace.iterations_used + 1


def test_identical_links_have_no_secrecy():
    arr = uavdm.ArrayConfig(8, 0.5)
    h = uavdm.steering_vector(0.7, arr)
    link = uavdm.LinkState(h, h, 1e-5, 1e-5, 1e-10, 1e-10, 100.0)
    assert uavdm.optimize_point(link).rates.secrecy_rate == 0.0


def test_experiment_round_trip():
    cfg = uavdm.parse_config_text(
        "geometry.end = 80, 0, 20\nsweep.power_dbm = 10\nsweep.antennas = 4\nstrategies = ais, fixed(0.5)\n"
    )
    assert cfg.strategies == ["ais", "fixed(0.5)"]
    res = uavdm.run_experiment(cfg, 2)
    assert len(res.records) == 2 * 10
    assert res.records[0].strategy == "ais"
    assert all(r.Rs >= 0.0 for r in res.records)
    csv = uavdm.format_results(res.records, "csv")
    assert csv.splitlines()[0] == "strategy,M,Ps_dbm,n,theta_b,beta,Rb,Re,Rs,iterations,converged"
    assert csv == uavdm.format_results(uavdm.run_experiment(cfg).records, "csv")
    text = uavdm.serialize_config(cfg)
    assert uavdm.serialize_config(uavdm.parse_config_text(text)) == text


def test_config_errors_raise():
    with pytest.raises(ValueError, match="geometry.speed"):
        uavdm.parse_config_text("geometry.speed = 0\n")
