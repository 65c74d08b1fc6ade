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

#include "uavdm/ais.hpp"
#include "uavdm/beamforming.hpp"
#include "uavdm/config.hpp"
#include "uavdm/core_model.hpp"
#include "uavdm/errors.hpp"
#include "uavdm/experiment.hpp"
#include "uavdm/power_allocation.hpp"
#include "uavdm/rates.hpp"
#include "uavdm/results_io.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace uavdm;

namespace
{

SteeringVector to_steering(const CVector &v)
{
    return SteeringVector(v);
}

} // namespace

PYBIND11_MODULE(_uavdm, m)
{
    m.doc() = "Leakage beamforming, closed-form Max-SR power allocation and the alternating "
              "optimization loop for UAV directional-modulation links";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    // ---- core model ----------------------------------------------------------

    py::class_<ArrayConfig>(m, "ArrayConfig")
        .def(py::init([](std::size_t m_count, double spacing) {
                 ArrayConfig a{m_count, spacing};
                 a.validate();
                 return a;
             }),
             py::arg("num_antennas") = 8, py::arg("spacing_over_wavelength") = 0.5)
        .def_readwrite("num_antennas", &ArrayConfig::num_antennas)
        .def_readwrite("spacing_over_wavelength", &ArrayConfig::spacing_over_wavelength);

    py::class_<Point3>(m, "Point3")
        .def(py::init<double, double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("z") = 0.0)
        .def_readwrite("x", &Point3::x)
        .def_readwrite("y", &Point3::y)
        .def_readwrite("z", &Point3::z)
        .def("__repr__", [](const Point3 &p) {
            return "Point3(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " + std::to_string(p.z) + ")";
        });

    py::class_<ScenarioGeometry>(m, "ScenarioGeometry")
        .def(py::init<>())
        .def_readwrite("alice", &ScenarioGeometry::alice)
        .def_readwrite("eve", &ScenarioGeometry::eve)
        .def_readwrite("flight_start", &ScenarioGeometry::flight_start)
        .def_readwrite("flight_end", &ScenarioGeometry::flight_end)
        .def_readwrite("altitude", &ScenarioGeometry::altitude)
        .def_readwrite("speed", &ScenarioGeometry::speed)
        .def_readwrite("sample_interval", &ScenarioGeometry::sample_interval)
        .def_readwrite("path_loss_exponent", &ScenarioGeometry::path_loss_exponent)
        .def_readwrite("reference_gain", &ScenarioGeometry::reference_gain);

    py::class_<TrajectorySample>(m, "TrajectorySample")
        .def_readonly("index", &TrajectorySample::index)
        .def_readonly("bob", &TrajectorySample::bob)
        .def_readonly("theta_bob", &TrajectorySample::theta_bob)
        .def_readonly("theta_eve", &TrajectorySample::theta_eve)
        .def_readonly("dist_bob", &TrajectorySample::dist_bob)
        .def_readonly("dist_eve", &TrajectorySample::dist_eve);

    py::class_<LinkState>(m, "LinkState")
        .def(py::init([](const CVector &h_bob, const CVector &h_eve, double gain_bob, double gain_eve,
                         double noise_bob, double noise_eve, double power, int sample_index) {
                 LinkState l{to_steering(h_bob), to_steering(h_eve), gain_bob, gain_eve,
                             noise_bob,          noise_eve,          power,    sample_index};
                 l.validate();
                 return l;
             }),
             py::arg("h_bob"), py::arg("h_eve"), py::arg("gain_bob"), py::arg("gain_eve"), py::arg("noise_bob"),
             py::arg("noise_eve"), py::arg("power"), py::arg("sample_index") = 0)
        .def_property_readonly("h_bob", [](const LinkState &l) { return l.h_bob.vector(); })
        .def_property_readonly("h_eve", [](const LinkState &l) { return l.h_eve.vector(); })
        .def_readonly("gain_bob", &LinkState::gain_bob)
        .def_readonly("gain_eve", &LinkState::gain_eve)
        .def_readonly("noise_bob", &LinkState::noise_bob)
        .def_readonly("noise_eve", &LinkState::noise_eve)
        .def_readonly("power", &LinkState::power)
        .def_readonly("sample_index", &LinkState::sample_index);

    m.def(
        "steering_vector", [](double theta, const ArrayConfig &a) { return steering_vector(theta, a).vector(); },
        py::arg("theta"), py::arg("array"));
    m.def("sample_trajectory", &sample_trajectory, py::arg("geometry"));
    m.def("path_loss", &path_loss, py::arg("distance"), py::arg("geometry"));

    // ---- beamforming and rates ------------------------------------------------

    py::class_<BeamformingPair>(m, "BeamformingPair")
        .def(py::init<CVector, CVector>(), py::arg("message"), py::arg("noise"))
        .def_readwrite("message", &BeamformingPair::message)
        .def_readwrite("noise", &BeamformingPair::noise);

    m.def(
        "slnr_value", [](const CVector &v, const LinkState &l, double b) { return slnr_value(v, l, b); },
        py::arg("v"), py::arg("link"), py::arg("beta"));
    m.def(
        "anlnr_value", [](const CVector &v, const LinkState &l, double b) { return anlnr_value(v, l, b); },
        py::arg("v"), py::arg("link"), py::arg("beta"));
    m.def("slnr_beamformer", &slnr_beamformer, py::arg("link"), py::arg("beta"));
    m.def("anlnr_beamformer", &anlnr_beamformer, py::arg("link"), py::arg("beta"));
    m.def("leakage_beamformers", &leakage_beamformers, py::arg("link"), py::arg("beta"));

    py::class_<RateBreakdown>(m, "RateBreakdown")
        .def_readonly("rate_bob", &RateBreakdown::rate_bob)
        .def_readonly("rate_eve", &RateBreakdown::rate_eve)
        .def_readonly("secrecy_rate", &RateBreakdown::secrecy_rate)
        .def_readonly("signal_power_bob", &RateBreakdown::signal_power_bob)
        .def_readonly("an_power_bob", &RateBreakdown::an_power_bob)
        .def_readonly("signal_power_eve", &RateBreakdown::signal_power_eve)
        .def_readonly("an_power_eve", &RateBreakdown::an_power_eve);

    m.def("rate_bob", &rate_bob, py::arg("link"), py::arg("beamformers"), py::arg("beta"));
    m.def("rate_eve", &rate_eve, py::arg("link"), py::arg("beamformers"), py::arg("beta"));
    m.def("secrecy_rate", &secrecy_rate, py::arg("link"), py::arg("beamformers"), py::arg("beta"));
    m.def(
        "secrecy_sum_rate", [](const std::vector<double> &v) { return secrecy_sum_rate(v); },
        py::arg("per_point"));

    // ---- power allocation ------------------------------------------------------

    py::class_<RationalCoefficients>(m, "RationalCoefficients")
        .def_property_readonly("A", [](const RationalCoefficients &c) { return static_cast<double>(c.A); })
        .def_property_readonly("B", [](const RationalCoefficients &c) { return static_cast<double>(c.B); })
        .def_property_readonly("C", [](const RationalCoefficients &c) { return static_cast<double>(c.C); })
        .def_property_readonly("D", [](const RationalCoefficients &c) { return static_cast<double>(c.D); })
        .def_property_readonly("E", [](const RationalCoefficients &c) { return static_cast<double>(c.E); })
        .def_property_readonly("F", [](const RationalCoefficients &c) { return static_cast<double>(c.F); })
        .def("phi", [](const RationalCoefficients &c, double b) { return static_cast<double>(c.phi(b)); })
        .def("rate_gap", &RationalCoefficients::rate_gap);

    py::class_<StationaryPoints>(m, "StationaryPoints")
        .def_readonly("delta", &StationaryPoints::delta)
        .def_readonly("root1", &StationaryPoints::root1)
        .def_readonly("root2", &StationaryPoints::root2)
        .def_readonly("root3", &StationaryPoints::root3)
        .def_readonly("constant", &StationaryPoints::constant);

    py::class_<PaSolution>(m, "PaSolution")
        .def_readonly("beta_star", &PaSolution::beta_star)
        .def_readonly("secrecy_rate_at_beta", &PaSolution::secrecy_rate_at_beta)
        .def_property_readonly("winning_candidate",
                               [](const PaSolution &s) { return std::string(to_string(s.winning_candidate)); })
        .def_readonly("delta", &PaSolution::delta)
        .def_readonly("coefficients", &PaSolution::coefficients);

    py::class_<GridOptimum>(m, "GridOptimum")
        .def_readonly("beta", &GridOptimum::beta)
        .def_readonly("rate_gap", &GridOptimum::rate_gap);

    m.def("rational_coefficients", &rational_coefficients, py::arg("link"), py::arg("beamformers"));
    m.def("stationary_points", &stationary_points, py::arg("coefficients"));
    m.def("optimal_beta", py::overload_cast<const LinkState &, const BeamformingPair &>(&optimal_beta),
          py::arg("link"), py::arg("beamformers"));
    m.def("beta_grid_oracle", &beta_grid_oracle, py::arg("link"), py::arg("beamformers"), py::arg("step") = 1e-4);

    // ---- alternating optimization ---------------------------------------------

    py::enum_<PowerStep>(m, "PowerStep")
        .value("closed_form", PowerStep::closed_form)
        .value("grid_search", PowerStep::grid_search)
        .value("hold", PowerStep::hold);

    py::class_<AisConfig>(m, "AisConfig")
        .def(py::init<>())
        .def_readwrite("beta_init", &AisConfig::beta_init)
        .def_readwrite("epsilon", &AisConfig::epsilon)
        .def_readwrite("max_iterations", &AisConfig::max_iterations)
        .def_readwrite("power_step", &AisConfig::power_step)
        .def_readwrite("grid_step", &AisConfig::grid_step);

    py::class_<AisIterate>(m, "AisIterate")
        .def_readonly("beta", &AisIterate::beta)
        .def_readonly("beamformers", &AisIterate::beamformers)
        .def_readonly("rate_gap", &AisIterate::rate_gap);

    py::class_<AisTrace>(m, "AisTrace")
        .def_readonly("iterates", &AisTrace::iterates)
        .def_readonly("converged", &AisTrace::converged)
        .def_readonly("iterations_used", &AisTrace::iterations_used);

    py::class_<AisResult>(m, "AisResult")
        .def_readonly("beta", &AisResult::beta)
        .def_readonly("beamformers", &AisResult::beamformers)
        .def_readonly("rates", &AisResult::rates)
        .def_readonly("power_allocation", &AisResult::power_allocation)
        .def_readonly("trace", &AisResult::trace);

    py::class_<BaselineResult>(m, "BaselineResult")
        .def_readonly("beamformers", &BaselineResult::beamformers)
        .def_readonly("rates", &BaselineResult::rates);

    m.def("optimize_point", &optimize_point, py::arg("link"), py::arg("config") = AisConfig{});
    m.def("run_baseline", &run_baseline, py::arg("link"), py::arg("fixed_beta"));

    // ---- experiment harness ----------------------------------------------------

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("geometry", &ExperimentConfig::geometry)
        .def_readwrite("array", &ExperimentConfig::array)
        .def_readwrite("noise_dbm_bob", &ExperimentConfig::noise_dbm_bob)
        .def_readwrite("noise_dbm_eve", &ExperimentConfig::noise_dbm_eve)
        .def_readwrite("power_sweep_dbm", &ExperimentConfig::power_sweep_dbm)
        .def_readwrite("antenna_sweep", &ExperimentConfig::antenna_sweep)
        .def_property(
            "strategies",
            [](const ExperimentConfig &c) {
                std::vector<std::string> names;
                for (const auto &s : c.strategies)
                    names.push_back(s.name());
                return names;
            },
            [](ExperimentConfig &c, const std::vector<std::string> &names) {
                c.strategies.clear();
                for (const auto &n : names)
                    c.strategies.push_back(Strategy::parse(n));
            })
        .def_readwrite("ais", &ExperimentConfig::ais)
        .def_readwrite("grid_step", &ExperimentConfig::grid_step)
        .def_readwrite("eve_mirrors_bob", &ExperimentConfig::eve_mirrors_bob)
        .def_readwrite("output_path", &ExperimentConfig::output_path)
        .def("validate", &ExperimentConfig::validate);

    py::class_<ResultRecord>(m, "ResultRecord")
        .def_readonly("strategy", &ResultRecord::strategy)
        .def_readonly("M", &ResultRecord::antennas)
        .def_readonly("Ps_dbm", &ResultRecord::power_dbm)
        .def_readonly("n", &ResultRecord::sample)
        .def_readonly("theta_b", &ResultRecord::theta_bob)
        .def_readonly("beta", &ResultRecord::beta)
        .def_readonly("Rb", &ResultRecord::rate_bob)
        .def_readonly("Re", &ResultRecord::rate_eve)
        .def_readonly("Rs", &ResultRecord::secrecy_rate)
        .def_readonly("iterations", &ResultRecord::iterations)
        .def_readonly("converged", &ResultRecord::converged);

    py::class_<AggregateRecord>(m, "AggregateRecord")
        .def_readonly("strategy", &AggregateRecord::strategy)
        .def_readonly("M", &AggregateRecord::antennas)
        .def_readonly("Ps_dbm", &AggregateRecord::power_dbm)
        .def_readonly("points", &AggregateRecord::points)
        .def_readonly("mean_secrecy_rate", &AggregateRecord::mean_secrecy_rate)
        .def_readonly("clamped_sum_rate", &AggregateRecord::clamped_sum_rate)
        .def_readonly("secrecy_sum_rate", &AggregateRecord::secrecy_sum_rate)
        .def_readonly("unconverged", &AggregateRecord::unconverged);

    py::class_<ExperimentResult>(m, "ExperimentResult")
        .def_readonly("records", &ExperimentResult::records)
        .def_readonly("aggregates", &ExperimentResult::aggregates);

    m.def("parse_config_text", &parse_config_text, py::arg("text"));
    m.def("parse_config", &parse_config, py::arg("path"));
    m.def("serialize_config", &serialize_config, py::arg("config"));
    m.def("run_experiment", &run_experiment, py::arg("config"), py::arg("parallelism") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "format_results",
        [](const std::vector<ResultRecord> &r, const std::string &fmt) {
            return format_results(r, parse_output_format(fmt));
        },
        py::arg("records"), py::arg("format") = "csv");
}
