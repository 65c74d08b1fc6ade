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

#include "uavdm/config.hpp"
#include "uavdm/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace uavdm
{
namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true)
    {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

bool to_double(std::string_view text, double &out)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

double parse_real(const std::string &key, std::string_view text)
{
    double v = 0.0;
    if (!to_double(text, v))
        throw ValidationError(key, "expected a real number, got '" + std::string(text) + "'");
    return v;
}

long long parse_integer(const std::string &key, std::string_view text)
{
    text = trim(text);
    long long v = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw ValidationError(key, "expected an integer, got '" + std::string(text) + "'");
    return v;
}

bool parse_bool(const std::string &key, std::string_view text)
{
    text = trim(text);
    if (text == "true" || text == "1")
        return true;
    if (text == "false" || text == "0")
        return false;
    throw ValidationError(key, "expected true or false, got '" + std::string(text) + "'");
}

Point3 parse_point(const std::string &key, std::string_view text)
{
    const auto parts = split(text, ',');
    if (parts.size() != 3)
        throw ValidationError(key, "expected x,y,z");
    return {parse_real(key, parts[0]), parse_real(key, parts[1]), parse_real(key, parts[2])};
}

std::string_view strip_brackets(std::string_view text)
{
    text = trim(text);
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
        text = trim(text.substr(1, text.size() - 2));
    return text;
}

std::string fmt_real(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_point(const Point3 &p)
{
    return fmt_real(p.x) + "," + fmt_real(p.y) + "," + fmt_real(p.z);
}

} // namespace

std::string Strategy::name() const
{
    switch (kind)
    {
    case Kind::ais:
        return "ais";
    case Kind::grid_oracle:
        return "grid_oracle";
    case Kind::fixed: {
        char buf[40];
        std::snprintf(buf, sizeof buf, "fixed(%.12g)", beta);
        return buf;
    }
    }
    return "unknown";
}

Strategy Strategy::parse(std::string_view text)
{
    text = trim(text);
    if (text == "ais")
        return ais();
    if (text == "grid_oracle")
        return grid_oracle();
    constexpr std::string_view prefix = "fixed(";
    if (text.starts_with(prefix) && text.ends_with(')'))
    {
        double b = 0.0;
        const auto inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
        if (!to_double(inner, b))
            throw ConfigError("fixed strategy needs a numeric beta: '" + std::string(text) + "'");
        if (!(b > 0.0 && b < 1.0))
            throw ConfigError("fixed strategy beta must lie in (0, 1): '" + std::string(text) + "'");
        return fixed(b);
    }
    throw ConfigError("unknown strategy '" + std::string(text) + "' (expected ais, fixed(<beta>), grid_oracle)");
}

std::string_view to_string(OutputFormat f)
{
    return f == OutputFormat::json ? "json" : "csv";
}

OutputFormat parse_output_format(std::string_view text)
{
    text = trim(text);
    if (text == "csv")
        return OutputFormat::csv;
    if (text == "json")
        return OutputFormat::json;
    throw ConfigError("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

void ExperimentConfig::validate() const
{
    const auto &g = geometry;
    if (!(norm(g.flight_end - g.flight_start) > 0.0))
        throw ValidationError("geometry.end", "flight start and end coincide");
    if (!(g.speed > 0.0))
        throw ValidationError("geometry.speed", "speed must be positive");
    if (!(g.sample_interval > 0.0))
        throw ValidationError("geometry.sample_interval", "sample interval must be positive");
    if (!(g.altitude > 0.0))
        throw ValidationError("geometry.altitude", "altitude must be positive");
    if (!(g.path_loss_exponent > 0.0))
        throw ValidationError("geometry.path_loss_exponent", "path loss exponent must be positive");
    if (!(g.reference_gain > 0.0))
        throw ValidationError("geometry.reference_gain", "reference gain must be positive");
    if (g.flight_start.z != g.altitude)
        throw ValidationError("geometry.start", "z must equal geometry.altitude");
    if (g.flight_end.z != g.altitude)
        throw ValidationError("geometry.end", "z must equal geometry.altitude");
    if (!(norm(g.eve - g.alice) > 0.0) && !eve_mirrors_bob)
        throw ValidationError("geometry.eve", "Eve must not be collocated with Alice");
    if (!(array.spacing_over_wavelength > 0.0))
        throw ValidationError("array.spacing", "element spacing must be positive");
    if (power_sweep_dbm.empty())
        throw ValidationError("sweep.power_dbm", "power sweep must not be empty");
    if (antenna_sweep.empty())
        throw ValidationError("sweep.antennas", "antenna sweep must not be empty");
    for (auto m : antenna_sweep)
        if (m < 2)
            throw ValidationError("sweep.antennas", "antenna counts must be at least 2");
    if (strategies.empty())
        throw ValidationError("strategies", "at least one strategy is required");
    for (const auto &s : strategies)
        if (s.kind == Strategy::Kind::fixed && !(s.beta > 0.0 && s.beta < 1.0))
            throw ValidationError("strategies", "fixed beta must lie in (0, 1)");
    if (!(ais.beta_init > 0.0 && ais.beta_init < 1.0))
        throw ValidationError("ais.beta_init", "initial beta must lie in (0, 1)");
    if (!(ais.epsilon > 0.0))
        throw ValidationError("ais.epsilon", "tolerance must be positive");
    if (ais.max_iterations < 1)
        throw ValidationError("ais.max_iterations", "at least one iteration is required");
    if (!(grid_step > 0.0 && grid_step <= 1e-2))
        throw ValidationError("oracle.grid_step", "grid step must lie in (0, 1e-2]");
    if (output_path.empty())
        throw ValidationError("output.path", "output path must not be empty");
}

ExperimentConfig parse_config_text(std::string_view text)
{
    ExperimentConfig cfg;
    bool start_set = false, end_set = false;

    using Setter = std::function<void(const std::string &, std::string_view)>;
    const std::map<std::string, Setter, std::less<>> setters{
        {"geometry.alice", [&](auto &k, auto v) { cfg.geometry.alice = parse_point(k, v); }},
        {"geometry.eve", [&](auto &k, auto v) { cfg.geometry.eve = parse_point(k, v); }},
        {"geometry.start",
         [&](auto &k, auto v) {
             cfg.geometry.flight_start = parse_point(k, v);
             start_set = true;
         }},
        {"geometry.end",
         [&](auto &k, auto v) {
             cfg.geometry.flight_end = parse_point(k, v);
             end_set = true;
         }},
        {"geometry.altitude", [&](auto &k, auto v) { cfg.geometry.altitude = parse_real(k, v); }},
        {"geometry.speed", [&](auto &k, auto v) { cfg.geometry.speed = parse_real(k, v); }},
        {"geometry.sample_interval", [&](auto &k, auto v) { cfg.geometry.sample_interval = parse_real(k, v); }},
        {"geometry.path_loss_exponent",
         [&](auto &k, auto v) { cfg.geometry.path_loss_exponent = parse_real(k, v); }},
        {"geometry.reference_gain", [&](auto &k, auto v) { cfg.geometry.reference_gain = parse_real(k, v); }},
        {"geometry.eve_mirrors_bob", [&](auto &k, auto v) { cfg.eve_mirrors_bob = parse_bool(k, v); }},
        {"array.spacing", [&](auto &k, auto v) { cfg.array.spacing_over_wavelength = parse_real(k, v); }},
        {"noise.bob_dbm", [&](auto &k, auto v) { cfg.noise_dbm_bob = parse_real(k, v); }},
        {"noise.eve_dbm", [&](auto &k, auto v) { cfg.noise_dbm_eve = parse_real(k, v); }},
        {"sweep.power_dbm",
         [&](auto &k, auto v) {
             cfg.power_sweep_dbm.clear();
             v = strip_brackets(v);
             if (!v.empty())
                 for (auto part : split(v, ','))
                     cfg.power_sweep_dbm.push_back(parse_real(k, part));
         }},
        {"sweep.antennas",
         [&](auto &k, auto v) {
             cfg.antenna_sweep.clear();
             v = strip_brackets(v);
             if (!v.empty())
                 for (auto part : split(v, ','))
                 {
                     const auto m = parse_integer(k, part);
                     if (m < 2)
                         throw ValidationError(k, "antenna counts must be at least 2");
                     cfg.antenna_sweep.push_back(static_cast<std::size_t>(m));
                 }
         }},
        {"strategies",
         [&](auto &k, auto v) {
             cfg.strategies.clear();
             v = strip_brackets(v);
             if (v.empty())
                 return;
             // Commas inside fixed(...) never occur, so a plain split is enough.
             for (auto part : split(v, ','))
             {
                 try
                 {
                     cfg.strategies.push_back(Strategy::parse(part));
                 }
                 catch (const ConfigError &e)
                 {
                     throw ValidationError(k, e.what());
                 }
             }
         }},
        {"ais.beta_init", [&](auto &k, auto v) { cfg.ais.beta_init = parse_real(k, v); }},
        {"ais.epsilon", [&](auto &k, auto v) { cfg.ais.epsilon = parse_real(k, v); }},
        {"ais.max_iterations",
         [&](auto &k, auto v) { cfg.ais.max_iterations = static_cast<int>(parse_integer(k, v)); }},
        {"oracle.grid_step", [&](auto &k, auto v) { cfg.grid_step = parse_real(k, v); }},
        {"output.path", [&](auto &, auto v) { cfg.output_path = std::string(trim(v)); }},
        {"output.format",
         [&](auto &k, auto v) {
             try
             {
                 cfg.output_format = parse_output_format(v);
             }
             catch (const ConfigError &e)
             {
                 throw ValidationError(k, e.what());
             }
         }},
    };

    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        const auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        const auto value = trim(line.substr(eq + 1));

        const auto it = setters.find(key);
        if (it == setters.end())
            throw ValidationError(key, "unknown key (line " + std::to_string(line_no) + ")");
        if (!seen.insert(key).second)
            throw ValidationError(key, "key given twice (line " + std::to_string(line_no) + ")");
        it->second(key, value);
    }

    if (!start_set)
        cfg.geometry.flight_start.z = cfg.geometry.altitude;
    if (!end_set)
        cfg.geometry.flight_end.z = cfg.geometry.altitude;

    cfg.ais.grid_step = cfg.grid_step;
    cfg.validate();
    return cfg;
}

ExperimentConfig parse_config(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try
    {
        return parse_config_text(buf.str());
    }
    catch (const ValidationError &e)
    {
        throw ValidationError(e.key(), std::string(e.what()).substr(e.key().size() + 2) + " in '" +
                                           path.string() + "'");
    }
}

std::string serialize_config(const ExperimentConfig &cfg)
{
    std::ostringstream out;
    const auto &g = cfg.geometry;
    out << "geometry.alice = " << fmt_point(g.alice) << '\n'
        << "geometry.eve = " << fmt_point(g.eve) << '\n'
        << "geometry.start = " << fmt_point(g.flight_start) << '\n'
        << "geometry.end = " << fmt_point(g.flight_end) << '\n'
        << "geometry.altitude = " << fmt_real(g.altitude) << '\n'
        << "geometry.speed = " << fmt_real(g.speed) << '\n'
        << "geometry.sample_interval = " << fmt_real(g.sample_interval) << '\n'
        << "geometry.path_loss_exponent = " << fmt_real(g.path_loss_exponent) << '\n'
        << "geometry.reference_gain = " << fmt_real(g.reference_gain) << '\n'
        << "geometry.eve_mirrors_bob = " << (cfg.eve_mirrors_bob ? "true" : "false") << '\n'
        << "array.spacing = " << fmt_real(cfg.array.spacing_over_wavelength) << '\n'
        << "noise.bob_dbm = " << fmt_real(cfg.noise_dbm_bob) << '\n'
        << "noise.eve_dbm = " << fmt_real(cfg.noise_dbm_eve) << '\n';

    out << "sweep.power_dbm = ";
    for (std::size_t i = 0; i < cfg.power_sweep_dbm.size(); ++i)
        out << (i ? "," : "") << fmt_real(cfg.power_sweep_dbm[i]);
    out << "\nsweep.antennas = ";
    for (std::size_t i = 0; i < cfg.antenna_sweep.size(); ++i)
        out << (i ? "," : "") << cfg.antenna_sweep[i];
    out << "\nstrategies = ";
    for (std::size_t i = 0; i < cfg.strategies.size(); ++i)
    {
        const auto &s = cfg.strategies[i];
        out << (i ? ", " : "") << (s.kind == Strategy::Kind::fixed ? "fixed(" + fmt_real(s.beta) + ")" : s.name());
    }
    out << "\nais.beta_init = " << fmt_real(cfg.ais.beta_init) << '\n'
        << "ais.epsilon = " << fmt_real(cfg.ais.epsilon) << '\n'
        << "ais.max_iterations = " << cfg.ais.max_iterations << '\n'
        << "oracle.grid_step = " << fmt_real(cfg.grid_step) << '\n'
        << "output.path = " << cfg.output_path << '\n'
        << "output.format = " << to_string(cfg.output_format) << '\n';
    return out.str();
}

} // namespace uavdm
