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

#include "uavdm/results_io.hpp"
#include "uavdm/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace uavdm
{
namespace
{

std::string fmt12(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// The double closest to the 12-significant-digit decimal rendering of v.
double round12(double v)
{
    return std::strtod(fmt12(v).c_str(), nullptr);
}

std::string header_line()
{
    std::string h;
    for (std::size_t i = 0; i < kResultFields.size(); ++i)
    {
        if (i)
            h += ',';
        h += kResultFields[i];
    }
    return h;
}

double csv_real(const std::string &field, std::size_t line)
{
    char *end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (field.empty() || *end != '\0')
        throw IoError("results line " + std::to_string(line) + ": bad number '" + field + "'");
    return v;
}

bool csv_bool(const std::string &field, std::size_t line)
{
    if (field == "true")
        return true;
    if (field == "false")
        return false;
    throw IoError("results line " + std::to_string(line) + ": bad flag '" + field + "'");
}

} // namespace

std::string format_results(std::span<const ResultRecord> records, OutputFormat format)
{
    if (records.empty())
        throw DomainError("no result records to write");

    if (format == OutputFormat::json)
    {
        auto arr = nlohmann::ordered_json::array();
        for (const auto &r : records)
        {
            nlohmann::ordered_json o;
            o["strategy"] = r.strategy;
            o["M"] = r.antennas;
            o["Ps_dbm"] = round12(r.power_dbm);
            o["n"] = r.sample;
            o["theta_b"] = round12(r.theta_bob);
            o["beta"] = round12(r.beta);
            o["Rb"] = round12(r.rate_bob);
            o["Re"] = round12(r.rate_eve);
            o["Rs"] = round12(r.secrecy_rate);
            o["iterations"] = r.iterations;
            o["converged"] = r.converged;
            arr.push_back(std::move(o));
        }
        return arr.dump(1) + "\n";
    }

    std::string out = header_line() + "\n";
    for (const auto &r : records)
    {
        out += r.strategy + ',' + std::to_string(r.antennas) + ',' + fmt12(r.power_dbm) + ',' +
               std::to_string(r.sample) + ',' + fmt12(r.theta_bob) + ',' + fmt12(r.beta) + ',' + fmt12(r.rate_bob) +
               ',' + fmt12(r.rate_eve) + ',' + fmt12(r.secrecy_rate) + ',' + std::to_string(r.iterations) + ',' +
               (r.converged ? "true" : "false") + '\n';
    }
    return out;
}

void write_results(std::span<const ResultRecord> records, OutputFormat format, const std::filesystem::path &path)
{
    const auto text = format_results(records, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    out.flush();
    if (!out)
        throw IoError("failed while writing '" + path.string() + "'");
}

std::vector<ResultRecord> parse_results_csv(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != header_line())
        throw IoError("results CSV does not start with the expected header");

    std::vector<ResultRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line))
    {
        ++line_no;
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::istringstream fields(line);
        for (std::string cell; std::getline(fields, cell, ',');)
            f.push_back(cell);
        if (f.size() != kResultFields.size())
            throw IoError("results line " + std::to_string(line_no) + ": expected " +
                          std::to_string(kResultFields.size()) + " fields");
        ResultRecord r;
        r.strategy = f[0];
        r.antennas = static_cast<std::size_t>(csv_real(f[1], line_no));
        r.power_dbm = csv_real(f[2], line_no);
        r.sample = static_cast<int>(csv_real(f[3], line_no));
        r.theta_bob = csv_real(f[4], line_no);
        r.beta = csv_real(f[5], line_no);
        r.rate_bob = csv_real(f[6], line_no);
        r.rate_eve = csv_real(f[7], line_no);
        r.secrecy_rate = csv_real(f[8], line_no);
        r.iterations = static_cast<int>(csv_real(f[9], line_no));
        r.converged = csv_bool(f[10], line_no);
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<ResultRecord> parse_results_json(std::string_view text)
{
    std::vector<ResultRecord> records;
    try
    {
        const auto arr = nlohmann::json::parse(text);
        for (const auto &o : arr)
        {
            ResultRecord r;
            r.strategy = o.at("strategy").get<std::string>();
            r.antennas = o.at("M").get<std::size_t>();
            r.power_dbm = o.at("Ps_dbm").get<double>();
            r.sample = o.at("n").get<int>();
            r.theta_bob = o.at("theta_b").get<double>();
            r.beta = o.at("beta").get<double>();
            r.rate_bob = o.at("Rb").get<double>();
            r.rate_eve = o.at("Re").get<double>();
            r.secrecy_rate = o.at("Rs").get<double>();
            r.iterations = o.at("iterations").get<int>();
            r.converged = o.at("converged").get<bool>();
            records.push_back(std::move(r));
        }
    }
    catch (const nlohmann::json::exception &e)
    {
        throw IoError(std::string("malformed results JSON: ") + e.what());
    }
    return records;
}

std::vector<ResultRecord> read_results(const std::filesystem::path &path, OutputFormat format)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return format == OutputFormat::json ? parse_results_json(buf.str()) : parse_results_csv(buf.str());
}

std::string format_summary(std::span<const AggregateRecord> aggregates)
{
    std::string out = "strategy,M,Ps_dbm,points,mean_Rs,sum_Rs_clamped,ssr,unconverged\n";
    for (const auto &a : aggregates)
        out += a.strategy + ',' + std::to_string(a.antennas) + ',' + fmt12(a.power_dbm) + ',' +
               std::to_string(a.points) + ',' + fmt12(a.mean_secrecy_rate) + ',' + fmt12(a.clamped_sum_rate) + ',' +
               fmt12(a.secrecy_sum_rate) + ',' + std::to_string(a.unconverged) + '\n';
    return out;
}

} // namespace uavdm
