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

#include <stdexcept>
#include <string>

namespace uavdm
{

// Argument outside the mathematical domain of an operation (angle out of [0, pi],
// zero distance, empty list, ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Scenario or experiment configuration that cannot be simulated.
class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Config file key that failed validation; carries the offending key.
class ValidationError : public ConfigError
{
public:
    ValidationError(std::string key, const std::string &message)
        : ConfigError(key + ": " + message), key_(std::move(key)) {}

    const std::string &key() const noexcept { return key_; }

private:
    std::string key_;
};

// Two independent computation routes disagree. Indicates a bug, not bad input.
class ConsistencyError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace uavdm
