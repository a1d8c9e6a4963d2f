// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The wfdm Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wfdm
{

// Bad argument shape or value (empty sequence, dimension mismatch, ...).
class InvalidInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Index outside the array/carrier range.
class IndexError : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

// A configuration value violates a type invariant. `field()` names the offending key.
class ConfigError : public std::runtime_error
{
public:
    ConfigError(std::string field, const std::string &what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}

    const std::string &field() const noexcept { return field_; }

private:
    std::string field_;
};

// Malformed configuration text.
class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, std::string key, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + (key.empty() ? "" : " (" + key + ")") + ": " + what),
          line_(line), key_(std::move(key)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string &key() const noexcept { return key_; }

private:
    std::size_t line_;
    std::string key_;
};

// Near-coincident legitimate receivers make the Gram matrix numerically singular.
class IllConditionedGeometry : public std::runtime_error
{
public:
    IllConditionedGeometry(std::size_t col_a, std::size_t col_b, double condition)
        : std::runtime_error("ill-conditioned receiver geometry: columns " + std::to_string(col_a) + " and " +
                             std::to_string(col_b) + " (condition " + std::to_string(condition) + ")"),
          col_a_(col_a), col_b_(col_b), condition_(condition) {}

    std::size_t column_a() const noexcept { return col_a_; }
    std::size_t column_b() const noexcept { return col_b_; }
    double condition() const noexcept { return condition_; }

private:
    std::size_t col_a_, col_b_;
    double condition_;
};

// Sequence length does not line up with the transform block structure.
class FramingError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// The AN baseline needs a non-trivial null space.
class DegenerateBaseline : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace wfdm
