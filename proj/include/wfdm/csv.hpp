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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wfdm
{

struct ResultRow
{
    std::string experiment;
    std::string scheme;
    std::string param1_name;
    std::optional<double> param1;
    std::string param2_name;
    std::optional<double> param2;
    std::string metric;
    double value = 0.0;
    std::optional<std::string> text; // replaces value when set (metadata rows)
    std::optional<std::uint64_t> n;
    std::optional<double> ci95;
};

inline constexpr const char *kCsvHeader = "experiment,scheme,param1_name,param1,param2_name,param2,metric,value,n,ci95";

// Shortest decimal that parses back to the same double.
std::string format_double(double v);

std::string csv_escape(const std::string &field);

std::string to_csv_line(const ResultRow &row);

void write_csv(std::ostream &os, const std::vector<ResultRow> &rows);
std::string to_csv(const std::vector<ResultRow> &rows);
void write_csv_file(const std::string &path, const std::vector<ResultRow> &rows);

} // namespace wfdm
