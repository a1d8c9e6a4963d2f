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

#include "wfdm/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wfdm
{

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (v == 0.0)
        return "0";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string csv_escape(const std::string &field)
{
    if (field.find_first_of(",\"\n\r") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string to_csv_line(const ResultRow &row)
{
    const auto opt = [](const std::optional<double> &v) { return v ? format_double(*v) : std::string(); };
    std::string line;
    line += csv_escape(row.experiment) + ',';
    line += csv_escape(row.scheme) + ',';
    line += csv_escape(row.param1_name) + ',';
    line += opt(row.param1) + ',';
    line += csv_escape(row.param2_name) + ',';
    line += opt(row.param2) + ',';
    line += csv_escape(row.metric) + ',';
    line += (row.text ? csv_escape(*row.text) : format_double(row.value)) + ',';
    line += (row.n ? std::to_string(*row.n) : std::string()) + ',';
    line += opt(row.ci95);
    return line;
}

void write_csv(std::ostream &os, const std::vector<ResultRow> &rows)
{
    os << kCsvHeader << '\n';
    for (const auto &r : rows)
        os << to_csv_line(r) << '\n';
}

std::string to_csv(const std::vector<ResultRow> &rows)
{
    std::ostringstream os;
    write_csv(os, rows);
    return os.str();
}

void write_csv_file(const std::string &path, const std::vector<ResultRow> &rows)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write_csv(f, rows);
    if (!f)
        throw std::runtime_error("write to '" + path + "' failed");
}

} // namespace wfdm
