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

#include "wfdm/chains.hpp"
#include "wfdm/engine.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wfdm
{

// Sweep and Monte Carlo settings that travel with a scenario in the config file.
struct RunSettings
{
    std::vector<double> snr_grid_db{0, 2, 4, 6, 8, 10};
    McSettings mc;
    std::size_t trial_symbols = 1200; // per trial; rounded up to the frame period

    // BER maps (probe receiver)
    double map_snr_db = 10.0;
    std::size_t map_symbols = 3000;
    std::size_t angle_points = 721; // over (-90, 90) degrees
    std::size_t range_points = 200;
    double range_min_km = 100.0;
    double range_max_km = 300.0;

    // secrecy
    std::vector<double> beta1_grid{0.5, 0.7, 0.9};
    std::string eve_set = "default"; // default | random9 | all
    std::size_t secrecy_angle_points = 181;
    std::size_t secrecy_range_points = 41;

    // robustness
    std::vector<double> robust_snr_grid_db; // default 4..16 dB in 0.25 dB steps
    std::vector<std::pair<double, double>> location_errors{{0, 0}, {1, 0}, {0, 2}, {1, 2}}; // (km, deg)
    std::vector<double> delta_alpha_single{0, 0.01, 0.03, 0.05, 0.1};
    std::vector<double> delta_alpha_multi{0, 1e-4, 2e-4, 4e-4};
    double target_ber = 1e-3;
    std::size_t robust_bob = 2; // 1-based Bob whose curve drives the sweep

    bool leaked_eve = true;

    RunSettings();
    void validate() const;
};

struct SimConfig
{
    Scenario scenario = default_scenario();
    RunSettings run;
};

// Flat "key = value" text, '#' starts a comment. Absent keys keep their defaults.
SimConfig parse_config(const std::string &text);
SimConfig load_config(const std::string &path);

Scenario parse_scenario(const std::string &text);
Scenario load_scenario(const std::string &path);

// The nine roaming Eves of the large-V configuration.
std::vector<Location> random_eves();

} // namespace wfdm
