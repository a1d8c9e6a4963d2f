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

#include "wfdm/types.hpp"

#include <optional>
#include <span>

namespace wfdm
{

inline constexpr double kSpeedOfLight = 299'792'458.0;

// Symmetrical multi-carrier frequency diverse array: 2N+1 elements (n = -N..N), each
// radiating L carriers at f0 + Δf·ln[(|n|+1)^p (l+1)].
struct FdaConfig
{
    int n_half = 8;       // N
    int n_carriers = 7;   // L
    double f0 = 10e9;     // Hz
    double delta_f = 2e3; // Hz
    double p = 1.0;
    std::optional<double> spacing; // metres; half the central wavelength when unset
    double c = kSpeedOfLight;
    double t_obs = 0.0; // seconds

    int num_elements() const { return 2 * n_half + 1; }
    std::size_t dimension() const { return static_cast<std::size_t>(num_elements()) * n_carriers; }
    double element_spacing() const { return spacing ? *spacing : c / (2.0 * f0); }

    // Throws ConfigError naming the field on any invariant violation, including
    // max |Δf_{n,l}| >= f0/100.
    void validate() const;
};

// Polar receiver position relative to the central element.
struct Location
{
    double range = 1.0; // metres, > 0
    double angle = 0.0; // radians, normalised to (-π, π]

    static Location from_km_deg(double range_km, double angle_deg);
    double angle_deg() const;
    void validate() const;
};

double deg_to_rad(double deg);
double rad_to_deg(double rad);

// Δf_{n,l} = Δf · ln[(|n|+1)^p · (l+1)]
double frequency_increment(const FdaConfig &cfg, int n, int l);

// Normalised steering vector, element-major (n outer, l inner), every entry of modulus
// 1/sqrt((2N+1)L). The common carrier factor exp{j2πf0(t - r/c)} is omitted.
ComplexSequence steering_vector(const FdaConfig &cfg, const Location &loc);

// Columns are steering vectors of `locs`.
CMatrix steering_matrix(const FdaConfig &cfg, std::span<const Location> locs);

} // namespace wfdm
