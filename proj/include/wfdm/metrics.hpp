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

#include "wfdm/fda.hpp"
#include "wfdm/precoding.hpp"
#include "wfdm/types.hpp"
#include "wfdm/wfrft.hpp"

#include <span>
#include <vector>

namespace wfdm
{

double db_to_linear(double db);
double linear_to_db(double x);

// γ = Ps / σ².
double snr(double ps, double noise_var);
// γᴬᴺ = β₁² γ.
double snr_an(double ps, double noise_var, double beta1);

// Q(t) = erfc(t/√2)/2.
double q_function(double t);

// (2/log₂M)·Q(√(2γ)·sin(π/M)). Loose by a factor 2 at M = 2.
double theoretical_ber_mpsk(double gamma, int m);

// log₂(1 + λ).
double achievable_rate(double sinr);

double coop_bob_sinr(double ps, double noise_var);

// Ps|ω₀|²g / (Ps·g·σ_η² + σ²), g = ‖Pᴴh(eve)‖².
double coop_eve_sinr(const Precoder &pre, const Location &eve, const FdaConfig &cfg, const WfrftWeights &weights,
                     double ps, double noise_var);
double coop_eve_sinr_from_gain(double g, const WfrftWeights &weights, double ps, double noise_var);

// max_k [min_v (Γᴮ_k − Γᴱ_v)]⁺
double coop_secrecy_rate(std::span<const double> bob_rates, std::span<const double> eve_rates);

double inde_eve_sinr(std::span<const cplx> rho, std::span<const WfrftWeights> weights_per_bob, std::size_t target_k,
                     double ps, double noise_var);

// eve_rates[v][k] = rate of Eve v eavesdropping Bob k.
double inde_secrecy_rate(std::span<const double> bob_rates, const std::vector<std::vector<double>> &eve_rates);

// AN-DM eavesdropper targeting Bob k. Signal β₁²Ps|ϱ_k|², interference from the other
// streams, artificial noise (1−β₁²)Ps·‖Πh‖²/(n−K) on average over isotropic null-space directions.
double an_eve_sinr(std::span<const cplx> rho, double null_gain, std::size_t dimension, std::size_t target_k,
                   double ps, double noise_var, double beta1);

// Squared norm of the null-space projection of h(loc).
double null_space_gain(const Precoder &pre, const FdaConfig &cfg, const Location &loc);

struct RateReport
{
    std::vector<double> bob_rates;
    std::vector<std::vector<double>> eve_rates; // V x 1 (cooperative) or V x K
    double secrecy_rate = 0.0;
};

} // namespace wfdm
