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

#include "wfdm/metrics.hpp"

#include "wfdm/chains.hpp"
#include "wfdm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wfdm
{

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double x) { return 10.0 * std::log10(x); }

double snr(double ps, double noise_var)
{
    if (!(ps > 0.0) || !(noise_var > 0.0))
        throw InvalidInput("snr: power and noise variance must be positive");
    return ps / noise_var;
}

double snr_an(double ps, double noise_var, double beta1)
{
    AnDmConfig{beta1}.validate();
    return beta1 * beta1 * snr(ps, noise_var);
}

double q_function(double t) { return 0.5 * std::erfc(t / std::sqrt(2.0)); }

double theoretical_ber_mpsk(double gamma, int m)
{
    if (m != 2 && m != 4 && m != 8)
        throw InvalidInput("theoretical_ber_mpsk: unsupported order " + std::to_string(m));
    if (gamma < 0.0)
        throw InvalidInput("theoretical_ber_mpsk: negative SNR");
    const double bits = std::log2(static_cast<double>(m));
    return (2.0 / bits) * q_function(std::sqrt(2.0 * gamma) * std::sin(kPi / m));
}

double achievable_rate(double sinr)
{
    if (sinr < 0.0)
        throw InvalidInput("achievable_rate: negative SINR");
    return std::log2(1.0 + sinr);
}

double coop_bob_sinr(double ps, double noise_var) { return snr(ps, noise_var); }

double coop_eve_sinr_from_gain(double g, const WfrftWeights &weights, double ps, double noise_var)
{
    const double w0 = std::norm(weights[0]);
    const double var_eta = equivalent_an_variance(weights);
    const double den = ps * g * var_eta + noise_var;
    if (den <= 0.0)
        return std::numeric_limits<double>::infinity();
    return ps * w0 * g / den;
}

double coop_eve_sinr(const Precoder &pre, const Location &eve, const FdaConfig &cfg, const WfrftWeights &weights,
                     double ps, double noise_var)
{
    const ComplexSequence rho = leakage_coefficients(pre, cfg, eve);
    return coop_eve_sinr_from_gain(energy(rho), weights, ps, noise_var);
}

double coop_secrecy_rate(std::span<const double> bob_rates, std::span<const double> eve_rates)
{
    if (bob_rates.empty())
        throw InvalidInput("coop_secrecy_rate: no Bobs");
    if (eve_rates.empty())
        throw InvalidInput("coop_secrecy_rate: no Eves");
    const double worst_eve = *std::max_element(eve_rates.begin(), eve_rates.end());
    double best = 0.0;
    for (double rb : bob_rates)
        best = std::max(best, rb - worst_eve);
    return best;
}

double inde_eve_sinr(std::span<const cplx> rho, std::span<const WfrftWeights> weights_per_bob, std::size_t target_k,
                     double ps, double noise_var)
{
    if (rho.size() != weights_per_bob.size())
        throw InvalidInput("inde_eve_sinr: dimension mismatch");
    if (target_k >= rho.size())
        throw IndexError("inde_eve_sinr: target Bob out of range");
    double sig = 0.0, mixed = 0.0, an = 0.0;
    for (std::size_t k = 0; k < rho.size(); ++k)
    {
        const double r2 = std::norm(rho[k]);
        const double w0 = std::norm(weights_per_bob[k][0]);
        if (k == target_k)
            sig = ps * r2 * w0;
        else
            mixed += ps * r2 * w0;
        an += ps * r2 * equivalent_an_variance(weights_per_bob[k]);
    }
    const double den = mixed + an + noise_var;
    if (den <= 0.0)
        return std::numeric_limits<double>::infinity();
    return sig / den;
}

double inde_secrecy_rate(std::span<const double> bob_rates, const std::vector<std::vector<double>> &eve_rates)
{
    if (eve_rates.empty())
        throw InvalidInput("inde_secrecy_rate: secrecy rate is undefined without at least one Eve");
    if (bob_rates.empty())
        throw InvalidInput("inde_secrecy_rate: no Bobs");
    double worst_eve = -std::numeric_limits<double>::infinity();
    for (const auto &row : eve_rates)
    {
        if (row.empty())
            throw InvalidInput("inde_secrecy_rate: empty Eve rate row");
        worst_eve = std::max(worst_eve, *std::max_element(row.begin(), row.end()));
    }
    double best = 0.0;
    for (double rb : bob_rates)
        best = std::max(best, rb - worst_eve);
    return best;
}

double null_space_gain(const Precoder &pre, const FdaConfig &cfg, const Location &loc)
{
    return energy(project_null_space(pre, steering_vector(cfg, loc)));
}

double an_eve_sinr(std::span<const cplx> rho, double null_gain, std::size_t dimension, std::size_t target_k,
                   double ps, double noise_var, double beta1)
{
    AnDmConfig{beta1}.validate();
    if (target_k >= rho.size())
        throw IndexError("an_eve_sinr: target Bob out of range");
    if (dimension <= rho.size())
        throw DegenerateBaseline("an_eve_sinr: no null space for artificial noise");
    const double b2 = beta1 * beta1;
    double sig = 0.0, mixed = 0.0;
    for (std::size_t k = 0; k < rho.size(); ++k)
    {
        const double r2 = b2 * ps * std::norm(rho[k]);
        (k == target_k ? sig : mixed) += r2;
    }
    const double an = (1.0 - b2) * ps * null_gain / static_cast<double>(dimension - rho.size());
    const double den = mixed + an + noise_var;
    if (den <= 0.0)
        return std::numeric_limits<double>::infinity();
    return sig / den;
}

} // namespace wfdm
