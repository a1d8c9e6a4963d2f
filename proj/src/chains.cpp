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

#include "wfdm/chains.hpp"

#include "wfdm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wfdm
{

void BobProfile::validate() const
{
    location.validate();
    if (block_len < 1)
        throw ConfigError("q", "WFRFT block length must be at least 1");
    if (!std::isfinite(wfrft.alpha))
        throw ConfigError("alpha", "transform order must be finite");
}

std::vector<Location> Scenario::bob_locations() const
{
    std::vector<Location> out;
    out.reserve(bobs.size());
    for (const auto &b : bobs)
        out.push_back(b.location);
    return out;
}

std::size_t Scenario::eve_target(std::size_t v) const
{
    if (v < eve_targets.size() && eve_targets[v] >= 0)
        return static_cast<std::size_t>(eve_targets[v]);
    return std::min(v, bobs.empty() ? 0 : bobs.size() - 1);
}

std::size_t Scenario::frame_period() const
{
    std::size_t p = 1;
    for (const auto &b : bobs)
        p = std::lcm(p, b.block_len);
    return p;
}

void Scenario::validate() const
{
    fda.validate();
    if (bobs.empty())
        throw ConfigError("bobs", "at least one Bob is required");
    for (const auto &b : bobs)
        b.validate();
    for (const auto &e : eves)
        e.validate();
    for (std::size_t v = 0; v < eve_targets.size(); ++v)
        if (eve_targets[v] >= static_cast<int>(bobs.size()))
            throw ConfigError("target", "Eve " + std::to_string(v + 1) + " targets a Bob that does not exist");
    if (!(ps > 0.0) || !std::isfinite(ps))
        throw ConfigError("ps", "transmit power must be positive");
    if (!(noise_var > 0.0) || !std::isfinite(noise_var))
        throw ConfigError("noise_var", "noise variance must be positive");
    an_baseline.validate();
    if (!std::isfinite(coop_wfrft.alpha))
        throw ConfigError("alpha", "transform order must be finite");
}

Precoder Scenario::precoder() const
{
    const auto locs = bob_locations();
    return build_precoder(steering_matrix(fda, locs), cond_limit);
}

Scenario default_scenario()
{
    Scenario sc;
    const std::array<int, 4> mv{1, 2, 3, 4};
    const std::array<int, 4> nv{5, 6, 7, 8};
    sc.coop_wfrft = {0.5, mv, nv};
    sc.bobs = {
        {Location::from_km_deg(150.0, 50.0), PskAlphabet(2), {0.5, mv, nv}, 3},
        {Location::from_km_deg(180.0, -40.0), PskAlphabet(4), {1.0, mv, nv}, 4},
        {Location::from_km_deg(260.0, 0.0), PskAlphabet(8), {1.5, mv, nv}, 5},
    };
    sc.eves = {Location::from_km_deg(150.0, 50.0), Location::from_km_deg(220.0, -20.0)};
    sc.ps = 1.0;
    sc.noise_var = 0.1;
    return sc;
}

cplx observe(std::span<const cplx> x, const Location &loc, const FdaConfig &cfg, double noise_var,
             RandomStream &rng)
{
    const ComplexSequence h = steering_vector(cfg, loc);
    if (h.size() != x.size())
        throw InvalidInput("observe: transmit vector has length " + std::to_string(x.size()) + ", array has " +
                           std::to_string(h.size()));
    cplx y = dot_conj(h, x);
    if (noise_var > 0.0)
        y += rng.complex_gaussian(noise_var);
    return y;
}

ComplexSequence awgn(std::span<const cplx> signal, double noise_var, RandomStream &rng)
{
    if (noise_var < 0.0 || !std::isfinite(noise_var))
        throw InvalidInput("awgn: noise variance must be nonnegative");
    ComplexSequence out(signal.begin(), signal.end());
    if (noise_var == 0.0)
        return out;
    for (cplx &z : out)
        z += rng.complex_gaussian(noise_var);
    return out;
}

ComplexSequence leakage_coefficients(const Precoder &pre, const FdaConfig &cfg, const Location &loc)
{
    const ComplexSequence h = steering_vector(cfg, loc);
    if (h.size() != pre.dimension())
        throw InvalidInput("leakage_coefficients: array dimension does not match the precoder");
    ComplexSequence rho(pre.users());
    for (std::size_t k = 0; k < rho.size(); ++k)
        rho[k] = dot_conj(h, pre.p_matrix.col(k));
    return rho;
}

cplx effective_observation(std::span<const cplx> rho, std::span<const cplx> z, double ps)
{
    if (rho.size() != z.size())
        throw InvalidInput("effective_observation: dimension mismatch");
    cplx acc = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k)
        acc += rho[k] * z[k];
    return std::sqrt(ps) * acc;
}

ComplexSequence coop_alice_encode(std::span<const cplx> symbols, const WfrftParams &shared, const Precoder &pre,
                                  double ps)
{
    if (symbols.size() != pre.users())
        throw InvalidInput("coop_alice_encode: expected " + std::to_string(pre.users()) + " symbols, got " +
                           std::to_string(symbols.size()));
    const ComplexSequence u = wfrft(symbols, shared);
    return transmit_cooperative(pre, u, ps);
}

ComplexSequence coop_bobs_decode(std::span<const cplx> received, const WfrftParams &shared)
{
    return inverse_wfrft(received, shared);
}

cplx coop_eve_observe(std::span<const cplx> x, const Location &eve, const FdaConfig &cfg, double noise_var,
                      RandomStream &rng)
{
    return observe(x, eve, cfg, noise_var, rng);
}

CoopDecomposition coop_eve_decompose(std::span<const cplx> symbols, const WfrftParams &shared,
                                     std::span<const cplx> rho, double ps, cplx noise)
{
    if (symbols.size() != rho.size())
        throw InvalidInput("coop_eve_decompose: dimension mismatch");
    const WfrftWeights w = weights_multi(shared);
    const auto powers = dft_powers(symbols);
    ComplexSequence eta(symbols.size());
    for (std::size_t i = 1; i < 4; ++i)
        for (std::size_t n = 0; n < eta.size(); ++n)
            eta[n] += w[i] * powers[i][n];
    CoopDecomposition d;
    d.distorted = w[0] * effective_observation(rho, symbols, ps);
    d.equivalent_an = effective_observation(rho, eta, ps);
    d.noise = noise;
    return d;
}

ComplexSequence inde_path_stream(std::span<const cplx> symbols, const BobProfile &profile)
{
    return wfrft_blocks(symbols, profile.block_len, profile.wfrft);
}

TransmitFrame inde_alice_encode(std::span<const ComplexSequence> per_bob, std::span<const BobProfile> bobs,
                                const Precoder &pre, double ps, std::optional<std::size_t> channel_uses)
{
    const std::size_t K = bobs.size();
    if (per_bob.size() != K || K != pre.users())
        throw InvalidInput("inde_alice_encode: need one symbol stream per Bob and a matching precoder");
    std::size_t q_total = 0;
    for (const auto &b : bobs)
        q_total = std::max(q_total, b.block_len);
    if (channel_uses)
        q_total = *channel_uses;

    std::vector<ComplexSequence> fifo(K);
    for (std::size_t k = 0; k < K; ++k)
    {
        if (per_bob[k].size() < q_total)
            throw FramingError("inde_alice_encode: path " + std::to_string(k + 1) + " supplies " +
                               std::to_string(per_bob[k].size()) + " symbols, " + std::to_string(q_total) +
                               " channel uses requested");
        fifo[k] = inde_path_stream(per_bob[k], bobs[k]);
    }

    TransmitFrame frame;
    frame.q_total = q_total;
    frame.columns.reserve(q_total);
    ComplexSequence z(K);
    for (std::size_t q = 0; q < q_total; ++q)
    {
        for (std::size_t k = 0; k < K; ++k)
            z[k] = fifo[k][q];
        frame.columns.push_back(transmit_cooperative(pre, z, ps));
    }
    return frame;
}

ComplexSequence inde_bob_decode(std::span<const cplx> observations, const BobProfile &profile)
{
    if (observations.empty() || observations.size() % profile.block_len != 0)
        throw FramingError("inde_bob_decode: " + std::to_string(observations.size()) +
                           " observations do not form whole blocks of " + std::to_string(profile.block_len));
    return wfrft_blocks(observations, profile.block_len, profile.wfrft.inverse());
}

ComplexSequence inde_eve_observe(const TransmitFrame &frame, const Location &eve, const FdaConfig &cfg,
                                 double noise_var, RandomStream &rng)
{
    ComplexSequence out;
    out.reserve(frame.columns.size());
    for (const auto &x : frame.columns)
        out.push_back(observe(x, eve, cfg, noise_var, rng));
    return out;
}

ComplexSequence eve_decode_with_leaked_params(std::span<const cplx> observations, std::span<const BobProfile> leaked,
                                              std::size_t target_k)
{
    if (target_k >= leaked.size())
        throw IndexError("eve_decode_with_leaked_params: target Bob " + std::to_string(target_k) + " out of range");
    return inde_bob_decode(observations, leaked[target_k]);
}

std::vector<InDeDecomposition> inde_eve_decompose(std::span<const ComplexSequence> per_bob,
                                                  std::span<const BobProfile> bobs, std::span<const cplx> rho,
                                                  std::size_t target_k, double ps, std::span<const cplx> noise)
{
    const std::size_t K = bobs.size();
    if (per_bob.size() != K || rho.size() != K)
        throw InvalidInput("inde_eve_decompose: dimension mismatch");
    if (target_k >= K)
        throw IndexError("inde_eve_decompose: target Bob out of range");
    const std::size_t Q = noise.size();

    std::vector<ComplexSequence> direct(K), an(K);
    for (std::size_t k = 0; k < K; ++k)
    {
        if (per_bob[k].size() < Q)
            throw FramingError("inde_eve_decompose: path " + std::to_string(k + 1) + " is shorter than the frame");
        const cplx w0 = weights_multi(bobs[k].wfrft)[0];
        const ComplexSequence z = inde_path_stream(per_bob[k], bobs[k]);
        direct[k].resize(Q);
        an[k].resize(Q);
        for (std::size_t q = 0; q < Q; ++q)
        {
            direct[k][q] = w0 * per_bob[k][q];
            an[k][q] = z[q] - direct[k][q];
        }
    }

    const double a = std::sqrt(ps);
    std::vector<InDeDecomposition> out(Q);
    for (std::size_t q = 0; q < Q; ++q)
    {
        InDeDecomposition &d = out[q];
        d.distorted = a * rho[target_k] * direct[target_k][q];
        d.mixed = 0.0;
        d.equivalent_an = 0.0;
        for (std::size_t k = 0; k < K; ++k)
        {
            if (k != target_k)
                d.mixed += a * rho[k] * direct[k][q];
            d.equivalent_an += a * rho[k] * an[k][q];
        }
        d.noise = noise[q];
    }
    return out;
}

} // namespace wfdm
